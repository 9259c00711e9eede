#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "spectral_tetris/construct.hpp"
#include "spectral_tetris/errors.hpp"
#include "spectral_tetris/synthesis_matrix.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace stetris;
using oracle::Q;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("5/2") == make_rational(5, 2));
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK(parse_rational("+7") == make_rational(7));
    CHECK(parse_rational("010/007") == make_rational(10, 7));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("1.5"));
    CHECK_FALSE(parse_rational("/3"));
    CHECK_FALSE(parse_rational(""));
    CHECK(to_string(make_rational(26, 12)) == "13/6");
    CHECK(to_string(make_rational(-4, 2)) == "-2");
}

TEST_CASE("Real stays exact between rationals and falls back to double") {
    const Real a = make_rational(1, 3);
    const Real b = make_rational(2, 3);
    CHECK((a + b).is_exact());
    CHECK(a + b == Real(1));
    CHECK((a * b).exact() == make_rational(2, 9));
    CHECK((a / b).exact() == make_rational(1, 2));
    const Real f = Real::inexact(0.5);
    CHECK_FALSE((a + f).is_exact());
    CHECK((Real(1) + f).to_double() == 1.5);
    CHECK(Real(make_rational(1, 2)) == Real::inexact(0.5));
    CHECK(a < b);
    CHECK(Real::inexact(2.5) > Real(2));
    CHECK_THROWS_AS((void)f.exact(), std::logic_error);
    CHECK(negligible(Real::inexact(1e-13), 1e-12));
    CHECK_FALSE(negligible(Real(make_rational(1, 1000000000)), 1e-3));
    CHECK(near_integer(Real::inexact(3.0 + 1e-12), 1e-9));
    CHECK(less_equal(Real(2), Real::inexact(2.0 - 1e-14), 1e-12));
    CHECK_FALSE(less_equal(Real(2), Real(make_rational(1999, 1000)), 1e-12));
}

TEST_CASE("entry phases are normalized") {
    const Entry e = Entry::make(Real(1), 6, 3);
    CHECK(e.root_order == 2);
    CHECK(e.root_power == 1);
    const Entry z = Entry::make(Real(1), 5, 10);
    CHECK(z.root_order == 1);
    CHECK(z.root_power == 0);
    CHECK(Entry::make(Real(1), 3, -1) == Entry::make(Real(1), 3, 2));
    CHECK_THROWS_AS(Entry::make(Real(-1)), ValidationError);
    CHECK_THROWS_AS(Entry::make(Real(1), 0, 0), ValidationError);
}

TEST_CASE("entry_value examples") {
    const auto v = entry_value(Entry::make(make_rational(5, 8)));
    CHECK(v.real() == doctest::Approx(0.790569415042094832).epsilon(1e-15));
    CHECK(v.imag() == 0.0);
    CHECK(entry_value(Entry::make(Real(1), 2, 1)) == std::complex<double>(-1.0, 0.0));

    const auto w = entry_value(Entry::make(make_rational(5, 12), 3, 2));
    const double s = std::sqrt(5.0 / 12.0);
    CHECK(std::abs(w - s * std::complex<double>(-0.5, -std::sqrt(3.0) / 2)) < 1e-15);
}

TEST_CASE("unit roots are within 4 ulp of an extended-precision evaluation") {
    const long double two_pi = 2.0L * std::acos(-1.0L);
    for (int q = 1; q <= 64; ++q)
        for (int p = 0; p < q; ++p) {
            const auto ref = std::polar(1.0L, two_pi * p / q);
            const auto got = unit_root(q, p);
            const long double err = std::abs(std::complex<long double>(got.real(), got.imag()) - ref);
            CHECK(err <= 4 * std::numeric_limits<double>::epsilon());
        }
}

TEST_CASE("materialized modulus matches the radicand") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(1, 120), den(1, 12), ord(1, 40);
    for (int i = 0; i < 2000; ++i) {
        const Real rad = make_rational(num(rng), den(rng));
        if (rad > Real(10)) continue;
        const int q = ord(rng);
        const Entry e = Entry::make(rad, q, std::uniform_int_distribution<int>(0, q - 1)(rng));
        CHECK(std::abs(std::norm(entry_value(e)) - rad.to_double()) <= 1e-14);
    }
}

TEST_CASE("spectrum validation") {
    const Spectrum lam({make_rational(5, 2), make_rational(10, 3), make_rational(13, 6)});
    CHECK(lam.dimension() == 3);
    CHECK(lam.vector_count() == 8);
    CHECK(lam.is_exact());
    CHECK_THROWS_AS(Spectrum({Real(1), make_rational(1, 2)}), ValidationError);
    CHECK_THROWS_AS(Spectrum({Real(2), Real(0)}), ValidationError);
    CHECK_THROWS_AS(Spectrum({Real(3), Real(-1)}), ValidationError);
    CHECK_THROWS_AS(Spectrum(std::vector<Real>{}), ValidationError);
    const Spectrum f({Real::inexact(std::sqrt(2.0)), Real::inexact(3.0 - std::sqrt(2.0))});
    CHECK(f.vector_count() == 3);
    CHECK_FALSE(f.is_exact());

    const Spectrum t = Spectrum::tight(4, 5);
    CHECK(t.is_constant());
    CHECK(t[0] == Real(make_rational(5, 4)));

    const Spectrum s = Spectrum({Real(1), Real(3), Real(2)}).sorted_decreasing();
    CHECK(s[0] == Real(3));
    CHECK(s[2] == Real(1));
    CHECK(s.order() == SpectrumOrder::decreasing);
    const std::vector<int> perm{2, 0, 1};
    CHECK(lam.permuted(perm, SpectrumOrder::given)[0] == Real(make_rational(13, 6)));
    const std::vector<int> bad{0, 0, 1};
    CHECK_THROWS_AS(lam.permuted(bad, SpectrumOrder::given), ValidationError);
}

TEST_CASE("synthesis matrix storage") {
    SynthesisMatrix f(2, 3);
    f.set(0, 0, Entry::make(Real(1)));
    f.set(1, 2, Entry::make(make_rational(1, 2), 2, 1));
    CHECK(f.nonzeros() == 2);
    CHECK(f.find(1, 2)->root_order == 2);
    CHECK(f.find(0, 1) == nullptr);
    CHECK_THROWS_AS(f.set(0, 0, Entry::make(Real(1))), ValidationError);
    CHECK_THROWS_AS(f.set(2, 0, Entry::make(Real(1))), ValidationError);
    CHECK_THROWS_AS(f.set(0, 1, Entry::make(Real(0))), ValidationError);
    CHECK(f.column_support(2) == std::vector<int>{1});
    CHECK(f.row_support_sizes() == std::vector<int>{1, 1});
    CHECK_THROWS_AS(SynthesisMatrix(0, 1), ValidationError);
}

TEST_CASE("gram_diag_residual examples") {
    CHECK(gram_diag_residual(tdftst(4, 5), Spectrum::tight(4, 5)) <= 1e-12);

    SynthesisMatrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.set(i, i, Entry::make(Real(1)));
    CHECK(gram_diag_residual(id, Spectrum::tight(4, 4)) == 0.0);

    const Spectrum lam({make_rational(5, 2), make_rational(10, 3), make_rational(13, 6)});
    CHECK(gram_diag_residual(stc(lam, {.allow_small_eigenvalues = true}), lam) <= 1e-12);

    CHECK_THROWS_AS(gram_diag_residual(id, Spectrum::tight(3, 3)), ValidationError);

    // An empty row still counts against its eigenvalue.
    SynthesisMatrix gap(2, 2);
    gap.set(0, 0, Entry::make(Real(1)));
    gap.set(0, 1, Entry::make(Real(1)));
    CHECK(gram_diag_residual(gap, Spectrum::tight(2, 2)) == doctest::Approx(1.0));
}

TEST_CASE("sparse frame operator matches dense summation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const int m = std::uniform_int_distribution<int>(n, 3 * n)(rng);
        const auto spec = oracle::random_spectrum(rng, n, m, 12);
        const Spectrum lam = oracle::to_spectrum(spec.values);
        const SynthesisMatrix f = dftst(lam);
        const auto dense = oracle::frame_operator(oracle::dense(f));
        const FrameOperator sparse = frame_operator(f);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                const auto it = sparse.find({a, b});
                const std::complex<double> v = it == sparse.end() ? 0.0 : it->second;
                CHECK(std::abs(v - dense[a][b]) < 1e-12);
            }
    }
}

TEST_CASE("constructed frames are exact and column supports are intervals") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 15)(rng);
        const int m = std::uniform_int_distribution<int>(n, 4 * n)(rng);
        const auto spec = oracle::random_spectrum(rng, n, m, 12);
        const Spectrum lam = oracle::to_spectrum(spec.values);
        const SynthesisMatrix f = dftst(lam);
        REQUIRE(f.all_exact());
        std::vector<Q> rows(static_cast<std::size_t>(n));
        for (const auto& [key, e] : f.entries()) rows[key.second] += e.radicand.exact();
        for (int r = 0; r < n; ++r) CHECK(rows[r] == spec.values[r]);
        for (int c = 0; c < f.cols(); ++c) {
            const auto s = f.column_support(c);
            REQUIRE_FALSE(s.empty());
            CHECK(s.back() - s.front() + 1 == static_cast<int>(s.size()));
        }
    }
}
