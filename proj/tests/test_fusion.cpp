#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "spectral_tetris/errors.hpp"
#include "spectral_tetris/fusion.hpp"
#include "spectral_tetris/verify.hpp"

using namespace stetris;
using oracle::Q;

namespace {

Spectrum spectrum(std::initializer_list<Q> v) { return oracle::to_spectrum(std::vector<Q>(v)); }

SynthesisMatrix example_frame() { return stc(spectrum({Q(5, 2), Q(10, 3), Q(13, 6)})); }

}  // namespace

TEST_CASE("dimension profiles keep the caller's order") {
    const DimensionProfile d({1, 3, 2, 3});
    CHECK(std::vector<int>(d.sorted().begin(), d.sorted().end()) == std::vector<int>{3, 3, 2, 1});
    for (std::size_t i = 0; i < 4; ++i) CHECK(d.sorted()[i] == d.given()[d.order()[i]]);
    CHECK(d.total() == 9);
    CHECK_THROWS_AS(DimensionProfile({2, 0}), ValidationError);
    CHECK_THROWS_AS(DimensionProfile(std::vector<int>{}), ValidationError);
}

TEST_CASE("majorizes examples") {
    const std::vector<int> a{6, 6, 4, 2};
    CHECK(majorizes(a, std::vector<int>{6, 5, 4, 3}));
    CHECK_FALSE(majorizes(a, std::vector<int>{6, 6, 5, 1}));
    CHECK(majorizes(a, a));
    CHECK(majorizes(std::vector<int>{7, 7}, std::vector<int>{7, 6, 1}));
    CHECK_FALSE(majorizes(std::vector<int>{3}, std::vector<int>{2}));
    CHECK(majorizes(std::vector<int>{2, 4}, std::vector<int>{1, 1, 4}));
}

TEST_CASE("majorizes agrees with brute-force prefix sums") {
    for (int total = 1; total <= 9; ++total) {
        const auto parts = oracle::integer_partitions(total);
        for (const auto& a : parts)
            for (const auto& b : parts) CHECK(majorizes(a, b) == oracle::dominates(a, b));
    }
}

TEST_CASE("integer_reference_dims examples") {
    CHECK(integer_reference_dims(spectrum({4, 4, 3, 3, 2, 2})) == std::vector<int>{6, 6, 4, 2});
    CHECK(integer_reference_dims(spectrum({1, 1, 1})) == std::vector<int>{3});
    CHECK(integer_reference_dims(spectrum({5, 2, 1})) == std::vector<int>{3, 2, 1, 1, 1});
    CHECK(reference_fusion_frame(spectrum({5, 2, 1})).dims == std::vector<int>{3, 2, 1, 1, 1});
    CHECK_THROWS_AS(integer_reference_dims(spectrum({Q(3, 2), Q(3, 2)})), ValidationError);
}

TEST_CASE("reference fusion frame examples") {
    const ReferenceFusionFrame v = reference_fusion_frame(spectrum({Q(5, 2), Q(10, 3), Q(13, 6)}));
    CHECK(v.partition.groups == std::vector<std::vector<int>>{{0, 4, 7}, {1, 5}, {2}, {3}, {6}});
    CHECK(v.dims == std::vector<int>{3, 2, 1, 1, 1});
    CHECK(v.max_row_support == 5);

    const ReferenceFusionFrame w = reference_fusion_frame(spectrum({Q(10, 3), Q(5, 2), Q(13, 6)}));
    CHECK(w.partition.groups == std::vector<std::vector<int>>{{0, 5}, {1, 6}, {2, 7}, {3}, {4}});
    CHECK(w.dims == std::vector<int>{2, 2, 2, 1, 1});

    const ReferenceFusionFrame p = reference_fusion_frame(spectrum({4, 4, 3, 3, 2, 2}));
    CHECK(p.dims == std::vector<int>{6, 6, 4, 2});

    const ReferenceFusionFrame t = reference_fusion_frame(Spectrum::tight(7, 10));
    CHECK(t.dims == std::vector<int>{2, 2, 2, 2, 1, 1});
}

TEST_CASE("reference fusion frame invariants on random spectra") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 15)(rng);
        const int m = std::uniform_int_distribution<int>(n, 4 * n)(rng);
        const auto spec = oracle::random_spectrum(rng, n, m, 12);
        const Spectrum lam = oracle::to_spectrum(spec.values, SpectrumOrder::given);
        const ReferenceFusionFrame ref = reference_fusion_frame(lam);
        CHECK(static_cast<int>(ref.dims.size()) == ref.max_row_support);
        CHECK(std::is_sorted(ref.dims.rbegin(), ref.dims.rend()));
        const VerificationReport r = verify_fusion(ref.frame, ref.partition, ref.dims, lam);
        CHECK(r.passed());

        bool integral = true;
        for (const auto& v : spec.values) integral = integral && denominator(v) == 1;
        if (integral) {
            auto sorted = spec.values;
            std::sort(sorted.rbegin(), sorted.rend());
            CHECK(integer_reference_dims(oracle::to_spectrum(sorted)) == reference_fusion_frame(oracle::to_spectrum(sorted)).dims);
        }
    }
}

TEST_CASE("maximal_chains examples") {
    SynthesisMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, Entry::make(Real(1)));
    const std::vector<int> a{0}, b{2};
    const auto singles = maximal_chains(a, b, id);
    REQUIRE(singles.size() == 2);
    CHECK(singles[0].members == std::vector<int>{0});
    CHECK(singles[1].members == std::vector<int>{2});

    SynthesisMatrix band(3, 2);
    band.set(0, 0, Entry::make(make_rational(1, 2)));
    band.set(1, 0, Entry::make(make_rational(1, 2)));
    band.set(1, 1, Entry::make(make_rational(1, 2)));
    band.set(2, 1, Entry::make(make_rational(1, 2)));
    const std::vector<int> c0{0}, c1{1};
    const auto one = maximal_chains(c0, c1, band);
    REQUIRE(one.size() == 1);
    CHECK(one[0].members == std::vector<int>{0, 1});
    CHECK(one[0].first_row == 0);
    CHECK(one[0].last_row == 2);

    const SynthesisMatrix f = example_frame();
    const std::vector<int> f3{2}, f4{3};
    const auto pair = maximal_chains(f3, f4, f);
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].members == std::vector<int>{2, 3});
    CHECK(pair[0].from_a == 1);
    CHECK(pair[0].from_b == 1);

    const std::vector<int> clash{2, 3}, empty{};
    CHECK_THROWS_AS(maximal_chains(clash, empty, f), ValidationError);
}

TEST_CASE("build_fusion_frame examples") {
    const Spectrum lam = spectrum({4, 4, 3, 3, 2, 2});
    const FusionFrame ok = build_fusion_frame(lam, DimensionProfile({6, 5, 4, 3}));
    CHECK(ok.partition.sizes() == std::vector<int>{6, 5, 4, 3});
    CHECK(verify_fusion(ok.frame, ok.partition, std::vector<int>{6, 5, 4, 3}, lam).passed());

    try {
        build_fusion_frame(lam, DimensionProfile({6, 6, 5, 1}));
        FAIL("expected MajorizationFailed");
    } catch (const MajorizationFailed& e) {
        CHECK_FALSE(e.certified_nonexistence());
    }

    const Spectrum tight = Spectrum::tight(7, 14);
    const FusionFrame t = build_fusion_frame(tight, DimensionProfile({7, 6, 1}));
    CHECK(t.reference_dims == std::vector<int>{7, 7});
    CHECK(t.partition.sizes() == std::vector<int>{7, 6, 1});
    CHECK(verify_fusion(t.frame, t.partition, std::vector<int>{7, 6, 1}, tight).passed());
    CHECK(gram_diag_residual(t.frame, tight) <= 1e-12);

    try {
        build_fusion_frame(tight, DimensionProfile({8, 6}));
        FAIL("expected MajorizationFailed");
    } catch (const MajorizationFailed& e) {
        CHECK(e.certified_nonexistence());
    }
    CHECK_THROWS_AS(build_fusion_frame(tight, DimensionProfile({7, 6})), ValidationError);
}

TEST_CASE("results come back in the caller's order") {
    const Spectrum lam = spectrum({4, 4, 3, 3, 2, 2});
    const FusionFrame f = build_fusion_frame(lam, DimensionProfile({3, 6, 4, 5}));
    CHECK(f.partition.sizes() == std::vector<int>{3, 6, 4, 5});
    CHECK(verify_fusion(f.frame, f.partition, std::vector<int>{3, 6, 4, 5}, lam).passed());
}

TEST_CASE("rebalancing with moves and chain swaps") {
    // Reference dims (3,2,1,1,1) rebalanced to (2,2,2,1,1).
    const Spectrum lam = spectrum({Q(5, 2), Q(10, 3), Q(13, 6)});
    int swaps = 0;
    int last = -1;
    const FusionFrame f = build_fusion_frame(lam, DimensionProfile({2, 2, 2, 1, 1}), [&](const RebalanceStep& s) {
        swaps += s.kind == RebalanceCase::chain_swap;
        CHECK(s.discrepancy_after < s.discrepancy_before);
        if (last >= 0) CHECK(s.discrepancy_before == last);
        last = s.discrepancy_after;
    });
    CHECK(f.partition.sizes() == std::vector<int>{2, 2, 2, 1, 1});
    CHECK(verify_fusion(f.frame, f.partition, std::vector<int>{2, 2, 2, 1, 1}, lam).passed());
    CHECK(f.iterations <= f.initial_discrepancy);

    // Tight 15 vectors in C^9: reference dims (6,3,3,3).
    const Spectrum tight = Spectrum::tight(9, 15);
    int tight_swaps = 0;
    const FusionFrame g = build_fusion_frame(tight, DimensionProfile({3, 3, 5, 4}), [&](const RebalanceStep& st) {
        tight_swaps += st.kind == RebalanceCase::chain_swap;
        if (st.kind == RebalanceCase::chain_swap) CHECK(st.to_receiver.size() == st.to_donor.size() + 1);
    });
    CHECK(g.reference_dims == std::vector<int>{6, 3, 3, 3});
    CHECK(tight_swaps > 0);
    CHECK(verify_fusion(g.frame, g.partition, std::vector<int>{3, 3, 5, 4}, tight).passed());

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 10)(rng);
        const int m = std::uniform_int_distribution<int>(n, 3 * n)(rng);
        const Spectrum s = oracle::to_spectrum(oracle::random_spectrum(rng, n, m, 6).values);
        const ReferenceFusionFrame ref = reference_fusion_frame(s);
        const auto dims = oracle::random_majorized(rng, ref.dims, std::uniform_int_distribution<int>(1, 2 * m)(rng));
        REQUIRE(majorizes(ref.dims, dims));
        const FusionFrame ff = build_fusion_frame(s, DimensionProfile(dims));
        CHECK(ff.iterations <= ff.initial_discrepancy);
        CHECK(verify_fusion(ff.frame, ff.partition, dims, s).passed());
    }
}

TEST_CASE("tight necessity on small instances") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 2 * n; m <= 8; ++m) {
            const Spectrum lam = Spectrum::tight(n, m);
            const ReferenceFusionFrame ref = reference_fusion_frame(lam);
            const auto dense = oracle::dense(ref.frame);
            for (const auto& d : oracle::integer_partitions(m)) {
                const bool exists = oracle::orthonormal_partition_exists(dense, d);
                CHECK(exists == majorizes(ref.dims, d));
            }
        }
}
