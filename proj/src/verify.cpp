#include "spectral_tetris/verify.hpp"

#include "spectral_tetris/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace stetris {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(std::string_view name) const {
    for (const Check& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

Check make_check(std::string name, double residual, double tol, bool exact) {
    return {std::move(name), residual <= tol, residual, exact};
}

double abs_difference(const Real& a, const Real& b) {
    const Real d = a - b;
    return std::abs(d.to_double());
}

// Sums of radicands per row and per column. Exact whenever every radicand is.
struct RadicandSums {
    std::vector<Real> rows;
    std::vector<Real> cols;
    Real total;
};

RadicandSums radicand_sums(const SynthesisMatrix& f) {
    RadicandSums s{std::vector<Real>(static_cast<std::size_t>(f.rows())), std::vector<Real>(static_cast<std::size_t>(f.cols())), Real()};
    for (const auto& [key, e] : f.entries()) {
        s.cols[static_cast<std::size_t>(key.first)] += e.radicand;
        s.rows[static_cast<std::size_t>(key.second)] += e.radicand;
        s.total += e.radicand;
    }
    return s;
}

}  // namespace

VerificationReport verify_frame(const SynthesisMatrix& f, const Spectrum& lam, double tol) {
    if (lam.dimension() != f.rows())
        throw ValidationError("spectrum has " + std::to_string(lam.dimension()) + " values but matrix has " +
                              std::to_string(f.rows()) + " rows");
    VerificationReport report;
    report.tolerance = tol;

    const bool exact = f.all_exact() && lam.is_exact();
    const RadicandSums sums = radicand_sums(f);
    const FrameOperator s = frame_operator(f);

    std::vector<double> diag(static_cast<std::size_t>(f.rows()), 0.0);
    double off = 0.0;
    for (const auto& [rc, v] : s) {
        if (rc.first == rc.second)
            diag[static_cast<std::size_t>(rc.first)] = v.real();
        else
            off = std::max(off, std::abs(v));
    }

    double col_res = 0.0;
    double diag_res = 0.0;
    if (exact) {
        for (const Real& c : sums.cols) col_res = std::max(col_res, abs_difference(c, Real(1)));
        for (int r = 0; r < f.rows(); ++r)
            diag_res = std::max(diag_res, abs_difference(sums.rows[static_cast<std::size_t>(r)], lam[static_cast<std::size_t>(r)]));
    } else {
        for (int c = 0; c < f.cols(); ++c) {
            double norm2 = 0.0;
            for (const auto& [row, e] : f.column(c)) norm2 += std::norm(entry_value(*e));
            col_res = std::max(col_res, std::abs(norm2 - 1.0));
        }
        for (int r = 0; r < f.rows(); ++r)
            diag_res = std::max(diag_res, std::abs(diag[static_cast<std::size_t>(r)] - lam[static_cast<std::size_t>(r)].to_double()));
    }
    const double trace_res = exact ? abs_difference(sums.total, Real(f.cols()))
                                   : std::abs(std::accumulate(diag.begin(), diag.end(), 0.0) - f.cols());

    report.checks.push_back(make_check("column_norm", col_res, tol, exact));
    report.checks.push_back(make_check("off_diagonal", off, tol, false));
    report.checks.push_back(make_check("diagonal", diag_res, tol, exact));
    report.checks.push_back(make_check("trace", trace_res, tol, exact));
    if (!diag.empty()) {
        const auto [lo, hi] = std::minmax_element(diag.begin(), diag.end());
        report.lower_frame_bound = *lo;
        report.upper_frame_bound = *hi;
    }
    return report;
}

VerificationReport verify_fusion(const SynthesisMatrix& f, const FusionPartition& partition, std::span<const int> dims,
                                 const Spectrum& lam, double tol) {
    if (partition.groups.size() != dims.size())
        throw ValidationError("partition has " + std::to_string(partition.groups.size()) + " groups but " +
                              std::to_string(dims.size()) + " dimensions were given");
    std::vector<int> owner(static_cast<std::size_t>(f.cols()), -1);
    for (std::size_t g = 0; g < partition.groups.size(); ++g) {
        if (partition.groups[g].empty()) throw ValidationError("group " + std::to_string(g) + " is empty");
        for (int c : partition.groups[g]) {
            if (c < 0 || c >= f.cols()) throw ValidationError("column " + std::to_string(c) + " is out of range");
            if (owner[static_cast<std::size_t>(c)] != -1)
                throw ValidationError("column " + std::to_string(c) + " appears in more than one group");
            owner[static_cast<std::size_t>(c)] = static_cast<int>(g);
        }
    }
    for (int c = 0; c < f.cols(); ++c)
        if (owner[static_cast<std::size_t>(c)] == -1) throw ValidationError("column " + std::to_string(c) + " is in no group");

    VerificationReport report;
    report.tolerance = tol;

    double size_res = 0.0;
    for (std::size_t g = 0; g < dims.size(); ++g)
        size_res = std::max(size_res, std::abs(static_cast<double>(partition.groups[g].size()) - dims[g]));
    report.checks.push_back(make_check("group_sizes", size_res, 0.0, true));

    // Gram entries of a group are nonzero only for columns meeting on a row.
    double gram_res = 0.0;
    std::vector<std::vector<std::pair<int, std::complex<double>>>> by_row(static_cast<std::size_t>(f.rows()));
    for (const auto& group : partition.groups) {
        std::map<std::pair<int, int>, std::complex<double>> gram;
        std::vector<int> touched;
        for (int c : group) {
            gram[{c, c}] += 0.0;
            for (const auto& [row, e] : f.column(c)) {
                auto& cell = by_row[static_cast<std::size_t>(row)];
                if (cell.empty()) touched.push_back(row);
                cell.emplace_back(c, entry_value(*e));
            }
        }
        for (int row : touched) {
            auto& cell = by_row[static_cast<std::size_t>(row)];
            for (std::size_t a = 0; a < cell.size(); ++a)
                for (std::size_t b = a; b < cell.size(); ++b)
                    gram[{cell[a].first, cell[b].first}] += std::conj(cell[a].second) * cell[b].second;
            cell.clear();
        }
        for (const auto& [ij, v] : gram)
            gram_res = std::max(gram_res, std::abs(v - (ij.first == ij.second ? 1.0 : 0.0)));
    }
    report.checks.push_back(make_check("group_gram", gram_res, tol, false));
    report.checks.push_back(make_check("frame_operator", gram_diag_residual(f, lam), tol, false));

    const FrameOperator s = frame_operator(f);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int r = 0; r < f.rows(); ++r) {
        const auto it = s.find({r, r});
        const double d = it == s.end() ? 0.0 : it->second.real();
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    report.lower_frame_bound = f.rows() > 0 ? lo : 0.0;
    report.upper_frame_bound = hi;
    return report;
}

long long tight_sparsity_formula(int n, int m) {
    if (!(n < m && m < 2 * n)) throw ValidationError("sparsity formula needs N < M < 2N");
    const int g = std::gcd(n, m);
    const long long np = n / g;
    const long long mp = m / g;
    const long long k = mp - np + 1;
    const long long l = mp / k;
    const long long r = k * (l + 1) - mp;
    return g * (r * l * l + (k - r) * (l + 1) * (l + 1));
}

SparsityReport sparsity(const SynthesisMatrix& f) {
    SparsityReport out;
    out.structural_nonzeros = static_cast<long long>(f.nonzeros());
    if (f.method() == ConstructionMethod::tdftst && f.rows() < f.cols() && f.cols() < 2 * f.rows()) {
        out.formula_value = tight_sparsity_formula(f.rows(), f.cols());
        out.optimal = out.structural_nonzeros == *out.formula_value;
    }
    return out;
}

}  // namespace stetris
