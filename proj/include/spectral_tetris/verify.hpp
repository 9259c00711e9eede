#pragma once

#include "spectral_tetris/synthesis_matrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stetris {

inline constexpr double kDefaultTolerance = 1e-9;

struct Check {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
    /// Decided in exact radicand arithmetic rather than on floats.
    bool exact = false;
    friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
    std::vector<Check> checks;
    double tolerance = kDefaultTolerance;
    /// Smallest and largest diagonal entry of FF*.
    double lower_frame_bound = 0.0;
    double upper_frame_bound = 0.0;

    bool passed() const;
    const Check* find(std::string_view name) const;
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Checks "column_norm", "off_diagonal", "diagonal" and "trace". Throws
/// ValidationError when lam.dimension() != f.rows().
VerificationReport verify_frame(const SynthesisMatrix& f, const Spectrum& lam, double tol = kDefaultTolerance);

/// Checks "group_sizes", "group_gram" and "frame_operator". Throws
/// ValidationError if `partition` is not a partition of the columns of `f`
/// or the number of groups differs from dims.size().
VerificationReport verify_fusion(const SynthesisMatrix& f, const FusionPartition& partition, std::span<const int> dims,
                                 const Spectrum& lam, double tol = kDefaultTolerance);

struct SparsityReport {
    long long structural_nonzeros = 0;
    /// r L^2 + (K - r)(L + 1)^2, scaled by gcd(N, M); only for tdftst output.
    std::optional<long long> formula_value;
    std::optional<bool> optimal;
};

/// Closed-form sparsity of tdftst(n, m); requires n < m < 2n.
long long tight_sparsity_formula(int n, int m);

SparsityReport sparsity(const SynthesisMatrix& f);

}  // namespace stetris
