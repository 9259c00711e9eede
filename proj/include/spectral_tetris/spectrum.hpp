#pragma once

#include "spectral_tetris/real.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace stetris {

enum class SpectrumOrder { given, decreasing, blockwise_heuristic };

/// Prescribed frame-operator eigenvalues lambda_1..lambda_N.
///
/// Every value is positive and the values sum to an integer M, the number of
/// frame vectors. Float values are accepted when the trace is within 1e-9 of
/// an integer.
class Spectrum {
public:
    static constexpr double kTraceSlack = 1e-9;

    /// Throws ValidationError on an empty list, a non-positive value or a
    /// non-integer trace.
    explicit Spectrum(std::vector<Real> values, SpectrumOrder order = SpectrumOrder::given);

    /// N copies of M/N.
    static Spectrum tight(int n, int m);

    int dimension() const noexcept { return static_cast<int>(values_.size()); }
    int vector_count() const noexcept { return total_; }
    std::span<const Real> values() const noexcept { return values_; }
    const Real& operator[](std::size_t i) const { return values_[i]; }
    SpectrumOrder order() const noexcept { return order_; }

    bool is_exact() const;
    bool all_at_least(const Real& bound) const;
    /// All values equal (so each is M/N).
    bool is_constant() const;

    Spectrum sorted_decreasing() const;
    /// values()[perm[0]], values()[perm[1]], ...
    Spectrum permuted(std::span<const int> perm, SpectrumOrder order) const;

private:
    std::vector<Real> values_;
    SpectrumOrder order_;
    int total_ = 0;
};

}  // namespace stetris
