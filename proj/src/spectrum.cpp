#include "spectral_tetris/spectrum.hpp"

#include "spectral_tetris/errors.hpp"

#include <algorithm>
#include <cmath>

namespace stetris {

Spectrum::Spectrum(std::vector<Real> values, SpectrumOrder order) : values_(std::move(values)), order_(order) {
    if (values_.empty()) throw ValidationError("spectrum must contain at least one eigenvalue");
    Real sum;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i].sign() <= 0)
            throw ValidationError("eigenvalue " + std::to_string(i + 1) + " is not positive (" + values_[i].to_string() + ")");
        sum += values_[i];
    }
    if (!near_integer(sum, kTraceSlack))
        throw ValidationError("trace " + sum.to_string() + " is not an integer");
    total_ = static_cast<int>(std::llround(sum.to_double()));
}

Spectrum Spectrum::tight(int n, int m) {
    if (n < 1 || m < 1) throw ValidationError("tight spectrum needs positive N and M");
    return Spectrum(std::vector<Real>(static_cast<std::size_t>(n), Real(make_rational(m, n))));
}

bool Spectrum::is_exact() const {
    return std::all_of(values_.begin(), values_.end(), [](const Real& v) { return v.is_exact(); });
}

bool Spectrum::all_at_least(const Real& bound) const {
    return std::all_of(values_.begin(), values_.end(), [&](const Real& v) { return v >= bound; });
}

bool Spectrum::is_constant() const {
    return std::all_of(values_.begin(), values_.end(), [&](const Real& v) { return v == values_.front(); });
}

Spectrum Spectrum::sorted_decreasing() const {
    auto v = values_;
    std::stable_sort(v.begin(), v.end(), [](const Real& a, const Real& b) { return a > b; });
    return Spectrum(std::move(v), SpectrumOrder::decreasing);
}

Spectrum Spectrum::permuted(std::span<const int> perm, SpectrumOrder order) const {
    if (perm.size() != values_.size()) throw ValidationError("permutation length does not match spectrum");
    std::vector<Real> v;
    v.reserve(perm.size());
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= dimension() || seen[static_cast<std::size_t>(p)])
            throw ValidationError("not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
        v.push_back(values_[static_cast<std::size_t>(p)]);
    }
    return Spectrum(std::move(v), order);
}

}  // namespace stetris
