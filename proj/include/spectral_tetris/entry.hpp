#pragma once

#include "spectral_tetris/real.hpp"

#include <complex>

namespace stetris {

/// sqrt(radicand) * exp(2*pi*i * power / order).
///
/// The phase is kept in lowest terms (power/order reduced, power 0 means
/// order 1) so two entries with equal values compare equal.
struct Entry {
    Real radicand;
    int root_order = 1;
    int root_power = 0;

    /// Normalizes the phase; throws ValidationError on a negative radicand or
    /// a non-positive order.
    static Entry make(Real radicand, long long order = 1, long long power = 0);

    bool is_exact() const { return radicand.is_exact(); }

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// exp(2*pi*i * power / order), reduced to the first octant before the
/// trigonometric evaluation so the result is accurate to about one ulp.
std::complex<double> unit_root(int order, long long power);

std::complex<double> entry_value(const Entry& e);

}  // namespace stetris
