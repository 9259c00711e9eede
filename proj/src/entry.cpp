#include "spectral_tetris/entry.hpp"

#include "spectral_tetris/errors.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace stetris {

Entry Entry::make(Real radicand, long long order, long long power) {
    if (order < 1) throw ValidationError("root of unity order must be positive");
    if (radicand.sign() < 0) throw ValidationError("negative radicand " + radicand.to_string());
    power %= order;
    if (power < 0) power += order;
    const long long g = std::gcd(power, order);  // gcd(0, q) = q
    Entry e;
    e.radicand = std::move(radicand);
    e.root_order = static_cast<int>(order / g);
    e.root_power = static_cast<int>(power / g);
    return e;
}

std::complex<double> unit_root(int order, long long power) {
    const long long q = order;
    long long p = power % q;
    if (p < 0) p += q;
    const long long quarter_turns = 4 * p;
    const long long quadrant = quarter_turns / q;
    const long long rem = quarter_turns % q;

    double c = 1.0;
    double s = 0.0;
    if (rem != 0) {
        // angle = (pi/2) * rem / q, folded into [0, pi/4]
        if (2 * rem <= q) {
            const double a = std::numbers::pi / 2 * static_cast<double>(rem) / static_cast<double>(q);
            c = std::cos(a);
            s = std::sin(a);
        } else {
            const double a = std::numbers::pi / 2 * static_cast<double>(q - rem) / static_cast<double>(q);
            c = std::sin(a);
            s = std::cos(a);
        }
    }
    switch (quadrant) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

std::complex<double> entry_value(const Entry& e) {
    return std::sqrt(e.radicand.to_double()) * unit_root(e.root_order, e.root_power);
}

}  // namespace stetris
