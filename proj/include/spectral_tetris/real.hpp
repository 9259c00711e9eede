#pragma once

#include "spectral_tetris/rational.hpp"

#include <compare>
#include <string>
#include <variant>

namespace stetris {

/// A scalar that is either an exact Rational or a double.
///
/// Arithmetic between two exact values stays exact; anything touching a
/// double is carried out in double precision and yields a double. All of the
/// constructions run unchanged on either representation, so rational inputs
/// give exact radicands while irrational inputs fall back to floats.
class Real {
public:
    Real() : value_(Rational(0)) {}
    Real(int v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    Real(long long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    Real(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    static Real inexact(double v) {
        Real r;
        r.value_ = v;
        return r;
    }

    bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }

    /// Throws std::logic_error on a float value.
    const Rational& exact() const;

    double to_double() const;

    /// "p/q" for exact values, otherwise the shortest round-tripping decimal.
    std::string to_string() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
    friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
    friend Real operator-(const Real& x) { return Real(0) - x; }

    friend bool operator==(const Real& a, const Real& b);
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

private:
    std::variant<Rational, double> value_;
};

/// Exact values: x == 0. Floats: |x| <= slack.
bool negligible(const Real& x, double slack);

/// Exact values: denominator 1. Floats: within slack of the nearest integer.
bool near_integer(const Real& x, double slack);

/// a <= b, with `slack` of tolerance when either side is a float.
bool less_equal(const Real& a, const Real& b, double slack);

}  // namespace stetris
