#include "spectral_tetris/real.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace stetris {

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// cpp_int reads a leading zero as an octal prefix.
std::string decimal_digits(std::string_view s) {
    const auto first = s.find_first_not_of('0');
    return first == std::string_view::npos ? std::string("0") : std::string(s.substr(first));
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    BigInt n{decimal_digits(num)};
    BigInt d{decimal_digits(den)};
    if (d == 0) return std::nullopt;
    Rational q(n, d);
    return negative ? Rational(-q) : q;
}

const Rational& Real::exact() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return *q;
    throw std::logic_error("Real::exact() called on a float value");
}

double Real::to_double() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return stetris::to_double(*q);
    return std::get<double>(value_);
}

std::string Real::to_string() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return stetris::to_string(*q);
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
    return std::string(buf, res.ptr);
}

int Real::sign() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return q->sign();
    const double d = std::get<double>(value_);
    return (d > 0) - (d < 0);
}

namespace {

double as_double(const std::variant<Rational, double>& v) {
    return std::holds_alternative<Rational>(v) ? to_double(std::get<Rational>(v)) : std::get<double>(v);
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
    if (auto* q = std::get_if<Rational>(&value_); q && rhs.is_exact()) {
        *q += rhs.exact();
    } else {
        value_ = as_double(value_) + rhs.to_double();
    }
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    if (auto* q = std::get_if<Rational>(&value_); q && rhs.is_exact()) {
        *q -= rhs.exact();
    } else {
        value_ = as_double(value_) - rhs.to_double();
    }
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    if (auto* q = std::get_if<Rational>(&value_); q && rhs.is_exact()) {
        *q *= rhs.exact();
    } else {
        value_ = as_double(value_) * rhs.to_double();
    }
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    if (auto* q = std::get_if<Rational>(&value_); q && rhs.is_exact()) {
        *q /= rhs.exact();
    } else {
        value_ = as_double(value_) / rhs.to_double();
    }
    return *this;
}

bool operator==(const Real& a, const Real& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (a.is_exact() && b.is_exact()) {
        const int c = a.exact().compare(b.exact());
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }
    return a.to_double() <=> b.to_double();
}

bool negligible(const Real& x, double slack) {
    if (x.is_exact()) return x.is_zero();
    return std::abs(x.to_double()) <= slack;
}

bool near_integer(const Real& x, double slack) {
    if (x.is_exact()) return is_integer(x.exact());
    const double d = x.to_double();
    return std::abs(d - std::round(d)) <= slack;
}

bool less_equal(const Real& a, const Real& b, double slack) {
    if (a.is_exact() && b.is_exact()) return a.exact() <= b.exact();
    return a.to_double() <= b.to_double() + slack;
}

}  // namespace stetris
