#ifndef MOMPOLY_SCALAR_HPP
#define MOMPOLY_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace mompoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Two-mode arithmetic kernel used for every polynomial coefficient: an exact
// arbitrary-precision rational, or a double. Exact arithmetic is closed (it
// never silently demotes); any operation mixing the two modes promotes the
// result to Float.
class Scalar {
public:
    enum class Mode { Exact, Float };

    Scalar() : value_(Rational(0)) {}
    Scalar(int v) : value_(Rational(v)) {}
    Scalar(long v) : value_(Rational(v)) {}
    Scalar(long long v) : value_(Rational(v)) {}
    Scalar(Rational v) : value_(std::move(v)) {}
    Scalar(Integer v) : value_(Rational(std::move(v))) {}
    Scalar(double v) : value_(v) {}

    static Scalar exact(long long num, long long den = 1) {
        if (den == 0) throw std::domain_error("Scalar::exact: zero denominator");
        return Scalar(Rational(num, den));
    }

    Mode mode() const {
        return std::holds_alternative<Rational>(value_) ? Mode::Exact : Mode::Float;
    }
    bool is_exact() const { return mode() == Mode::Exact; }

    bool is_zero() const {
        if (is_exact()) return std::get<Rational>(value_) == 0;
        return std::get<double>(value_) == 0.0;
    }

    double as_double() const {
        if (is_exact()) return std::get<Rational>(value_).convert_to<double>();
        return std::get<double>(value_);
    }

    const Rational& rational() const {
        if (!is_exact()) throw std::logic_error("Scalar::rational: value is in Float mode");
        return std::get<Rational>(value_);
    }

    Scalar operator-() const {
        if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
        return Scalar(-std::get<double>(value_));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return Scalar(a.rational() + b.rational());
        return Scalar(a.as_double() + b.as_double());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return Scalar(a.rational() - b.rational());
        return Scalar(a.as_double() - b.as_double());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return Scalar(a.rational() * b.rational());
        return Scalar(a.as_double() * b.as_double());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        if (a.is_exact() && b.is_exact()) return Scalar(a.rational() / b.rational());
        return Scalar(a.as_double() / b.as_double());
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
        return a.as_double() == b.as_double();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
        return a.as_double() < b.as_double();
    }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

    // "p/q" (or plain integer) in Exact mode, 17-significant-digit decimal in
    // Float mode. Parsed back by scalar_from_string in serialize.hpp.
    std::string str() const;

private:
    std::variant<Rational, double> value_;
};

inline Scalar abs(const Scalar& s) { return s < Scalar(0) ? -s : s; }

} // namespace mompoly

#endif
