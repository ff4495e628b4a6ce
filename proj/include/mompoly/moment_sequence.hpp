#ifndef MOMPOLY_MOMENT_SEQUENCE_HPP
#define MOMPOLY_MOMENT_SEQUENCE_HPP

#include "mompoly/scalar.hpp"

#include <memory>
#include <vector>

namespace mompoly {

// A sequence of positive reals m(p) with m(0) = 1, the parameter of the
// moment derivative. Factorial and QFactorial sequences hold exact
// rationals; GammaPower holds doubles (it goes through the Gamma function).
// Values are cached at construction and the object is immutable afterwards,
// so instances can be shared freely across threads.
class MomentSequence {
public:
    enum class Kind { Factorial, GammaPower, QFactorial, Custom };

    // m(p) = p!
    static MomentSequence factorial();
    // m(p) = Gamma(1 + p*mu), mu > 0. mu = 1 agrees with factorial().
    static MomentSequence gamma_power(const Rational& mu);
    // m(p) = [p]_q!, q > 0, q != 1.
    static MomentSequence q_factorial(const Rational& q);
    // Finite table; table[0] must be 1 and every entry positive.
    static MomentSequence custom(std::vector<Scalar> table);

    // m(p). For Custom, p beyond the table is an out-of-range error.
    Scalar moment(int p) const;

    // m(p)/m(p-1) for p >= 1. Equals p for Factorial and [p]_q for
    // QFactorial.
    Scalar ratio(int p) const;

    Kind kind() const { return impl_->kind; }
    // mu or q, depending on kind.
    const Rational& param() const;

    friend bool operator==(const MomentSequence& a, const MomentSequence& b);
    friend bool operator!=(const MomentSequence& a, const MomentSequence& b) { return !(a == b); }

private:
    struct Impl {
        Kind kind;
        Rational param;
        std::vector<Scalar> cache;
        bool finite = false; // Custom tables do not extend past the cache
    };
    explicit MomentSequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    Scalar compute(int p) const;

    std::shared_ptr<const Impl> impl_;
};

} // namespace mompoly

#endif
