#include "mompoly/moment_sequence.hpp"

#include "mompoly/special_functions.hpp"

#include <stdexcept>

namespace mompoly {

namespace {
// Recursions in this library never reach past n + 2, so a fixed window
// covers all realistic degrees; larger indices fall back to a fresh pure
// computation.
constexpr int kCacheWindow = 24;
} // namespace

MomentSequence MomentSequence::factorial() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Factorial;
    impl->cache.reserve(kCacheWindow + 1);
    Rational m(1);
    impl->cache.emplace_back(m);
    for (int p = 1; p <= kCacheWindow; ++p) {
        m *= p;
        impl->cache.emplace_back(m);
    }
    return MomentSequence(std::move(impl));
}

MomentSequence MomentSequence::gamma_power(const Rational& mu) {
    if (mu <= 0) throw std::domain_error("MomentSequence::gamma_power: mu must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::GammaPower;
    impl->param = mu;
    double mu_d = mu.convert_to<double>();
    for (int p = 0; p <= kCacheWindow; ++p) {
        double arg = 1.0 + p * mu_d;
        if (arg > 170.0) break; // Gamma would overflow; leave uncached
        impl->cache.emplace_back(gamma_fn(arg));
    }
    return MomentSequence(std::move(impl));
}

MomentSequence MomentSequence::q_factorial(const Rational& q) {
    if (q <= 0) throw std::domain_error("MomentSequence::q_factorial: q must be positive");
    if (q == 1) throw std::domain_error("MomentSequence::q_factorial: q = 1 (use factorial)");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::QFactorial;
    impl->param = q;
    Scalar qs{q};
    Scalar m{Rational(1)};
    impl->cache.push_back(m);
    for (int p = 1; p <= kCacheWindow; ++p) {
        m *= q_number(qs, p);
        impl->cache.push_back(m);
    }
    return MomentSequence(std::move(impl));
}

MomentSequence MomentSequence::custom(std::vector<Scalar> table) {
    if (table.empty()) throw std::invalid_argument("MomentSequence::custom: empty table");
    if (table[0] != Scalar(1))
        throw std::invalid_argument("MomentSequence::custom: m(0) must be 1");
    for (const Scalar& v : table)
        if (!(v > Scalar(0)))
            throw std::invalid_argument("MomentSequence::custom: moments must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Custom;
    impl->cache = std::move(table);
    impl->finite = true;
    return MomentSequence(std::move(impl));
}

Scalar MomentSequence::compute(int p) const {
    switch (impl_->kind) {
        case Kind::Factorial: {
            Rational m(1);
            for (int j = 2; j <= p; ++j) m *= j;
            return Scalar(m);
        }
        case Kind::GammaPower:
            return Scalar(gamma_fn(1.0 + p * impl_->param.convert_to<double>()));
        case Kind::QFactorial: {
            Scalar qs{impl_->param};
            Scalar m{Rational(1)};
            for (int j = 1; j <= p; ++j) m *= q_number(qs, j);
            return m;
        }
        case Kind::Custom:
            throw std::out_of_range("MomentSequence: index beyond custom table");
    }
    throw std::logic_error("MomentSequence: unreachable");
}

Scalar MomentSequence::moment(int p) const {
    if (p < 0) throw std::domain_error("MomentSequence::moment: negative index");
    if (p < static_cast<int>(impl_->cache.size())) return impl_->cache[p];
    if (impl_->finite) throw std::out_of_range("MomentSequence: index beyond custom table");
    return compute(p);
}

Scalar MomentSequence::ratio(int p) const {
    if (p < 1) throw std::domain_error("MomentSequence::ratio: index must be >= 1");
    return moment(p) / moment(p - 1);
}

const Rational& MomentSequence::param() const {
    if (impl_->kind != Kind::GammaPower && impl_->kind != Kind::QFactorial)
        throw std::logic_error("MomentSequence::param: sequence has no parameter");
    return impl_->param;
}

bool operator==(const MomentSequence& a, const MomentSequence& b) {
    if (a.impl_ == b.impl_) return true;
    if (a.impl_->kind != b.impl_->kind) return false;
    switch (a.impl_->kind) {
        case MomentSequence::Kind::Factorial:
            return true;
        case MomentSequence::Kind::GammaPower:
        case MomentSequence::Kind::QFactorial:
            return a.impl_->param == b.impl_->param;
        case MomentSequence::Kind::Custom: {
            if (a.impl_->cache.size() != b.impl_->cache.size()) return false;
            for (std::size_t i = 0; i < a.impl_->cache.size(); ++i)
                if (a.impl_->cache[i] != b.impl_->cache[i]) return false;
            return true;
        }
    }
    return false;
}

} // namespace mompoly
