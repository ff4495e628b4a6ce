#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mompoly/moment_sequence.hpp"
#include "mompoly/special_functions.hpp"
#include "support.hpp"

#include <cmath>

using namespace mompoly;
using testsupport::rel_close;

TEST_CASE("exact scalar arithmetic is closed, mixing promotes") {
    Scalar third = Scalar::exact(1, 3);
    Scalar sixth = Scalar::exact(1, 6);
    Scalar half = third + sixth;
    CHECK(half.is_exact());
    CHECK(half.rational() == Rational(1, 2));
    CHECK((third * sixth).rational() == Rational(1, 18));
    CHECK((third / sixth).rational() == 2);

    Scalar mixed = third + Scalar(0.5);
    CHECK(!mixed.is_exact());
    CHECK(rel_close(mixed.as_double(), 5.0 / 6.0, 1e-15));

    CHECK_THROWS_AS(third / Scalar(0), std::domain_error);
    CHECK(Scalar::exact(-4, 8).str() == "-1/2");
    CHECK(Scalar(7).str() == "7");
    CHECK(abs(Scalar(-3)).rational() == 3);
}

TEST_CASE("moment values per kind") {
    auto fact = MomentSequence::factorial();
    CHECK(fact.moment(0).rational() == 1);
    CHECK(fact.moment(4).rational() == 24);
    CHECK(fact.moment(4).is_exact());

    auto q2 = MomentSequence::q_factorial(Rational(2));
    CHECK(q2.moment(3).rational() == 21); // [3][2][1] = 7 * 3 * 1
    CHECK(q2.moment(3).is_exact());

    auto g = MomentSequence::gamma_power(Rational(1, 2));
    CHECK(!g.moment(1).is_exact());
    CHECK(rel_close(g.moment(2).as_double(), 1.0, 1e-13));                      // Gamma(2)
    CHECK(rel_close(g.moment(1).as_double(), std::sqrt(M_PI) / 2.0, 1e-13));    // Gamma(3/2)
    CHECK(rel_close(g.moment(1).as_double(), std::tgamma(1.5), 1e-13));

    auto custom = MomentSequence::custom({Scalar(1), Scalar(2), Scalar::exact(5, 2)});
    CHECK(custom.moment(2).rational() == Rational(5, 2));
    CHECK_THROWS_AS(custom.moment(3), std::out_of_range);
    CHECK_THROWS_AS(fact.moment(-1), std::domain_error);
}

TEST_CASE("sequence construction validation") {
    CHECK_THROWS_AS(MomentSequence::q_factorial(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(MomentSequence::q_factorial(Rational(-2)), std::domain_error);
    CHECK_THROWS_AS(MomentSequence::gamma_power(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(MomentSequence::custom({Scalar(2), Scalar(1)}), std::invalid_argument);
    CHECK_THROWS_AS(MomentSequence::custom({Scalar(1), Scalar(0)}), std::invalid_argument);
    CHECK_THROWS_AS(MomentSequence::custom({}), std::invalid_argument);
}

TEST_CASE("ratio examples and identity with moments") {
    auto fact = MomentSequence::factorial();
    CHECK(fact.ratio(5).rational() == 5);
    CHECK_THROWS_AS(fact.ratio(0), std::domain_error);

    auto q2 = MomentSequence::q_factorial(Rational(2));
    CHECK(q2.ratio(3).rational() == 7); // [3]_2 = 1 + 2 + 4

    for (auto& seq : {MomentSequence::factorial(), MomentSequence::q_factorial(Rational(1, 2)),
                      MomentSequence::q_factorial(Rational(3))}) {
        for (int p = 1; p <= 12; ++p)
            CHECK(seq.moment(p) == seq.ratio(p) * seq.moment(p - 1));
    }
    auto g = MomentSequence::gamma_power(Rational(3, 4));
    for (int p = 1; p <= 12; ++p)
        CHECK(rel_close(g.moment(p).as_double(),
                        (g.ratio(p) * g.moment(p - 1)).as_double(), 1e-14));
}

TEST_CASE("gamma-power ratio equals the beta-function display") {
    // m(n)/m(n-1) = Gamma(mu)/B(1+mu(n-1), mu), the eigenvalue identity of
    // the fractional corollaries.
    for (const Rational& mu : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(2)}) {
        auto seq = MomentSequence::gamma_power(mu);
        double mu_d = mu.convert_to<double>();
        for (int n = 1; n <= 10; ++n) {
            double display = gamma_fn(mu_d) / beta_fn(1.0 + mu_d * (n - 1), mu_d);
            CHECK(rel_close(seq.ratio(n).as_double(), display, 1e-12));
        }
    }
}

TEST_CASE("gamma function accuracy") {
    CHECK(gamma_fn(1.0) == 1.0);
    CHECK(gamma_fn(5.0) == 24.0);
    CHECK(rel_close(gamma_fn(1.5), 0.8862269254527580137, 1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-2.5), std::domain_error);

    // integers up to 20 against the exact factorial
    double factorial = 1.0;
    for (int n = 1; n <= 20; ++n) {
        CHECK(rel_close(gamma_fn(n), factorial, 1e-14));
        factorial *= n;
    }

    // dense sweep of [0.1, 50] against the library gamma as an independent
    // reference
    for (double x = 0.1; x <= 50.0; x += 0.0917)
        CHECK(rel_close(gamma_fn(x), std::tgamma(x), 1e-13));
}

TEST_CASE("beta function") {
    CHECK(rel_close(beta_fn(1.0, 1.0), 1.0, 1e-14));
    for (int n = 1; n <= 12; ++n) CHECK(rel_close(beta_fn(n, 1.0), 1.0 / n, 1e-13));
    CHECK(rel_close(beta_fn(1.5, 0.5), M_PI / 2.0, 1e-13));
    CHECK_THROWS_AS(beta_fn(-1.0, 2.0), std::domain_error);

    // log-space route vs direct quotient on both sides of the switch
    CHECK(rel_close(beta_fn(60.0, 39.0), beta_fn(39.0, 60.0), 1e-13));
    CHECK(rel_close(beta_fn(80.0, 60.0),
                    std::exp(std::lgamma(80.0) + std::lgamma(60.0) - std::lgamma(140.0)),
                    1e-12));
}

TEST_CASE("q-numbers") {
    CHECK(q_number(Scalar(2), 3).rational() == 7);
    CHECK(q_number(Scalar(2), 0).rational() == 0);
    CHECK(q_number(Scalar::exact(1, 2), 3).rational() == Rational(7, 4)); // 1 + 1/2 + 1/4
    for (const Scalar& q : {Scalar::exact(1, 2), Scalar(5), Scalar(0.37)})
        CHECK(q_number(q, 1) == Scalar(1));
    CHECK_THROWS_AS(q_number(Scalar(1), 4), std::domain_error);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Scalar(3), 0).rational() == 1);
    CHECK(pochhammer(Scalar(-2), 3).rational() == 0);
    CHECK(pochhammer(Scalar(-2), 2).rational() == 2);
    for (int k = 0; k <= 10; ++k) {
        Scalar x = Scalar::exact(7, 3);
        CHECK(pochhammer(x, k + 1) == pochhammer(x, k) * (x + Scalar(k)));
    }
}

TEST_CASE("gamma-power at mu=1 agrees with factorial") {
    auto g1 = MomentSequence::gamma_power(Rational(1));
    auto fact = MomentSequence::factorial();
    for (int p = 0; p <= 15; ++p)
        CHECK(rel_close(g1.moment(p).as_double(), fact.moment(p).as_double(), 1e-13));
}

TEST_CASE("q-factorial approaches the factorial as q -> 1") {
    auto fact = MomentSequence::factorial();
    CHECK(MomentSequence::q_factorial(Rational(11, 10)).moment(1).rational() == 1); // [1]_q = 1
    for (int p = 2; p <= 10; ++p) {
        double target = fact.moment(p).as_double();
        double previous = -1.0;
        for (const Rational& q : {Rational(11, 10), Rational(101, 100), Rational(1001, 1000)}) {
            double gap = std::fabs(MomentSequence::q_factorial(q).moment(p).as_double() - target);
            if (previous >= 0.0) CHECK(gap < previous);
            previous = gap;
        }
    }
}
