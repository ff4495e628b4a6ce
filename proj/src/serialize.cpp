#include "mompoly/serialize.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace mompoly {

namespace {

bool looks_integral(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer power_of_ten(std::size_t k) {
    Integer v = 1;
    for (std::size_t i = 0; i < k; ++i) v *= 10;
    return v;
}

} // namespace

Rational rational_from_string(const std::string& raw) {
    if (raw.empty()) throw std::invalid_argument("rational_from_string: empty string");
    std::string s = raw[0] == '+' ? raw.substr(1) : raw;
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!looks_integral(num) || !looks_integral(den))
            throw std::invalid_argument("rational_from_string: malformed fraction '" + s + "'");
        Integer d{den};
        if (d == 0) throw std::invalid_argument("rational_from_string: zero denominator");
        return Rational(Integer(num), d);
    }
    if (looks_integral(s)) return Rational(Integer(s));
    std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (head.empty() || head == "-" || head == "+") head += "0";
        if (!looks_integral(head) || (!tail.empty() && !looks_integral(tail)))
            throw std::invalid_argument("rational_from_string: malformed decimal '" + s + "'");
        Rational value{Integer(head)};
        if (!tail.empty()) {
            Rational frac(Integer(tail), power_of_ten(tail.size()));
            value += (s[0] == '-') ? -frac : frac;
        }
        return value;
    }
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
}

Scalar scalar_from_string(const std::string& s) {
    if (s.find('/') != std::string::npos || looks_integral(s))
        return Scalar(rational_from_string(s));
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::invalid_argument("scalar_from_string: cannot parse '" + s + "'");
    return Scalar(v);
}

nlohmann::json sequence_to_json(const MomentSequence& seq) {
    nlohmann::json j;
    switch (seq.kind()) {
        case MomentSequence::Kind::Factorial:
            j["kind"] = "factorial";
            break;
        case MomentSequence::Kind::GammaPower:
            j["kind"] = "gammapower";
            j["mu"] = Scalar(seq.param()).str();
            break;
        case MomentSequence::Kind::QFactorial:
            j["kind"] = "qfactorial";
            j["q"] = Scalar(seq.param()).str();
            break;
        case MomentSequence::Kind::Custom: {
            j["kind"] = "custom";
            nlohmann::json table = nlohmann::json::array();
            for (int p = 0;; ++p) {
                try {
                    table.push_back(seq.moment(p).str());
                } catch (const std::out_of_range&) {
                    break;
                }
            }
            j["table"] = std::move(table);
            break;
        }
    }
    return j;
}

MomentSequence sequence_from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "factorial") return MomentSequence::factorial();
    if (kind == "gammapower")
        return MomentSequence::gamma_power(rational_from_string(j.at("mu").get<std::string>()));
    if (kind == "qfactorial")
        return MomentSequence::q_factorial(rational_from_string(j.at("q").get<std::string>()));
    if (kind == "custom") {
        std::vector<Scalar> table;
        for (const auto& v : j.at("table")) table.push_back(scalar_from_string(v.get<std::string>()));
        return MomentSequence::custom(std::move(table));
    }
    throw std::invalid_argument("sequence_from_json: unknown kind '" + kind + "'");
}

nlohmann::json polynomial_to_json(const MomentPolynomial& y, const std::string& basis) {
    nlohmann::json j;
    j["basis"] = basis;
    j["sequence"] = sequence_to_json(y.sequence());
    nlohmann::json coeffs = nlohmann::json::array();
    if (basis == "moment") {
        for (const Scalar& a : y.coeffs()) coeffs.push_back(a.str());
    } else if (basis == "standard") {
        StandardPolynomial std_y = to_standard(y);
        for (const Scalar& c : std_y.coeffs()) coeffs.push_back(c.str());
    } else {
        throw std::invalid_argument("polynomial_to_json: basis must be 'moment' or 'standard'");
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

MomentPolynomial polynomial_from_json(const nlohmann::json& j) {
    MomentSequence seq = sequence_from_json(j.at("sequence"));
    std::vector<Scalar> coeffs;
    for (const auto& v : j.at("coeffs")) coeffs.push_back(scalar_from_string(v.get<std::string>()));
    std::string basis = j.at("basis").get<std::string>();
    if (basis == "moment") return {seq, std::move(coeffs)};
    if (basis == "standard") return to_moment(StandardPolynomial(std::move(coeffs)), seq);
    throw std::invalid_argument("polynomial_from_json: basis must be 'moment' or 'standard'");
}

} // namespace mompoly
