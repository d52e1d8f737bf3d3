#include "gregory/serialization.hpp"

#include "gregory/cyclotomic.hpp"

#include <stdexcept>
#include <string>

namespace gregory::json {

namespace {

const Json& require_array(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string(what) + ": expected a JSON array");
    }
    return j;
}

template <typename T, typename Decode>
std::vector<T> decode_list(const Json& j, const char* what, Decode decode) {
    std::vector<T> out;
    for (const auto& item : require_array(j, what)) {
        out.push_back(decode(item));
    }
    return out;
}

}  // namespace

Json encode(const Rational& r) { return r.str(); }

Json encode(const Polynomial& p, char var) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) {
        coeffs.push_back(c.str());
    }
    return Json{{"var", std::string(1, var)}, {"coeffs", std::move(coeffs)}};
}

Json encode(const RationalFunction& f) {
    return Json{{"num", encode(f.numerator(), 'q')}, {"den", encode(f.denominator(), 'q')}};
}

Json encode(const B2Table& t) {
    Json out = Json::array();
    for (const auto& v : t.values()) {
        out.push_back(encode(v));
    }
    return out;
}

Json encode(const BTable& t) {
    Json out = Json::array();
    for (const auto& v : t.values()) {
        out.push_back(encode(v));
    }
    return out;
}

Json encode(const QB2Table& t) {
    Json out = Json::array();
    for (const auto& v : t.values()) {
        out.push_back(encode(v));
    }
    return out;
}

Json encode(const ATable& t) {
    Json out = Json::array();
    for (const auto& row : t.rows()) {
        Json r = Json::array();
        for (const auto& p : row) {
            r.push_back(encode(p, 'x'));
        }
        out.push_back(std::move(r));
    }
    return out;
}

Json encode(const CTable& t) {
    Json out = Json::array();
    for (const auto& row : t.rows()) {
        Json r = Json::array();
        for (const auto& c : row) {
            r.push_back(encode(c));
        }
        out.push_back(std::move(r));
    }
    return out;
}

Rational decode_rational(const Json& j) {
    if (!j.is_string()) {
        throw std::invalid_argument("rational: expected a \"p/q\" string");
    }
    const auto text = j.get<std::string>();
    try {
        return Rational::parse(text);
    } catch (const ArithmeticError&) {
        throw std::invalid_argument("rational: zero denominator in \"" + text + "\"");
    }
}

Polynomial decode_polynomial(const Json& j, char expected_var) {
    if (!j.is_object() || !j.contains("var") || !j.contains("coeffs")) {
        throw std::invalid_argument("polynomial: expected {\"var\", \"coeffs\"}");
    }
    const auto var = j.at("var").get<std::string>();
    if (var != "x" && var != "q") {
        throw std::invalid_argument("polynomial: var must be \"x\" or \"q\"");
    }
    if (expected_var != 0 && var[0] != expected_var) {
        throw std::invalid_argument(std::string("polynomial: expected var \"") + expected_var + "\"");
    }
    return Polynomial(decode_list<Rational>(j.at("coeffs"), "polynomial coeffs", decode_rational));
}

RationalFunction decode_rational_function(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw std::invalid_argument("rational function: expected {\"num\", \"den\"}");
    }
    const Polynomial den = decode_polynomial(j.at("den"), 'q');
    if (den.is_zero()) {
        throw std::invalid_argument("rational function: zero denominator");
    }
    const Polynomial num = decode_polynomial(j.at("num"), 'q');
    // Tables of b_n(q) have cyclotomic denominators, where trial division
    // is far cheaper than a Euclidean gcd.
    if (const auto f = CyclotomicFraction::factor(num, den)) {
        return f->to_rational_function();
    }
    return RationalFunction(num, den);
}

B2Table decode_b2(const Json& j) { return B2Table(decode_list<Rational>(j, "b2 table", decode_rational)); }

BTable decode_bernoulli(const Json& j) {
    return BTable(decode_list<Rational>(j, "bernoulli table", decode_rational));
}

QB2Table decode_qb2(const Json& j) {
    return QB2Table(decode_list<RationalFunction>(j, "qb2 table", decode_rational_function));
}

ATable decode_atable(const Json& j) {
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& row : require_array(j, "atable")) {
        rows.push_back(decode_list<Polynomial>(row, "atable row", [](const Json& p) { return decode_polynomial(p, 'x'); }));
    }
    return ATable(std::move(rows));
}

CTable decode_ctable(const Json& j) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : require_array(j, "ctable")) {
        rows.push_back(decode_list<Rational>(row, "ctable row", decode_rational));
    }
    return CTable(std::move(rows));
}

}  // namespace gregory::json
