#pragma once

// Text grammar and JSON serialization for lattice polynomials and results.
//
//   poly   := term (("+"|"-") term)*
//   term   := rational? ("*"? factor)*
//   factor := "X" index "^(" integer ")" | blade
//   blade  := "e" digits              (e0 scalar; unsorted indices normalize
//                                      with the product sign, e21 = -e12)
//   rational := integer ("/" positive-integer)?
//
// Whitespace is insignificant; dimension, mesh, and family come from the
// caller, never from the expression. The canonical printer emits one factor
// per nonzero exponent in axis order followed by the blade, terms ordered by
// (multi-index, blade); parse(print(p)) == p exactly.

#include "dcl/fischer.hpp"
#include "dcl/polynomial.hpp"

#include <json.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace dcl {

// Syntax / validation error with 1-based position into the expression text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t line, size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    size_t line() const { return line_; }
    size_t column() const { return column_; }

private:
    size_t line_, column_;
};

namespace iodetail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r')) {
            if (text_[pos_] == '\n') {
                ++line_;
                line_start_ = pos_ + 1;
            }
            ++pos_;
        }
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() { return text_[pos_++]; }
    size_t line() const { return line_; }
    size_t column() const { return pos_ - line_start_ + 1; }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, pos_ - line_start_ + 1);
    }

    // Digits, optionally signed; fails if none present.
    std::string integer(const char* what) {
        skip_ws();
        std::string out;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) out += take();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out += take();
        return out;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected ") + what);
        ++pos_;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    size_t line_ = 1;
    size_t line_start_ = 0;
};

inline Rational parse_rational(Cursor& cur) {
    cur.skip_ws();
    size_t line = cur.line(), column = cur.column();
    std::string num = cur.integer("a rational coefficient");
    if (cur.peek() == '/') {
        cur.take();
        num += "/" + cur.integer("a positive denominator");
    }
    try {
        return Rational::parse(num);
    } catch (const std::exception&) {
        throw ParseError("'" + num + "' is not a valid rational", line, column);
    }
}

}  // namespace iodetail

// Parse the expression grammar into a polynomial over (n, h, family).
inline LatticePolynomial parse_polynomial(std::string_view text, int n, const Rational& h,
                                          FamilySign family) {
    iodetail::Cursor cur(text);
    LatticePolynomial out(n, h, family);
    if (cur.at_end()) cur.fail("expected a polynomial expression");
    bool first = true;
    while (!cur.at_end()) {
        Rational sign(1);
        char c = cur.peek();
        if (c == '+' || c == '-') {
            cur.take();
            sign = Rational(c == '-' ? -1 : 1);
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;

        Rational coeff = sign;
        if (std::isdigit(static_cast<unsigned char>(cur.peek())))
            coeff = coeff * iodetail::parse_rational(cur);

        std::vector<int> exponents(static_cast<size_t>(n), 0);
        std::optional<CliffordElement> blade;
        bool any_factor = false;
        while (true) {
            char f = cur.peek();
            if (f == '*') {
                cur.take();
                f = cur.peek();
            }
            if (f == 'X') {
                cur.take();
                std::string idx = cur.integer("an axis index after 'X'");
                long axis = std::stol(idx);
                if (axis < 1 || axis > n)
                    cur.fail("axis " + idx + " exceeds dimension " + std::to_string(n));
                cur.expect('^', "'^(' after the axis index");
                cur.expect('(', "'(' opening the exponent");
                std::string exp = cur.integer("an exponent");
                long e = std::stol(exp);
                if (e < 0) cur.fail("negative exponent " + exp);
                cur.expect(')', "')' closing the exponent");
                exponents[static_cast<size_t>(axis - 1)] += static_cast<int>(e);
                any_factor = true;
            } else if (f == 'e') {
                cur.take();
                if (blade) cur.fail("a term may contain at most one blade");
                std::string digits = cur.integer("blade indices after 'e'");
                CliffordElement b = CliffordElement::scalar(n, Rational(1));
                if (digits != "0") {
                    for (char d : digits) {
                        int i = d - '0';
                        if (i < 1 || i > n)
                            cur.fail(std::string("blade index ") + d + " exceeds dimension " +
                                     std::to_string(n));
                        b = b * CliffordElement::generator(n, i);
                    }
                }
                blade = b;
                any_factor = true;
            } else {
                break;
            }
        }
        if (!any_factor && coeff == sign &&
            !std::isdigit(static_cast<unsigned char>(cur.peek())))
            cur.fail("expected a coefficient, 'X' factor, or blade");
        CliffordElement value =
            blade ? coeff * *blade : CliffordElement::scalar(n, coeff);
        out = out + LatticePolynomial::monomial(MultiIndex(exponents), h, family, value);
    }
    return out;
}

// Canonical printer for the grammar above. "0" for the zero polynomial.
inline std::string print_polynomial(const LatticePolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [alpha, clifford] : p.terms()) {
        for (const auto& [blade, coeff] : clifford.coeffs()) {
            if (coeff.is_zero()) continue;
            if (out.empty()) {
                if (coeff.sign() < 0) out += "-";
            } else {
                out += coeff.sign() < 0 ? " - " : " + ";
            }
            Rational mag = coeff.abs();
            std::string term;
            if (!(mag == Rational(1))) term += mag.str() + " ";
            for (int i = 1; i <= p.dimension(); ++i)
                if (alpha[i - 1] != 0)
                    term += "X" + std::to_string(i) + "^(" + std::to_string(alpha[i - 1]) + ") ";
            term += blade_name(blade);
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

// JSON forms, all carrying "schema":"1".

inline nlohmann::json to_json(const LatticePolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, clifford] : p.terms()) {
        nlohmann::json coeffs = nlohmann::json::object();
        for (const auto& [blade, coeff] : clifford.coeffs()) {
            if (coeff.is_zero()) continue;
            std::string key = blade_name(blade).substr(1);  // "0", "1", "12", ...
            coeffs[key] = coeff.str();
        }
        nlohmann::json term;
        term["alpha"] = nlohmann::json::array();
        for (int i = 0; i < p.dimension(); ++i) term["alpha"].push_back(alpha[i]);
        term["coeff"] = coeffs;
        terms.push_back(term);
    }
    return nlohmann::json{{"schema", "1"},
                          {"n", p.dimension()},
                          {"h", p.mesh().str()},
                          {"family", std::string(1, family_char(p.family()))},
                          {"terms", terms}};
}

inline LatticePolynomial polynomial_from_json(const nlohmann::json& j) {
    if (j.value("schema", "1") != "1")
        throw std::invalid_argument("polynomial_from_json: unsupported schema '" +
                                    j.value("schema", "") + "'");
    int n = j.at("n").get<int>();
    Rational h = Rational::parse(j.at("h").get<std::string>());
    FamilySign family = family_from_char(j.at("family").get<std::string>().at(0));
    LatticePolynomial out(n, h, family);
    for (const auto& term : j.at("terms")) {
        std::vector<int> exps = term.at("alpha").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != n)
            throw std::invalid_argument("polynomial_from_json: alpha length != n");
        CliffordElement value = CliffordElement::scalar(n, Rational(0));
        for (const auto& [key, text] : term.at("coeff").items()) {
            Blade b = 0;
            if (key != "0")
                for (char d : key) {
                    int i = d - '0';
                    if (i < 1 || i > n)
                        throw std::invalid_argument(
                            "polynomial_from_json: blade index exceeds dimension");
                    b |= Blade(1) << (i - 1);
                }
            value.add(b, Rational::parse(text.get<std::string>()));
        }
        out = out + LatticePolynomial::monomial(MultiIndex(exps), h, family, value);
    }
    return out;
}

inline nlohmann::json to_json(const FischerResult& r) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& c : r.components) components.push_back(to_json(c));
    nlohmann::json out{{"schema", "1"},
                       {"strategy", r.strategy},
                       {"degree", r.degree},
                       {"drop", r.drop},
                       {"feasible", r.feasible},
                       {"kernel_verified", r.kernel_verified},
                       {"components", components}};
    if (r.residual) out["residual"] = to_json(*r.residual);
    if (!r.diagnostics.empty()) out["diagnostics"] = r.diagnostics;
    return out;
}

inline nlohmann::json to_json(const KernelBasis& k) {
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& e : k.elements) elements.push_back(to_json(e));
    return nlohmann::json{{"schema", "1"},
                          {"degree", k.degree},
                          {"dimension", k.elements.size()},
                          {"operator_rank", k.operator_rank},
                          {"elements", elements}};
}

}  // namespace dcl
