#pragma once

// Sparse multivariate polynomials with exact rational coefficients over a
// fixed, named variable list. Terms are kept in graded-lexicographic order
// (total degree first, ties broken from the last variable down), which fixes
// the canonical printed form. The text grammar is terms `c*u^a*x0^b*...*z^e`
// joined by `+`/`-`.

#include "mori/errors.hpp"
#include "mori/rational.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace mori {

struct GrlexDescending {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long long ta = std::accumulate(a.begin(), a.end(), 0LL);
        long long tb = std::accumulate(b.begin(), b.end(), 0LL);
        if (ta != tb) return ta > tb;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

class MPoly {
public:
    using TermMap = std::map<std::vector<int>, Rat, GrlexDescending>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rat& value) {
        MPoly out(std::move(vars));
        if (value != 0) out.terms_[std::vector<int>(out.vars_.size(), 0)] = value;
        return out;
    }

    static MPoly variable(const std::vector<std::string>& vars, std::size_t index,
                          int exponent = 1) {
        if (index >= vars.size())
            throw classification_error(errc::arity_mismatch, "variable index out of range");
        MPoly out(vars);
        std::vector<int> exps(vars.size(), 0);
        exps[index] = exponent;
        out.terms_[exps] = 1;
        return out;
    }

    static MPoly monomial(const std::vector<std::string>& vars, std::vector<int> exps,
                          const Rat& coefficient) {
        if (exps.size() != vars.size())
            throw classification_error(errc::arity_mismatch, "exponent arity mismatch");
        MPoly out(vars);
        if (coefficient != 0) out.terms_[std::move(exps)] = coefficient;
        return out;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::size_t index_of(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw classification_error(errc::arity_mismatch, "unknown variable " + name);
        return static_cast<std::size_t>(it - vars_.begin());
    }

    // -1 for the zero polynomial
    long long total_degree() const {
        long long deg = -1;
        for (const auto& [exps, c] : terms_)
            deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0LL));
        return deg;
    }

    bool is_homogeneous() const {
        long long deg = -1;
        for (const auto& [exps, c] : terms_) {
            long long t = std::accumulate(exps.begin(), exps.end(), 0LL);
            if (deg == -1)
                deg = t;
            else if (t != deg)
                return false;
        }
        return true;
    }

    // Weighted bidegree under a per-variable (H, E) grading; nullopt when the
    // polynomial is zero or not bihomogeneous.
    std::optional<std::array<long long, 2>> bidegree(
        const std::vector<std::array<int, 2>>& grading) const {
        if (grading.size() != vars_.size())
            throw classification_error(errc::arity_mismatch, "grading arity mismatch");
        std::optional<std::array<long long, 2>> result;
        for (const auto& [exps, c] : terms_) {
            std::array<long long, 2> deg{0, 0};
            for (std::size_t i = 0; i < exps.size(); ++i) {
                deg[0] += static_cast<long long>(exps[i]) * grading[i][0];
                deg[1] += static_cast<long long>(exps[i]) * grading[i][1];
            }
            if (!result)
                result = deg;
            else if (*result != deg)
                return std::nullopt;
        }
        return result;
    }

    MPoly& operator+=(const MPoly& other) {
        require_same_vars(other);
        for (const auto& [exps, c] : other.terms_) add_term(exps, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& other) {
        require_same_vars(other);
        for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
        return *this;
    }
    friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
    friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }

    MPoly operator-() const {
        MPoly out(vars_);
        for (const auto& [exps, c] : terms_) out.terms_[exps] = -c;
        return out;
    }

    friend MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
        lhs.require_same_vars(rhs);
        MPoly out(lhs.vars_);
        for (const auto& [le, lc] : lhs.terms_) {
            for (const auto& [re, rc] : rhs.terms_) {
                std::vector<int> exps(le.size());
                for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = le[i] + re[i];
                out.add_term(exps, lc * rc);
            }
        }
        return out;
    }

    MPoly& operator*=(const MPoly& other) { return *this = *this * other; }

    MPoly scaled(const Rat& s) const {
        MPoly out(vars_);
        if (s == 0) return out;
        for (const auto& [exps, c] : terms_) out.terms_[exps] = c * s;
        return out;
    }

    MPoly pow(unsigned exponent) const {
        MPoly result = constant(vars_, 1);
        MPoly base = *this;
        while (exponent) {
            if (exponent & 1) result *= base;
            if (exponent >>= 1) base *= base;
        }
        return result;
    }

    // Simultaneous substitution of polynomials for the mapped variables.
    MPoly substitute(const std::map<std::size_t, MPoly>& images) const {
        for (const auto& [index, image] : images) {
            if (index >= vars_.size())
                throw classification_error(errc::arity_mismatch,
                                           "substitution index out of range");
            image.require_same_vars(*this);
        }
        MPoly out(vars_);
        for (const auto& [exps, c] : terms_) {
            MPoly term = constant(vars_, c);
            std::vector<int> untouched(exps.size(), 0);
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                auto it = images.find(i);
                if (it == images.end())
                    untouched[i] = exps[i];
                else
                    term *= it->second.pow(static_cast<unsigned>(exps[i]));
            }
            out += term * monomial(vars_, untouched, 1);
        }
        return out;
    }

    MPoly derivative(std::size_t index) const {
        if (index >= vars_.size())
            throw classification_error(errc::arity_mismatch, "variable index out of range");
        MPoly out(vars_);
        for (const auto& [exps, c] : terms_) {
            if (exps[index] == 0) continue;
            std::vector<int> lowered = exps;
            --lowered[index];
            out.add_term(lowered, c * exps[index]);
        }
        return out;
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (point.size() != vars_.size())
            throw classification_error(errc::arity_mismatch, "evaluation arity mismatch");
        Rat total = 0;
        for (const auto& [exps, c] : terms_) {
            Rat term = c;
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (exps[i] != 0)
                    term *= rat_pow(point[i], static_cast<unsigned long long>(exps[i]));
            total += term;
        }
        return total;
    }

    bool operator==(const MPoly& other) const {
        return vars_ == other.vars_ &&
               std::equal(terms_.begin(), terms_.end(), other.terms_.begin(),
                          other.terms_.end());
    }
    bool operator!=(const MPoly& other) const { return !(*this == other); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [exps, c] : terms_) {
            bool negative = c < 0;
            Rat magnitude = negative ? Rat(-c) : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            bool constant_term =
                std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
            std::string vars_part;
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (!vars_part.empty()) vars_part += "*";
                vars_part += vars_[i];
                if (exps[i] > 1) vars_part += "^" + std::to_string(exps[i]);
            }
            if (constant_term) {
                out += rat_to_string(magnitude);
            } else if (magnitude == 1) {
                out += vars_part;
            } else {
                out += rat_to_string(magnitude) + "*" + vars_part;
            }
        }
        return out;
    }

    static MPoly parse(const std::vector<std::string>& vars, const std::string& text);

private:
    void require_same_vars(const MPoly& other) const {
        if (vars_ != other.vars_)
            throw classification_error(errc::arity_mismatch,
                                       "operands live in different variable lists");
    }

    void add_term(const std::vector<int>& exps, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exps, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

namespace detail {

struct PolyLexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw classification_error(errc::parse_error,
                                       "expected a number at position " +
                                           std::to_string(start));
        return text.substr(start, pos - start);
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

} // namespace detail

inline MPoly MPoly::parse(const std::vector<std::string>& vars, const std::string& text) {
    detail::PolyLexer lexer{text};
    MPoly result(vars);

    auto parse_term = [&](bool negative) {
        Rat coefficient = negative ? -1 : 1;
        std::vector<int> exps(vars.size(), 0);
        bool first_factor = true;
        while (true) {
            lexer.skip_ws();
            if (!first_factor && !lexer.consume('*')) break;
            char c = lexer.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lexer.number();
                if (lexer.consume('/')) {
                    std::string den = lexer.number();
                    BigInt den_value(den);
                    if (den_value == 0)
                        throw classification_error(errc::parse_error,
                                                   "zero denominator in coefficient");
                    coefficient *= Rat(BigInt(num), den_value);
                } else {
                    coefficient *= Rat(BigInt(num));
                }
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string name = lexer.identifier();
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it == vars.end())
                    throw classification_error(errc::parse_error,
                                               "unknown variable '" + name + "'");
                int exponent = 1;
                if (lexer.consume('^')) exponent = std::stoi(lexer.number());
                exps[static_cast<std::size_t>(it - vars.begin())] += exponent;
            } else if (first_factor) {
                throw classification_error(errc::parse_error,
                                           "expected a term at position " +
                                               std::to_string(lexer.pos));
            } else {
                break;
            }
            first_factor = false;
        }
        result.add_term(exps, coefficient);
    };

    if (lexer.done())
        throw classification_error(errc::parse_error, "empty polynomial text");
    bool negative = false;
    if (lexer.consume('-'))
        negative = true;
    else
        lexer.consume('+');
    parse_term(negative);
    while (!lexer.done()) {
        if (lexer.consume('+'))
            parse_term(false);
        else if (lexer.consume('-'))
            parse_term(true);
        else
            throw classification_error(errc::parse_error,
                                       "expected '+' or '-' at position " +
                                           std::to_string(lexer.pos));
    }
    return result;
}

} // namespace mori
