#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace segcalc {

// Exponent vector, one entry per variable.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

// A multivariate power series truncated at a fixed total degree, with exact
// rational coefficients. Zero coefficients are never stored.
class FormalSeries {
public:
    FormalSeries(std::vector<std::string> vars, unsigned truncation)
        : vars_(std::move(vars)), trunc_(truncation) {}

    static FormalSeries constant(std::vector<std::string> vars, unsigned truncation, const Rational& c) {
        FormalSeries s(std::move(vars), truncation);
        if (c != 0) s.terms_.emplace(Exponents(s.vars_.size(), 0), c);
        return s;
    }

    static FormalSeries variable(std::vector<std::string> vars, unsigned truncation, std::size_t index) {
        FormalSeries s(std::move(vars), truncation);
        if (index >= s.vars_.size()) throw error("variable index out of range");
        if (truncation >= 1) {
            Exponents e(s.vars_.size(), 0);
            e[index] = 1;
            s.terms_.emplace(std::move(e), Rational(1));
        }
        return s;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    unsigned truncation() const { return trunc_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (e.size() != vars_.size()) throw error("exponent vector length mismatch");
        if (total_degree(e) > trunc_) return;
        Rational& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }

    FormalSeries operator+(const FormalSeries& o) const {
        require_same_vars(o);
        FormalSeries r = resized_to(std::min(trunc_, o.trunc_));
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    FormalSeries operator-() const {
        FormalSeries r(vars_, trunc_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    FormalSeries operator-(const FormalSeries& o) const { return *this + (-o); }
    FormalSeries& operator+=(const FormalSeries& o) { return *this = *this + o; }
    FormalSeries& operator-=(const FormalSeries& o) { return *this = *this - o; }

    FormalSeries operator*(const FormalSeries& o) const {
        require_same_vars(o);
        FormalSeries r(vars_, std::min(trunc_, o.trunc_));
        for (const auto& [ea, ca] : terms_) {
            unsigned da = total_degree(ea);
            if (da > r.trunc_) continue;
            for (const auto& [eb, cb] : o.terms_) {
                if (da + total_degree(eb) > r.trunc_) continue;
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    FormalSeries scaled(const Rational& s) const {
        FormalSeries r(vars_, trunc_);
        if (s == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    // The series with one variable set to zero: keeps exactly the terms whose
    // exponent at var_index is zero. The variable stays in the list.
    FormalSeries substituted_zero(std::size_t var_index) const {
        if (var_index >= vars_.size()) throw error("variable index out of range");
        FormalSeries r(vars_, trunc_);
        for (const auto& [e, c] : terms_)
            if (e[var_index] == 0) r.terms_.emplace(e, c);
        return r;
    }

    friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
        return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FormalSeries& a, const FormalSeries& b) { return !(a == b); }

    std::string render() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            bool wrote_mag = false;
            if (mag != 1 || total_degree(e) == 0) {
                out << rational_str(mag);
                wrote_mag = true;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (wrote_mag) out << "*";
                out << vars_[i];
                if (e[i] > 1) out << "^" << e[i];
                wrote_mag = true;
            }
        }
        return out.str();
    }

private:
    void require_same_vars(const FormalSeries& o) const {
        if (vars_ != o.vars_) throw error("variable mismatch");
    }

    FormalSeries resized_to(unsigned trunc) const {
        FormalSeries r(vars_, trunc);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) <= trunc) r.terms_.emplace(e, c);
        return r;
    }

    std::vector<std::string> vars_;
    unsigned trunc_;
    std::map<Exponents, Rational> terms_;
};

// d/(1+d) = d - d^2 + d^3 - ... up to the truncation order. The argument must
// have zero constant term for the expansion to make sense.
inline FormalSeries series_geometric(const FormalSeries& d) {
    if (d.coefficient(Exponents(d.vars().size(), 0)) != 0)
        throw error("not a divisor-like series");
    FormalSeries result(d.vars(), d.truncation());
    FormalSeries power = d;
    int sign = 1;
    for (unsigned k = 1; k <= d.truncation() && !power.is_zero(); ++k) {
        result += sign > 0 ? power : -power;
        sign = -sign;
        power = power * d;
    }
    return result;
}

// First stored term (in exponent order) not divisible by the monomial with
// the given exponents; nullopt when every term is divisible.
inline std::optional<Exponents> first_nondivisible_term(const FormalSeries& s, const Exponents& m) {
    if (m.size() != s.vars().size()) throw error("exponent vector length mismatch");
    for (const auto& [e, c] : s.terms()) {
        (void)c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (e[i] < m[i]) return e;
    }
    return std::nullopt;
}

inline bool divisible_by_monomial(const FormalSeries& s, const Exponents& m) {
    return !first_nondivisible_term(s, m).has_value();
}

}  // namespace segcalc
