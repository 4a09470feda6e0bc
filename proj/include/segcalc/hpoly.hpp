#pragma once

#include <vector>

#include "cycle_class.hpp"
#include "numeric.hpp"

namespace segcalc {

// A polynomial in one variable h with rational coefficients, used for
// expressions in the hyperplane class. Arithmetic truncates explicitly; all
// callers work modulo h^(n+1) for the relevant ambient dimension n.
class HPoly {
public:
    HPoly() = default;
    explicit HPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static HPoly one() { return monomial(0); }

    static HPoly monomial(unsigned k, const Rational& c = 1) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return HPoly(std::move(v));
    }

    // (1 + d*h)^e truncated to degree trunc; e may be negative.
    static HPoly one_plus_pow(const Rational& d, long long e, unsigned trunc) {
        std::vector<Rational> v(trunc + 1, Rational(0));
        Rational dj = 1;
        for (unsigned j = 0; j <= trunc; ++j) {
            v[j] = generalized_binomial(e, j) * dj;
            dj *= d;
        }
        return HPoly(std::move(v));
    }

    unsigned degree() const { return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1); }

    Rational coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rational(0); }

    HPoly plus(const HPoly& o) const {
        std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < c_.size()) v[i] += c_[i];
            if (i < o.c_.size()) v[i] += o.c_[i];
        }
        return HPoly(std::move(v));
    }

    HPoly times(const HPoly& o, unsigned trunc) const {
        std::vector<Rational> v(trunc + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size() && i <= trunc; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size() && i + j <= trunc; ++j)
                v[i + j] += c_[i] * o.c_[j];
        }
        return HPoly(std::move(v));
    }

    HPoly scaled(const Rational& s) const {
        std::vector<Rational> v = c_;
        for (Rational& x : v) x *= s;
        return HPoly(std::move(v));
    }

    HPoly truncated(unsigned deg) const {
        std::vector<Rational> v = c_;
        if (v.size() > deg + 1) v.resize(deg + 1);
        return HPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;  // c_[k] is the coefficient of h^k
};

// p(h) ∩ a, where capping with h is the supplied dimension-lowering action.
// The polynomial is truncated at the ambient dimension; terms that lower past
// dimension zero vanish through the action itself.
inline CycleClass cap_hyperplane_polynomial(const HPoly& p, const CycleClass& a, const LinearMap& h_action) {
    if (!(h_action.source() == a.basis()) || !(h_action.target() == a.basis()))
        throw error("invalid hyperplane action");
    if (!h_action.shifts_dim_by(-1)) throw error("invalid hyperplane action");
    const unsigned n = static_cast<unsigned>(a.basis().ambient_dim());
    const HPoly q = p.truncated(n);
    CycleClass result(a.basis());
    CycleClass power = a;  // h^k ∩ a
    for (unsigned k = 0;; ++k) {
        Rational c = q.coeff(k);
        if (c != 0) result += power * c;
        if (k == q.degree() || power.is_zero()) break;
        power = h_action.apply(power);
    }
    return result;
}

// Capping on the standard basis of P^n.
inline CycleClass cap_projective(const HPoly& p, const CycleClass& a) {
    return cap_hyperplane_polynomial(p, a, projective_h_action(a.basis().ambient_dim()));
}

// Sign flip (-1)^codim on each graded piece, codimension measured in the
// ambient space. An involution.
inline CycleClass dual_class(const CycleClass& a) {
    const int n = a.basis().ambient_dim();
    CycleClass r(a.basis());
    for (const auto& [i, c] : a.coeffs()) {
        int codim = n - a.basis().element(i).dim;
        r.add_term(i, codim % 2 == 0 ? c : -c);
    }
    return r;
}

// Twist by a line bundle of degree d: the codimension-p piece is capped with
// (1 + d*h)^(-p). Twisting by degree d and then by degree -d composes to the
// identity (the operation is a group action of degrees), and degree 0 is the
// identity outright.
inline CycleClass tensor_class(const CycleClass& a, int d) {
    const Basis& b = a.basis();
    if (!b.is_standard_projective()) throw error("tensor twist requires the standard projective basis");
    const int n = b.ambient_dim();
    CycleClass r(b);
    for (const auto& [i, c] : a.coeffs()) {
        const int dim = b.element(i).dim;
        const int p = n - dim;
        Rational dj = 1;
        for (int j = 0; j <= dim; ++j) {
            Rational coef = c * generalized_binomial(-p, static_cast<unsigned>(j)) * dj;
            if (coef != 0) r.add_term(*b.unique_index_of_dim(dim - j), coef);
            dj *= d;
        }
    }
    return r;
}

}  // namespace segcalc
