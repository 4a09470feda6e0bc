#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "union_segre.hpp"

namespace segcalc {

// c_SM of a smooth split center, by adjunction: c(TM)/c(N) ∩ [Z] pushed to
// the ambient basis. For smooth complete varieties the degree-zero piece is
// the Euler characteristic.
inline CycleClass csm_smooth(const SplitCenter& z) {
    const int n = z.ambient_dim();
    const unsigned m = static_cast<unsigned>(z.dim());
    HPoly p = HPoly::one_plus_pow(1, n + 1, m);
    for (int d : z.normal_degrees()) p = p.times(HPoly::one_plus_pow(d, -1, m), m);
    return z.pushforward().apply(cap_hyperplane_polynomial(p, z.fundamental_class(), z.h_action()));
}

// c_SM of a smooth degree-d hypersurface in P^n.
inline CycleClass csm_smooth_hypersurface(int n, int d) {
    if (d < 1) throw error("invalid degree");
    const unsigned un = static_cast<unsigned>(n);
    HPoly p = HPoly::one_plus_pow(1, n + 1, un)
                  .times(HPoly::one_plus_pow(d, -1, un), un)
                  .times(HPoly::monomial(1, d), un);
    return cap_projective(p, CycleClass::generator(projective_basis(n), static_cast<std::size_t>(n)));
}

// A union of smooth hypersurfaces through one smooth center; y empty means no
// distinguished subscheme (the product-ideal reading of the union).
struct HypersurfaceUnion {
    int ambient_dim = 0;
    std::optional<SplitCenter> y;
    std::vector<int> degrees;
};

// m distinct lines through a point in P^3, resolved on the two-stage tower.
// An empty subset means all of the lines.
struct LinesUnion {
    int count = 0;
    YMode mode = YMode::point;
    std::vector<int> subset;
};

inline std::vector<int> lines_subset(const LinesUnion& u) {
    if (!u.subset.empty()) return u.subset;
    std::vector<int> all;
    for (int i = 1; i <= u.count; ++i) all.push_back(i);
    return all;
}

inline CycleClass union_segre_of(const HypersurfaceUnion& u) {
    if (u.y) {
        if (u.y->ambient_dim() != u.ambient_dim) throw error("incompatible bases");
        return union_segre(*u.y, u.degrees);
    }
    return union_segre_empty(u.ambient_dim, u.degrees);
}

inline CycleClass union_segre_of(const LinesUnion& u) {
    TowerP3Lines tower(u.count, u.mode);
    return union_segre(tower, lines_subset(u));
}

inline CycleClass incl_excl_rhs_of(const HypersurfaceUnion& u) {
    if (u.y) {
        if (u.y->ambient_dim() != u.ambient_dim) throw error("incompatible bases");
        return incl_excl_rhs(*u.y, u.degrees);
    }
    return incl_excl_rhs_empty(u.ambient_dim, u.degrees);
}

inline CycleClass incl_excl_rhs_of(const LinesUnion& u) {
    TowerP3Lines tower(u.count, u.mode);
    return incl_excl_rhs(tower, lines_subset(u));
}

// c_SM of the reduced union by inclusion-exclusion for configurations whose
// pairwise intersections all equal the common center:
//   c_SM(X) = sum c_SM(X_i) - (r-1) c_SM(Y).
inline CycleClass csm_union(const HypersurfaceUnion& u) {
    detail::require_degrees(u.degrees);
    CycleClass acc = CycleClass::zero(projective_basis(u.ambient_dim));
    for (int d : u.degrees) acc += csm_smooth_hypersurface(u.ambient_dim, d);
    if (u.y) acc -= csm_smooth(*u.y) * Rational(static_cast<int>(u.degrees.size()) - 1);
    return acc;
}

// For lines the reduced union is the same whether the union Segre class was
// set up with Y = p or Y empty, so the c_SM side always uses the point.
inline CycleClass csm_union(const LinesUnion& u) {
    std::vector<int> subset = lines_subset(u);
    if (subset.empty()) throw error("no components");
    SplitCenter line = SplitCenter::linear(3, 1);
    SplitCenter point = SplitCenter::linear(3, 0);
    CycleClass acc = csm_smooth(line) * Rational(static_cast<int>(subset.size()));
    acc -= csm_smooth(point) * Rational(static_cast<int>(subset.size()) - 1);
    return acc;
}

// c(TM) ∩ s(Y; X_1..X_r; M): the resolving-model route to c_SM for almost
// nonsingular unions.
template <typename Union>
inline CycleClass csm_via_relsm(const Union& u) {
    CycleClass s = union_segre_of(u);
    const int n = s.basis().ambient_dim();
    return cap_projective(HPoly::one_plus_pow(1, n + 1, static_cast<unsigned>(n)), s);
}

// The union Segre class read as the SM-Segre class s°(X, M) of the union.
template <typename Union>
inline CycleClass sm_segre(const Union& u) {
    return union_segre_of(u);
}

inline Rational euler_characteristic(const CycleClass& c) { return c.coefficient_at_dim(0); }

// Re-express a class across ambient projective spaces: cap with
// (1+h)^(from-to) and move to the P^to basis. Both spaces must contain the
// class's support, so every nonzero piece must fit in the target dimension.
inline CycleClass ambient_compare(const CycleClass& c, int from_dim, int to_dim) {
    if (c.basis().ambient_dim() != from_dim) throw error("incompatible bases");
    Basis target = projective_basis(to_dim);
    CycleClass out(target);
    for (const auto& [i, coef] : c.coeffs()) {
        const int dim = c.basis().element(i).dim;
        if (dim > to_dim) throw error("class exceeds target ambient dimension");
        for (int j = 0; j <= dim; ++j) {
            Rational term = coef * generalized_binomial(from_dim - to_dim, static_cast<unsigned>(j));
            if (term != 0) out.add_term(static_cast<std::size_t>(dim - j), term);
        }
    }
    return out;
}

// The total Chern class of a smooth section of O(r*d) on P^n, i.e. c_SM of a
// smooth hypersurface of degree r*d.
inline CycleClass chern_section(int n, int d, int r) {
    if (r < 1) throw error("no components");
    return csm_smooth_hypersurface(n, r * d);
}

struct ChernRecursionReport {
    CycleClass direct;
    CycleClass predicted;
    bool pass = false;
};

// For r >= n the classes c(rX) of sections of powers of O(d) satisfy
//   c(rX) = sum_{s=1..r-1} (-1)^(r-s-1) C(r,s) c(sX)      (r > n)
// with the single correction term -n!(-d)^n [P^0] exactly at r = n.
inline ChernRecursionReport chern_recursion_verify(int n, int d, int r) {
    if (r < n) throw error("recursion regime undefined");
    if (d < 1) throw error("invalid degree");
    Basis pn = projective_basis(n);
    CycleClass predicted = CycleClass::zero(pn);
    for (int s = 1; s <= r - 1; ++s) {
        Rational coef(binomial(static_cast<unsigned>(r), static_cast<unsigned>(s)));
        if ((r - s - 1) % 2 == 1) coef = -coef;
        predicted += chern_section(n, d, s) * coef;
    }
    if (r == n) {
        Int corr = factorial(static_cast<unsigned>(n)) * int_pow(Int(-d), static_cast<unsigned>(n));
        predicted += CycleClass::generator(pn, 0, -Rational(corr));
    }
    CycleClass direct = chern_section(n, d, r);
    return {direct, predicted, direct == predicted};
}

// chi of the zero scheme of a section of O(r*d) for r = 1..r_max.
inline std::vector<Rational> euler_sequence(int n, int d, int r_max) {
    std::vector<Rational> out;
    for (int r = 1; r <= r_max; ++r) out.push_back(euler_characteristic(chern_section(n, d, r)));
    return out;
}

}  // namespace segcalc
