#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "models.hpp"

namespace segcalc {

// Inclusion-exclusion over every nonempty sub-collection; 2^r - 1 terms.
inline constexpr int kMaxComponents = 12;

// s(Z, P^n) for a smooth split center: the graded pieces of c(N)^(-1) ∩ [Z]
// pushed to the ambient basis.
inline CycleClass segre_smooth(const SplitCenter& z) {
    CycleClass acc = CycleClass::zero(projective_basis(z.ambient_dim()));
    for (int j = 0; j <= z.dim(); ++j)
        acc += z.pushforward().apply(z.normal_segre_term(j));
    return acc;
}

// s(X, P^n) for a degree-d hypersurface: (d*h)/(1 + d*h) ∩ [P^n].
inline CycleClass segre_hypersurface(int n, int d) {
    if (d < 1) throw error("invalid degree");
    Basis pn = projective_basis(n);
    HPoly p = HPoly::monomial(1, d).times(HPoly::one_plus_pow(d, -1, static_cast<unsigned>(n)),
                                          static_cast<unsigned>(n));
    return cap_projective(p, CycleClass::generator(pn, static_cast<std::size_t>(n)));
}

namespace detail {

inline void require_degrees(const std::vector<int>& degrees) {
    if (degrees.empty()) throw error("no components");
    for (int d : degrees)
        if (d < 1) throw error("invalid degree");
}

}  // namespace detail

// s(Y; X_1..X_s; P^n) for hypersurfaces X_i = Y + R_i containing the center
// Y: on the blow-up along Y the union is cut out by D = (sum d_i) h - (s-1) e,
// and the class is pi_*(D/(1+D)).
inline CycleClass union_segre(const SplitCenter& y, const std::vector<int>& degrees) {
    detail::require_degrees(degrees);
    const Int total = std::accumulate(degrees.begin(), degrees.end(), Int(0));
    BlowupModel model(y);
    return model.pushforward_divisor_series(total, -Int(static_cast<int>(degrees.size()) - 1));
}

// Y empty: the union Segre class is the Segre class of the product
// hypersurface of degree sum(d_i); no blow-up is needed.
inline CycleClass union_segre_empty(int n, const std::vector<int>& degrees) {
    detail::require_degrees(degrees);
    int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    return segre_hypersurface(n, total);
}

// Lines through a point in P^3, on the two-stage tower model.
inline CycleClass union_segre(const TowerP3Lines& tower, const std::vector<int>& subset) {
    return tower.pushforward_divisor_series(tower.union_divisor(subset));
}

namespace detail {

template <typename TermFn>
CycleClass alternating_over_subsets(int r, const Basis& ambient, TermFn&& term_of_subset) {
    if (r < 1) throw error("no components");
    if (r > kMaxComponents) throw error("too many components");
    CycleClass acc = CycleClass::zero(ambient);
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        const bool odd = subset.size() % 2 == 1;
        CycleClass t = term_of_subset(subset);
        acc += odd ? t : -t;
    }
    return acc;
}

}  // namespace detail

// The right-hand side of the inclusion-exclusion identity:
//   sum over nonempty S of (-1)^(|S|-1) s(Y; X_S; P^n).
inline CycleClass incl_excl_rhs(const SplitCenter& y, const std::vector<int>& degrees) {
    detail::require_degrees(degrees);
    BlowupModel model(y);
    return detail::alternating_over_subsets(
        static_cast<int>(degrees.size()), model.ambient_basis(), [&](const std::vector<int>& subset) {
            Int total = 0;
            for (int i : subset) total += degrees[static_cast<std::size_t>(i)];
            return model.pushforward_divisor_series(total, -Int(static_cast<int>(subset.size()) - 1));
        });
}

inline CycleClass incl_excl_rhs_empty(int n, const std::vector<int>& degrees) {
    detail::require_degrees(degrees);
    return detail::alternating_over_subsets(
        static_cast<int>(degrees.size()), projective_basis(n), [&](const std::vector<int>& subset) {
            int total = 0;
            for (int i : subset) total += degrees[static_cast<std::size_t>(i)];
            return segre_hypersurface(n, total);
        });
}

inline CycleClass incl_excl_rhs(const TowerP3Lines& tower, const std::vector<int>& subset) {
    std::vector<int> lines = subset;
    return detail::alternating_over_subsets(
        static_cast<int>(lines.size()), tower.ambient_basis(), [&](const std::vector<int>& positions) {
            std::vector<int> sub;
            for (int i : positions) sub.push_back(lines[static_cast<std::size_t>(i)]);
            return union_segre(tower, sub);
        });
}

// The order-r successive approximation built from one hypersurface taken with
// multiplicities: sum_{s=1..r} (-1)^(s-1) C(r,s) s(Y; X^(s); P^n).
inline CycleClass approximation(int r, const SplitCenter& y, int d) {
    if (r < 1) throw error("no components");
    if (d < 1) throw error("invalid degree");
    BlowupModel model(y);
    CycleClass acc = CycleClass::zero(model.ambient_basis());
    for (int s = 1; s <= r; ++s) {
        Rational coef(binomial(static_cast<unsigned>(r), static_cast<unsigned>(s)));
        if (s % 2 == 0) coef = -coef;
        acc += model.pushforward_divisor_series(Int(d) * s, -Int(s - 1)) * coef;
    }
    return acc;
}

// Given the repeated-component classes s(Y; X^(1)) .. s(Y; X^(r)) with
// r > n, predicts s(Y; X^(r+1)) from the stabilized recursion
//   s(Y; X^(r+1)) = sum_{s=1..r} (-1)^(r-s) C(r, s-1) s(Y; X^(s)).
inline CycleClass recursion_next(const std::vector<CycleClass>& values) {
    if (values.empty()) throw error("no components");
    const int r = static_cast<int>(values.size());
    const int n = values.front().basis().ambient_dim();
    if (r <= n) throw error("recursion not valid below stabilization");
    CycleClass acc = CycleClass::zero(values.front().basis());
    for (int s = 1; s <= r; ++s) {
        Rational coef(binomial(static_cast<unsigned>(r), static_cast<unsigned>(s - 1)));
        if ((r - s) % 2 == 1) coef = -coef;
        acc += values[static_cast<std::size_t>(s - 1)] * coef;
    }
    return acc;
}

// Both sides of the defect identity for exactly n components in P^n:
//   incl_excl_rhs - s(Y, P^n)  versus  n! * pi_*(R_1 ... R_n)
// with R_i = d_i h - e on the blow-up along Y. Returns {lhs, rhs}.
inline std::pair<CycleClass, CycleClass> prop_fact_defect(const SplitCenter& y,
                                                          const std::vector<int>& degrees) {
    const int n = y.ambient_dim();
    if (static_cast<int>(degrees.size()) != n) throw error("requires exactly dim M components");
    detail::require_degrees(degrees);
    CycleClass lhs = incl_excl_rhs(y, degrees) - segre_smooth(y);

    BlowupModel model(y);
    // Expand prod_i (d_i h - e); homogeneous of degree n, coefficient of
    // h^(n-j) e^j accumulated exactly.
    std::vector<Int> coef(static_cast<std::size_t>(n) + 1, Int(0));
    coef[0] = 1;
    std::vector<Int> next(coef.size());
    for (int i = 0; i < n; ++i) {
        std::fill(next.begin(), next.end(), Int(0));
        for (int j = 0; j <= i; ++j) {
            if (coef[static_cast<std::size_t>(j)] == 0) continue;
            next[static_cast<std::size_t>(j)] += coef[static_cast<std::size_t>(j)] * degrees[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(j) + 1] -= coef[static_cast<std::size_t>(j)];
        }
        coef.swap(next);
    }
    const Int nfact = factorial(static_cast<unsigned>(n));
    CycleClass rhs = CycleClass::zero(model.ambient_basis());
    for (int j = 0; j <= n; ++j) {
        if (coef[static_cast<std::size_t>(j)] == 0) continue;
        rhs += model.pushforward_monomial(static_cast<unsigned>(n - j), static_cast<unsigned>(j)) *
               Rational(coef[static_cast<std::size_t>(j)] * nfact);
    }
    return {std::move(lhs), std::move(rhs)};
}

// Closed form for two hypersurfaces through Y:
//   s(Y; X1, X2; P^n) = s(X, P^n) + c(O(X))^(-1) ∩ (s(Y, P^n)^v ⊗ O(X))
// where X = X1 ∪ X2 has degree d1 + d2.
inline CycleClass closed_form_repr(int n, int d1, int d2, const SplitCenter& y) {
    if (d1 < 1 || d2 < 1) throw error("invalid degree");
    if (y.ambient_dim() != n) throw error("incompatible bases");
    const int d = d1 + d2;
    CycleClass twisted = tensor_class(dual_class(segre_smooth(y)), d);
    CycleClass capped = cap_projective(HPoly::one_plus_pow(d, -1, static_cast<unsigned>(n)), twisted);
    return segre_hypersurface(n, d) + capped;
}

// The successive-approximation table for hyperplanes in P^5 through a fixed
// smooth quadric surface: rows r = 1..7, each with the approximation, the raw
// repeated-component class it is built from, and a stabilization mark once
// the row equals s(Y, P^5).
struct ApproxTable {
    struct Row {
        int r;
        CycleClass approximation;
        CycleClass repeated_class;  // s(Y; X^(r))
        bool stabilized;
    };
    std::vector<Row> rows;
    CycleClass limit;  // s(Y, P^5)
};

inline ApproxTable approx_table_p5() {
    SplitCenter y = SplitCenter::quadric_surface();
    CycleClass limit = segre_smooth(y);
    ApproxTable table{{}, limit};
    BlowupModel model(y);
    for (int r = 1; r <= 7; ++r) {
        CycleClass a = approximation(r, y, 1);
        CycleClass raw = model.pushforward_divisor_series(Int(r), -Int(r - 1));
        table.rows.push_back({r, a, raw, a == limit});
    }
    return table;
}

}  // namespace segcalc
