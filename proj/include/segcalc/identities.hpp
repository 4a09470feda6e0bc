#pragma once

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "formal_series.hpp"

namespace segcalc {

// The formal-variable shadow of the defect computation: r divisor variables
// R_1..R_r, optionally a variable Y for the distinguished subscheme, and the
// alternating sum over sub-collections of D_S/(1+D_S) with
// D_S = Y + sum_{i in S} R_i. Including the empty sub-collection makes the
// sum divisible by the full product R_1...R_r.
struct DefectSeriesSpec {
    int r = 1;
    unsigned truncation = 0;
    bool include_y = true;
};

namespace detail {

inline std::vector<std::string> defect_vars(const DefectSeriesSpec& spec) {
    std::vector<std::string> vars;
    for (int i = 1; i <= spec.r; ++i) vars.push_back("R" + std::to_string(i));
    if (spec.include_y) vars.push_back("Y");
    return vars;
}

// Relabel the first |subset| divisor variables onto the positions listed in
// subset; the Y exponent (last position, when present) stays in place. The
// input may only involve those leading variables and Y.
inline FormalSeries remap_divisors(const FormalSeries& s, const std::vector<std::size_t>& subset, bool has_y) {
    FormalSeries out(s.vars(), s.truncation());
    for (const auto& [e, c] : s.terms()) {
        Exponents mapped(e.size(), 0);
        if (has_y) mapped.back() = e.back();
        for (std::size_t k = 0; k < subset.size(); ++k) mapped[subset[k]] = e[k];
        out.add_term(mapped, c);
    }
    return out;
}

}  // namespace detail

// sum over all sub-collections S (empty included) of (-1)^|S| D_S/(1+D_S),
// negated so the r = 1, Y = 0 case is R_1/(1+R_1) itself. The expansion of
// D_S/(1+D_S) depends only on |S| up to renaming variables, so it is computed
// once per cardinality and relabeled onto each subset.
inline FormalSeries defect_series(const DefectSeriesSpec& spec) {
    if (spec.r < 1 || spec.r > 6) throw error("component count out of range");
    if (spec.truncation < static_cast<unsigned>(spec.r)) throw error("truncation below component count");
    if (spec.truncation > 12) throw error("truncation out of range");
    const std::vector<std::string> vars = detail::defect_vars(spec);
    const std::size_t nv = vars.size();
    FormalSeries total(vars, spec.truncation);
    for (int s = 0; s <= spec.r; ++s) {
        FormalSeries d(vars, spec.truncation);
        for (int i = 0; i < s; ++i) d += FormalSeries::variable(vars, spec.truncation, static_cast<std::size_t>(i));
        if (spec.include_y) d += FormalSeries::variable(vars, spec.truncation, nv - 1);
        if (d.is_zero()) continue;  // empty sub-collection with no Y contributes nothing
        FormalSeries g = series_geometric(d);
        // (-1)^|S| with a global flip: sub-collections of odd size enter with +.
        const bool positive = s % 2 == 1;
        for (unsigned mask = 0; mask < (1u << spec.r); ++mask) {
            if (std::popcount(mask) != s) continue;
            std::vector<std::size_t> subset;
            for (int i = 0; i < spec.r; ++i)
                if (mask & (1u << i)) subset.push_back(static_cast<std::size_t>(i));
            FormalSeries term = detail::remap_divisors(g, subset, spec.include_y);
            total += positive ? term : -term;
        }
    }
    return total;
}

// The monomial R_1...R_r in the defect variable order.
inline Exponents defect_target_monomial(const DefectSeriesSpec& spec) {
    Exponents m(detail::defect_vars(spec).size(), 0);
    for (int i = 0; i < spec.r; ++i) m[static_cast<std::size_t>(i)] = 1;
    return m;
}

inline std::optional<Exponents> defect_series_offender(const DefectSeriesSpec& spec) {
    return first_nondivisible_term(defect_series(spec), defect_target_monomial(spec));
}

// Every term of the defect series is divisible by R_1...R_r.
inline bool defect_series_divisible(const DefectSeriesSpec& spec) {
    return !defect_series_offender(spec).has_value();
}

// sum_{s=0..n} (-1)^(n-s) C(n,s) s^r, with 0^0 = 1. Equals n! at r = n and
// vanishes for 0 <= r < n.
inline Int alternating_binomial_sum(unsigned n, unsigned r) {
    if (n > 60 || r > 60) throw error("argument out of range");
    Int acc = 0;
    for (unsigned s = 0; s <= n; ++s) {
        Int term = binomial(n, s) * int_pow(Int(s), r);
        if (s == 0 && r == 0) term = 1;
        acc += (n - s) % 2 == 0 ? term : -term;
    }
    return acc;
}

// The coefficient of R^n in sum_{s=1..n} (-1)^(s-1) C(n,s) (sR)/(1+sR),
// computed by expanding the series exactly. Its magnitude is n!; the function
// checks that before returning.
inline Int prop_fact_coefficient(unsigned n) {
    if (n < 1 || n > 20) throw error("argument out of range");
    const std::vector<std::string> vars = {"R"};
    FormalSeries acc(vars, n);
    for (unsigned s = 1; s <= n; ++s) {
        FormalSeries d = FormalSeries::variable(vars, n, 0).scaled(Rational(s));
        FormalSeries g = series_geometric(d).scaled(Rational(binomial(n, s)));
        acc += (s - 1) % 2 == 0 ? g : -g;
    }
    Rational c = acc.coefficient(Exponents{n});
    if (!is_integer(c)) throw error("defect coefficient is not an integer");
    Int value = numerator(c);
    Int mag = value < 0 ? Int(-value) : value;
    if (mag != factorial(n)) throw error("defect coefficient magnitude differs from n factorial");
    return value;
}

}  // namespace segcalc
