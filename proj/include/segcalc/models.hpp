#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hpoly.hpp"

namespace segcalc {

enum class CenterKind { linear, quadric_surface, custom };

// A smooth center Z inside P^n whose normal bundle splits as a sum of
// restrictions O(d_i)|_Z. The Chow data is what the blow-up calculus needs:
// a graded basis, the hyperplane action on it, and the proper push-forward
// to the ambient standard basis.
class SplitCenter {
public:
    static SplitCenter linear(int ambient_dim, int dim) {
        require_dims(ambient_dim, dim);
        Basis b = projective_basis(dim);
        std::vector<CycleClass> push;
        Basis pn = projective_basis(ambient_dim);
        for (int k = 0; k <= dim; ++k)
            push.push_back(CycleClass::generator(pn, static_cast<std::size_t>(k)));
        return SplitCenter(CenterKind::linear, ambient_dim, dim,
                           std::vector<int>(static_cast<std::size_t>(ambient_dim - dim), 1), b,
                           projective_h_action(dim),
                           LinearMap(b, pn, std::move(push)),
                           CycleClass::generator(b, static_cast<std::size_t>(dim)));
    }

    // A smooth quadric surface spanning a P^3 inside P^5. The Chow basis
    // keeps the two line rulings separate; a hyperplane section is a (1,1)
    // curve, so H.[Q] = l1 + l2.
    static SplitCenter quadric_surface() {
        const int n = 5, m = 2;
        Basis b("quadric_surface", m,
                {{"[Q]", 2}, {"[l1]", 1}, {"[l2]", 1}, {"[pt]", 0}});
        Basis pn = projective_basis(n);
        std::vector<CycleClass> h_imgs = {
            CycleClass::generator(b, 1) + CycleClass::generator(b, 2),  // H.[Q] = l1 + l2
            CycleClass::generator(b, 3),                                // H.l1 = [pt]
            CycleClass::generator(b, 3),                                // H.l2 = [pt]
            CycleClass::zero(b),
        };
        std::vector<CycleClass> push = {
            CycleClass::generator(pn, 2, 2),  // deg Q = 2
            CycleClass::generator(pn, 1),
            CycleClass::generator(pn, 1),
            CycleClass::generator(pn, 0),
        };
        // N = O(2) + O(1) + O(1): the quadric is a hypersurface in its linear
        // span P^3, which is cut out by two hyperplanes of P^5.
        return SplitCenter(CenterKind::quadric_surface, n, m, {2, 1, 1}, b,
                           LinearMap(b, b, std::move(h_imgs)),
                           LinearMap(b, pn, std::move(push)),
                           CycleClass::generator(b, 0));
    }

    // A smooth complete intersection of hypersurfaces of the given degrees.
    // Only the classes h^j.[Y] enter the calculus, so the basis lists those
    // together with the point class. With dim 0 the intersection is a finite
    // set of deg(Y) reduced points and the fundamental class is deg(Y)*[pt].
    static SplitCenter complete_intersection(int ambient_dim, const std::vector<int>& degrees) {
        const int c = static_cast<int>(degrees.size());
        const int m = ambient_dim - c;
        require_dims(ambient_dim, m);
        Int deg = 1;
        for (int d : degrees) {
            if (d < 1) throw error("invalid degree");
            deg *= d;
        }
        std::vector<BasisElement> els;
        for (int j = 0; j < m; ++j) {
            std::string label = j == 0 ? "[Y]" : (j == 1 ? "h[Y]" : "h^" + std::to_string(j) + "[Y]");
            els.push_back({std::move(label), m - j});
        }
        els.push_back({"[pt]", 0});
        Basis b("ci_" + degree_tag(degrees) + "_in_P" + std::to_string(ambient_dim), m, std::move(els));
        Basis pn = projective_basis(ambient_dim);
        std::vector<CycleClass> h_imgs;
        std::vector<CycleClass> push;
        for (int j = 0; j < m; ++j) {
            h_imgs.push_back(j + 1 < m ? CycleClass::generator(b, static_cast<std::size_t>(j) + 1)
                                       : CycleClass::generator(b, static_cast<std::size_t>(m), Rational(deg)));
            push.push_back(CycleClass::generator(pn, static_cast<std::size_t>(m - j), Rational(deg)));
        }
        h_imgs.push_back(CycleClass::zero(b));      // [pt]
        push.push_back(CycleClass::generator(pn, 0));
        CycleClass fundamental = m > 0 ? CycleClass::generator(b, 0)
                                       : CycleClass::generator(b, 0, Rational(deg));
        return SplitCenter(CenterKind::custom, ambient_dim, m, degrees, b,
                           LinearMap(b, b, std::move(h_imgs)),
                           LinearMap(b, pn, std::move(push)), std::move(fundamental));
    }

    static SplitCenter custom(int ambient_dim, std::vector<int> normal_degrees, Basis chow_basis,
                              LinearMap h_action, LinearMap pushforward, CycleClass fundamental) {
        // Read the dimension before the basis is moved into the argument list;
        // argument evaluation order would otherwise be unspecified.
        const int m = chow_basis.ambient_dim();
        return SplitCenter(CenterKind::custom, ambient_dim, m,
                           std::move(normal_degrees), std::move(chow_basis), std::move(h_action),
                           std::move(pushforward), std::move(fundamental));
    }

    CenterKind kind() const { return kind_; }
    int ambient_dim() const { return n_; }
    int dim() const { return m_; }
    int codim() const { return n_ - m_; }
    const std::vector<int>& normal_degrees() const { return degrees_; }
    const Basis& chow_basis() const { return basis_; }
    const LinearMap& h_action() const { return h_; }
    const LinearMap& pushforward() const { return push_; }
    const CycleClass& fundamental_class() const { return fundamental_; }

    // s_j(N) ∩ [Z] on the center's own basis, from the inverse total Chern
    // class of the split normal bundle.
    const CycleClass& normal_segre_term(int j) const {
        if (j < 0 || j > m_) throw error("normal Segre term index out of range");
        return segre_terms_[static_cast<std::size_t>(j)];
    }

private:
    SplitCenter(CenterKind kind, int n, int m, std::vector<int> degrees, Basis basis,
                LinearMap h_action, LinearMap pushforward, CycleClass fundamental)
        : kind_(kind), n_(n), m_(m), degrees_(std::move(degrees)), basis_(std::move(basis)),
          h_(std::move(h_action)), push_(std::move(pushforward)), fundamental_(std::move(fundamental)) {
        validate();
        // Expand prod (1 + d_i H)^(-1) once; the graded pieces drive every
        // Segre-class computation for this center.
        HPoly inv = HPoly::one();
        for (int d : degrees_) inv = inv.times(HPoly::one_plus_pow(d, -1, static_cast<unsigned>(m_)), static_cast<unsigned>(m_));
        for (int j = 0; j <= m_; ++j)
            segre_terms_.push_back(
                cap_hyperplane_polynomial(HPoly::monomial(static_cast<unsigned>(j), inv.coeff(static_cast<unsigned>(j))), fundamental_, h_));
    }

    void validate() const {
        require_dims(n_, m_);
        if (static_cast<int>(degrees_.size()) != codim())
            throw error("normal bundle rank must equal the codimension");
        for (int d : degrees_)
            if (d < 1) throw error("invalid degree");
        if (basis_.ambient_dim() != m_) throw error("chow basis must be graded by the center's dimension");
        if (!(h_.source() == basis_) || !(h_.target() == basis_)) throw error("invalid hyperplane action");
        if (!h_.shifts_dim_by(-1)) throw error("invalid hyperplane action");
        if (!(push_.source() == basis_)) throw error("incompatible bases");
        if (!(push_.target() == projective_basis(n_))) throw error("incompatible bases");
        if (!push_.shifts_dim_by(0)) throw error("pushforward must preserve dimension");
        std::optional<std::size_t> pt = basis_.unique_index_of_dim(0);
        if (!pt) throw error("chow basis needs a unique point class");
        if (!(push_.image_of(*pt) == CycleClass::generator(projective_basis(n_), 0)))
            throw error("point class must push forward to [P^0]");
        if (fundamental_.is_zero() || !(fundamental_.basis() == basis_))
            throw error("invalid fundamental class");
        for (const auto& [i, c] : fundamental_.coeffs()) {
            (void)c;
            if (basis_.element(i).dim != m_) throw error("invalid fundamental class");
        }
    }

    static void require_dims(int n, int m) {
        if (n < 1 || m < 0 || m >= n) throw error("center must have positive codimension");
    }

    static std::string degree_tag(const std::vector<int>& degrees) {
        std::string s;
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            if (i) s += "_";
            s += std::to_string(degrees[i]);
        }
        return s;
    }

    CenterKind kind_;
    int n_;
    int m_;
    std::vector<int> degrees_;
    Basis basis_;
    LinearMap h_;
    LinearMap push_;
    CycleClass fundamental_;
    std::vector<CycleClass> segre_terms_;
};

// The blow-up of P^n along a split center, presented through its push-forward
// calculus: every class here is a polynomial in the hyperplane pull-back h
// and the exceptional divisor e, and only its image downstairs is ever needed.
class BlowupModel {
public:
    explicit BlowupModel(SplitCenter center)
        : center_(std::move(center)), ambient_(projective_basis(center_.ambient_dim())) {}

    const SplitCenter& center() const { return center_; }
    const Basis& ambient_basis() const { return ambient_; }

    // pi_*(h^a e^b). For b = 0 this is h^a ∩ [P^n]. For 0 < b < codim the
    // fibers of the exceptional divisor absorb the class. From b = codim on,
    // pi_*(e^b) = (-1)^(b-1) s_(b-codim)(N) ∩ [Z] pushed to the ambient space.
    CycleClass pushforward_monomial(unsigned a, unsigned b) const {
        const int n = center_.ambient_dim();
        if (b == 0) {
            if (a > static_cast<unsigned>(n)) return CycleClass::zero(ambient_);
            return CycleClass::generator(ambient_, static_cast<std::size_t>(n - static_cast<int>(a)));
        }
        const int j = static_cast<int>(b) - center_.codim();
        if (j < 0 || j > center_.dim()) return CycleClass::zero(ambient_);
        CycleClass downstairs = center_.pushforward().apply(center_.normal_segre_term(j));
        if (b % 2 == 0) downstairs = -downstairs;  // sign (-1)^(b-1)
        if (a == 0) return downstairs;
        return cap_projective(HPoly::monomial(a), downstairs);
    }

    // pi_*(D/(1+D)) for D = alpha*h + beta*e, expanded as the alternating sum
    // of pi_*(D^k), k = 1..n. The expansion is exact: D^k vanishes under
    // push-forward beyond k = n.
    CycleClass pushforward_divisor_series(const Int& alpha, const Int& beta) const {
        const int n = center_.ambient_dim();
        CycleClass acc = CycleClass::zero(ambient_);
        for (int k = 1; k <= n; ++k) {
            const int sign = k % 2 == 1 ? 1 : -1;
            for (int j = 0; j <= k; ++j) {
                Int coef = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) *
                           int_pow(alpha, static_cast<unsigned>(k - j)) * int_pow(beta, static_cast<unsigned>(j));
                if (coef == 0) continue;
                if (sign < 0) coef = -coef;
                acc += pushforward_monomial(static_cast<unsigned>(k - j), static_cast<unsigned>(j)) * Rational(coef);
            }
        }
        return acc;
    }

private:
    SplitCenter center_;
    Basis ambient_;
};

// Whether the distinguished subscheme in a configuration of lines through a
// common point is that point or empty.
enum class YMode { point, empty };

// The two-stage model over P^3 for m distinct lines through a point p: first
// blow up p, then the (now disjoint) strict transforms of the lines. Classes
// upstairs are polynomials in the pulled-back exceptional class e0bar of the
// point and the exceptional classes e1..em of the lines; the hyperplane
// pull-back never appears because every divisor of interest is supported on
// the exceptional locus.
//
// Push-forward rules to P^3 (everything else vanishes):
//   e0bar^0 -> [P^3]      e0bar^3 -> [P^0]
//   ei^2 -> -[P^1]        e0bar * ei^2 -> -[P^0]
// Mixed products ei*ej (i != j) vanish because the strict transforms of the
// lines are disjoint after the first blow-up.
class TowerP3Lines {
public:
    struct Divisor {
        Int e0;                 // coefficient of e0bar
        std::vector<Int> line;  // coefficient of e_i, one per line
    };

    TowerP3Lines(int num_lines, YMode mode) : m_(num_lines), mode_(mode), ambient_(projective_basis(3)) {
        if (m_ < 1) throw error("no components");
    }

    int num_lines() const { return m_; }
    YMode mode() const { return mode_; }
    const Basis& ambient_basis() const { return ambient_; }

    // pi_*(e0bar^a * e_i^b); line is 0-based, pass line < 0 for no line
    // factor. Component subsets elsewhere in this class are 1-based labels.
    CycleClass pushforward_monomial(unsigned a, int line, unsigned b) const {
        if (line >= m_) throw error("line index out of range");
        if (b == 0 || line < 0) {
            if (b != 0) throw error("line index out of range");
            if (a == 0) return CycleClass::generator(ambient_, 3);
            if (a == 3) return CycleClass::generator(ambient_, 0);
            return CycleClass::zero(ambient_);
        }
        if (b == 2 && a == 0) return CycleClass::generator(ambient_, 1, -1);
        if (b == 2 && a == 1) return CycleClass::generator(ambient_, 0, -1);
        return CycleClass::zero(ambient_);
    }

    // The divisor cut out by the union of the listed components (1-based
    // indices). With Y = p each component contributes its line class and the
    // common point contributes e0bar once; with Y empty the point appears
    // once per component.
    Divisor union_divisor(const std::vector<int>& subset) const {
        if (subset.empty()) throw error("no components");
        std::set<int> seen;
        for (int i : subset) {
            if (i < 1 || i > m_) throw error("line index out of range");
            if (!seen.insert(i).second) throw error("line index repeated");
        }
        Divisor d{Int(0), std::vector<Int>(static_cast<std::size_t>(m_), Int(0))};
        d.e0 = mode_ == YMode::point ? Int(1) : Int(static_cast<int>(seen.size()));
        for (int i : seen) d.line[static_cast<std::size_t>(i - 1)] = 1;
        return d;
    }

    // pi_*(D/(1+D)) over P^3; exact, the expansion stops at D^3.
    CycleClass pushforward_divisor_series(const Divisor& d) const {
        if (d.line.size() != static_cast<std::size_t>(m_)) throw error("divisor has wrong number of line entries");
        CycleClass acc = CycleClass::zero(ambient_);
        for (int k = 1; k <= 3; ++k) {
            const int sign = k % 2 == 1 ? 1 : -1;
            // pure e0bar^k term
            add_scaled(acc, pushforward_monomial(static_cast<unsigned>(k), -1, 0), int_pow(d.e0, static_cast<unsigned>(k)), sign);
            // terms with one line class; mixed products of two lines vanish
            for (int i = 0; i < m_; ++i) {
                const Int& bi = d.line[static_cast<std::size_t>(i)];
                if (bi == 0) continue;
                for (int j = 1; j <= k; ++j) {
                    Int coef = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) *
                               int_pow(d.e0, static_cast<unsigned>(k - j)) * int_pow(bi, static_cast<unsigned>(j));
                    add_scaled(acc, pushforward_monomial(static_cast<unsigned>(k - j), i, static_cast<unsigned>(j)), coef, sign);
                }
            }
        }
        return acc;
    }

private:
    static void add_scaled(CycleClass& acc, const CycleClass& term, const Int& coef, int sign) {
        if (coef == 0 || term.is_zero()) return;
        acc += term * Rational(sign < 0 ? Int(-coef) : coef);
    }

    int m_;
    YMode mode_;
    Basis ambient_;
};

}  // namespace segcalc
