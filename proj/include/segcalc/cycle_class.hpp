#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "numeric.hpp"

namespace segcalc {

// A formal rational combination of basis elements. Zero coefficients are
// never stored, so structural equality is exact class equality.
class CycleClass {
public:
    explicit CycleClass(Basis basis) : basis_(std::move(basis)) {}

    CycleClass(Basis basis, std::map<std::size_t, Rational> coeffs)
        : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
        for (const auto& [i, c] : coeffs_)
            if (i >= basis_.size()) throw error("coefficient index outside basis");
        normalize();
    }

    static CycleClass generator(const Basis& basis, std::size_t index, const Rational& c = 1) {
        CycleClass a(basis);
        a.add_term(index, c);
        return a;
    }

    static CycleClass zero(const Basis& basis) { return CycleClass(basis); }

    const Basis& basis() const { return basis_; }
    const std::map<std::size_t, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(std::size_t index) const {
        auto it = coeffs_.find(index);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    // Sum of coefficients in one dimension. On a standard projective basis
    // this is the coefficient of [P^dim].
    Rational coefficient_at_dim(int dim) const {
        Rational s = 0;
        for (const auto& [i, c] : coeffs_)
            if (basis_.element(i).dim == dim) s += c;
        return s;
    }

    void add_term(std::size_t index, const Rational& c) {
        if (index >= basis_.size()) throw error("coefficient index outside basis");
        Rational& slot = coeffs_[index];
        slot += c;
        if (slot == 0) coeffs_.erase(index);
    }

    CycleClass operator+(const CycleClass& o) const {
        require_same_basis(o);
        CycleClass r = *this;
        for (const auto& [i, c] : o.coeffs_) r.add_term(i, c);
        return r;
    }

    CycleClass operator-() const {
        CycleClass r(basis_);
        for (const auto& [i, c] : coeffs_) r.coeffs_.emplace(i, -c);
        return r;
    }

    CycleClass operator-(const CycleClass& o) const { return *this + (-o); }

    CycleClass& operator+=(const CycleClass& o) { return *this = *this + o; }
    CycleClass& operator-=(const CycleClass& o) { return *this = *this - o; }

    CycleClass operator*(const Rational& s) const {
        CycleClass r(basis_);
        if (s == 0) return r;
        for (const auto& [i, c] : coeffs_) r.coeffs_.emplace(i, c * s);
        return r;
    }

    friend CycleClass operator*(const Rational& s, const CycleClass& a) { return a * s; }

    friend bool operator==(const CycleClass& a, const CycleClass& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycleClass& a, const CycleClass& b) { return !(a == b); }

    bool has_integer_coefficients() const {
        for (const auto& [i, c] : coeffs_) {
            (void)i;
            if (!is_integer(c)) return false;
        }
        return true;
    }

    // "2[P^2] - 8[P^1] + 22[P^0]"; terms ordered by descending dimension.
    std::string render() const {
        if (coeffs_.empty()) return "0";
        std::vector<std::pair<std::size_t, Rational>> terms(coeffs_.begin(), coeffs_.end());
        std::stable_sort(terms.begin(), terms.end(), [this](const auto& a, const auto& b) {
            int da = basis_.element(a.first).dim;
            int db = basis_.element(b.first).dim;
            if (da != db) return da > db;
            return a.first < b.first;
        });
        std::ostringstream out;
        bool first = true;
        for (const auto& [i, c] : terms) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (mag != 1) out << rational_str(mag);
            out << basis_.element(i).label;
        }
        return out.str();
    }

private:
    void require_same_basis(const CycleClass& o) const {
        if (!(basis_ == o.basis_)) throw error("incompatible bases");
    }

    void normalize() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
    }

    Basis basis_;
    std::map<std::size_t, Rational> coeffs_;
};

// A grading-compatible linear map between graded groups, given by the images
// of the source generators.
class LinearMap {
public:
    LinearMap(Basis source, Basis target, std::vector<CycleClass> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        if (images_.size() != source_.size()) throw error("linear map needs one image per generator");
        for (const CycleClass& img : images_)
            if (!(img.basis() == target_)) throw error("incompatible bases");
    }

    const Basis& source() const { return source_; }
    const Basis& target() const { return target_; }
    const CycleClass& image_of(std::size_t index) const { return images_.at(index); }

    CycleClass apply(const CycleClass& a) const {
        if (!(a.basis() == source_)) throw error("incompatible bases");
        CycleClass r(target_);
        for (const auto& [i, c] : a.coeffs()) r += images_[i] * c;
        return r;
    }

    // True when every generator of dimension d maps into dimension d + shift.
    bool shifts_dim_by(int shift) const {
        for (std::size_t i = 0; i < images_.size(); ++i) {
            int d = source_.element(i).dim;
            for (const auto& [j, c] : images_[i].coeffs()) {
                (void)c;
                if (target_.element(j).dim != d + shift) return false;
            }
        }
        return true;
    }

private:
    Basis source_;
    Basis target_;
    std::vector<CycleClass> images_;
};

// Intersecting with a hyperplane section on P^n: [P^k] -> [P^(k-1)], [P^0] -> 0.
inline LinearMap projective_h_action(int n) {
    Basis b = projective_basis(n);
    std::vector<CycleClass> images;
    images.reserve(b.size());
    for (int k = 0; k <= n; ++k)
        images.push_back(k == 0 ? CycleClass::zero(b) : CycleClass::generator(b, static_cast<std::size_t>(k) - 1));
    return LinearMap(b, b, std::move(images));
}

}  // namespace segcalc
