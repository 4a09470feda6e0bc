#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace segcalc {

// One generator of a graded group of cycle classes.
struct BasisElement {
    std::string label;
    int dim = 0;
};

// An ordered list of generators, graded by dimension. Instances are immutable
// and cheap to copy; equality is structural.
class Basis {
public:
    Basis(std::string name, int ambient_dim, std::vector<BasisElement> elements)
        : data_(std::make_shared<const Data>(Data{std::move(name), ambient_dim, std::move(elements)})) {
        if (data_->ambient_dim < 0) throw error("basis ambient dimension must be nonnegative");
        for (std::size_t i = 0; i < size(); ++i) {
            const BasisElement& e = element(i);
            if (e.dim < 0 || e.dim > data_->ambient_dim)
                throw error("basis element dimension out of range");
            for (std::size_t j = i + 1; j < size(); ++j)
                if (element(j).label == e.label) throw error("duplicate basis label");
        }
    }

    const std::string& name() const { return data_->name; }
    int ambient_dim() const { return data_->ambient_dim; }
    std::size_t size() const { return data_->elements.size(); }
    const BasisElement& element(std::size_t i) const { return data_->elements.at(i); }
    const std::vector<BasisElement>& elements() const { return data_->elements; }

    std::optional<std::size_t> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < size(); ++i)
            if (element(i).label == label) return i;
        return std::nullopt;
    }

    // The unique element of the given dimension, if there is exactly one.
    std::optional<std::size_t> unique_index_of_dim(int dim) const {
        std::optional<std::size_t> found;
        for (std::size_t i = 0; i < size(); ++i)
            if (element(i).dim == dim) {
                if (found) return std::nullopt;
                found = i;
            }
        return found;
    }

    // True when the basis is exactly one generator per dimension 0..n, the
    // shape of the standard basis of a projective space.
    bool is_standard_projective() const {
        if (size() != static_cast<std::size_t>(ambient_dim()) + 1) return false;
        for (int d = 0; d <= ambient_dim(); ++d)
            if (!unique_index_of_dim(d)) return false;
        return true;
    }

    friend bool operator==(const Basis& a, const Basis& b) {
        if (a.data_ == b.data_) return true;
        if (a.data_->name != b.data_->name) return false;
        if (a.data_->ambient_dim != b.data_->ambient_dim) return false;
        if (a.data_->elements.size() != b.data_->elements.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.element(i).label != b.element(i).label) return false;
            if (a.element(i).dim != b.element(i).dim) return false;
        }
        return true;
    }
    friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }

private:
    struct Data {
        std::string name;
        int ambient_dim;
        std::vector<BasisElement> elements;
    };
    std::shared_ptr<const Data> data_;
};

// The standard basis of P^n: [P^0], ..., [P^n], indexed by dimension.
inline Basis projective_basis(int n) {
    if (n < 0) throw error("projective space dimension must be nonnegative");
    std::vector<BasisElement> els;
    els.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        els.push_back({"[P^" + std::to_string(k) + "]", k});
    return Basis("P^" + std::to_string(n), n, std::move(els));
}

}  // namespace segcalc
