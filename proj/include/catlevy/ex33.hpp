#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catlevy/category.hpp"
#include "catlevy/matrix.hpp"
#include "catlevy/vec.hpp"

namespace catlevy {

// Vector spaces with all linear maps and V (.) W = V + W + V (x) W,
// f (.) g = diag(f, g, f (x) g). Every linear map is a morphism, so
// independence morphisms are far from unique. Not used by the process builder.
class SumProduct : public ExprCategory<SumProduct, Dim, Matrix> {
public:
    // A basis vector is a set of (leaf position, basis index) pairs.
    using Label = std::set<std::pair<std::size_t, std::size_t>>;

    static Obj space(std::size_t n) { return Obj::leaf(Dim{n}); }
    static std::size_t dim(const Obj& a);
    // Basis labels in canonical order: left labels, right labels, then products.
    static std::vector<Label> labels(const Obj& a, std::size_t first_leaf = 0);

    Data identity_data(const Obj& a) const { return Matrix::identity(dim(a)); }
    Data compose_data(const Mor& g, const Mor& f) const { return g.data * f.data; }
    Data tensor_data(const Mor& f, const Mor& g) const;
    // Permutation matching labels of the two bracketings.
    Data structural_data(const Obj& from, const Obj& to) const;

    Mor initial(const Obj& a) const { return {unit(), a, Matrix::zeros(dim(a), 0)}; }
    bool is_valid(const Mor& f) const;
    // f_i on the labels of the i-th factor, zero on mixed labels.
    std::optional<Mor> independence_candidate(const std::vector<Mor>& fs) const;

    Obj random_object(Rng& rng) const;
    Mor random_morphism_into(const Obj& target, Rng& rng) const;
    Mor random_morphism_from(const Obj& source, Rng& rng) const;

    std::string describe(const Obj& a) const;
    std::string describe(const Mor& f) const;
    std::string name() const { return "ex33"; }
};

}  // namespace catlevy
