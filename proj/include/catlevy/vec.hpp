#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catlevy/category.hpp"
#include "catlevy/matrix.hpp"

namespace catlevy {

struct Dim {
    std::size_t n = 0;
    bool operator==(const Dim& o) const { return n == o.n; }
};

// Injective: vector spaces with injective maps. Isometric: V^T V = I.
// Coisometric: V V^T = I; the opposite of Isometric, used for the monoidal
// side of the duality check. It has no initial object.
enum class LinearKind { Injective, Isometric, Coisometric };

// Tensor is the direct sum; morphisms are target-dim x source-dim matrices.
template <LinearKind K>
class LinearCategory : public ExprCategory<LinearCategory<K>, Dim, Matrix> {
    using Base = ExprCategory<LinearCategory<K>, Dim, Matrix>;

public:
    using typename Base::Obj;
    using typename Base::Mor;
    using typename Base::Data;

    static std::size_t dim(const Obj& a);
    static Obj space(std::size_t n) { return Obj::leaf(Dim{n}); }

    Data identity_data(const Obj& a) const { return Matrix::identity(dim(a)); }
    Data compose_data(const Mor& g, const Mor& f) const { return g.data * f.data; }
    Data tensor_data(const Mor& f, const Mor& g) const { return block_diag(f.data, g.data); }
    Data structural_data(const Obj& from, const Obj& to) const;

    Mor initial(const Obj& a) const
        requires(K != LinearKind::Coisometric)
    {
        return {this->unit(), a, Matrix::zeros(dim(a), 0)};
    }
    bool is_valid(const Mor& f) const;
    // Column concatenation [f_1 | ... | f_n].
    std::optional<Mor> independence_candidate(const std::vector<Mor>& fs) const
        requires(K != LinearKind::Coisometric);

    Obj random_object(Rng& rng) const;
    Mor random_morphism_into(const Obj& target, Rng& rng) const;
    Mor random_morphism_from(const Obj& source, Rng& rng) const;

    std::string describe(const Obj& a) const;
    std::string describe(const Mor& f) const;
    std::string name() const;
};

using Vec = LinearCategory<LinearKind::Injective>;
using Hilb = LinearCategory<LinearKind::Isometric>;
using HilbCo = LinearCategory<LinearKind::Coisometric>;

// Random m x k isometry (k <= m): columns of a Cayley-transform orthogonal matrix.
Matrix random_isometry(std::size_t m, std::size_t k, Rng& rng);
// Random m x k matrix of rank k (k <= m).
Matrix random_injection(std::size_t m, std::size_t k, Rng& rng);

extern template class LinearCategory<LinearKind::Injective>;
extern template class LinearCategory<LinearKind::Isometric>;
extern template class LinearCategory<LinearKind::Coisometric>;

}  // namespace catlevy
