#include "catlevy/vec.hpp"

namespace catlevy {

Matrix random_injection(std::size_t m, std::size_t k, Rng& rng) {
    for (;;) {
        Matrix a(m, k);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j)
                a(i, j) = rand_below(rng, 3) == 0 ? Rational(0) : rand_rational(rng, 2, 2);
        if (a.rank() == k) return a;
    }
}

Matrix random_isometry(std::size_t m, std::size_t k, Rng& rng) {
    // Q = (I - S)(I + S)^{-1} is orthogonal for skew S; I + S is always invertible.
    Matrix s(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            s(i, j) = rand_rational(rng, 1, 2);
            s(j, i) = -s(i, j);
        }
    const Matrix id = Matrix::identity(m);
    Matrix q = (id - s) * *(id + s).inverse();
    // random column selection and signs
    std::vector<std::size_t> cols(m);
    for (std::size_t i = 0; i < m; ++i) cols[i] = i;
    for (std::size_t i = m; i > 1; --i) std::swap(cols[i - 1], cols[rand_below(rng, i)]);
    Matrix v(m, k);
    for (std::size_t j = 0; j < k; ++j) {
        const int sign = rand_bool(rng) ? 1 : -1;
        for (std::size_t i = 0; i < m; ++i) v(i, j) = q(i, cols[j]) * sign;
    }
    return v;
}

template <LinearKind K>
std::size_t LinearCategory<K>::dim(const Obj& a) {
    std::size_t n = 0;
    for (const auto& d : a.leaves()) n += d.n;
    return n;
}

template <LinearKind K>
typename LinearCategory<K>::Data LinearCategory<K>::structural_data(const Obj& from, const Obj& to) const {
    if (from.leaves() != to.leaves())
        throw std::invalid_argument("structural map between different leaf sequences");
    return Matrix::identity(dim(from));
}

template <LinearKind K>
bool LinearCategory<K>::is_valid(const Mor& f) const {
    const std::size_t m = dim(f.target), k = dim(f.source);
    if (f.data.rows() != m || f.data.cols() != k) return false;
    switch (K) {
    case LinearKind::Injective: return f.data.rank() == k;
    case LinearKind::Isometric: return f.data.transpose() * f.data == Matrix::identity(k);
    case LinearKind::Coisometric: return f.data * f.data.transpose() == Matrix::identity(m);
    }
    return false;
}

template <LinearKind K>
std::optional<typename LinearCategory<K>::Mor> LinearCategory<K>::independence_candidate(
    const std::vector<Mor>& fs) const
    requires(K != LinearKind::Coisometric)
{
    std::vector<Matrix> blocks;
    Obj src = fs[0].source;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        blocks.push_back(fs[i].data);
        if (i) src = this->tensor_obj(src, fs[i].source);
    }
    return Mor{src, fs[0].target, hconcat(blocks)};
}

template <LinearKind K>
typename LinearCategory<K>::Obj LinearCategory<K>::random_object(Rng& rng) const {
    Obj o = space(rand_below(rng, 3));
    if (rand_below(rng, 4) == 0) o = this->tensor_obj(o, space(rand_below(rng, 2)));
    return o;
}

template <LinearKind K>
typename LinearCategory<K>::Mor LinearCategory<K>::random_morphism_into(const Obj& target, Rng& rng) const {
    const std::size_t m = dim(target);
    if (K == LinearKind::Coisometric) {
        const std::size_t k = m + rand_below(rng, 2);
        return {space(k), target, random_isometry(k, m, rng).transpose()};
    }
    const std::size_t k = rand_below(rng, m + 1);
    Matrix a = K == LinearKind::Injective ? random_injection(m, k, rng) : random_isometry(m, k, rng);
    return {space(k), target, a};
}

template <LinearKind K>
typename LinearCategory<K>::Mor LinearCategory<K>::random_morphism_from(const Obj& source, Rng& rng) const {
    const std::size_t k = dim(source);
    if (K == LinearKind::Coisometric) {
        const std::size_t m = rand_below(rng, k + 1);
        return {source, space(m), random_isometry(k, m, rng).transpose()};
    }
    const std::size_t m = k + rand_below(rng, 2);
    Matrix a = K == LinearKind::Injective ? random_injection(m, k, rng) : random_isometry(m, k, rng);
    return {source, space(m), a};
}

template <LinearKind K>
std::string LinearCategory<K>::describe(const Obj& a) const {
    return a.str([](const Dim& d) { return "Q^" + std::to_string(d.n); });
}

template <LinearKind K>
std::string LinearCategory<K>::describe(const Mor& f) const {
    return describe(f.source) + " -> " + describe(f.target) + " " + f.data.str();
}

template <LinearKind K>
std::string LinearCategory<K>::name() const {
    switch (K) {
    case LinearKind::Injective: return "vec";
    case LinearKind::Isometric: return "hilb";
    case LinearKind::Coisometric: return "hilb-co";
    }
    return "?";
}

template class LinearCategory<LinearKind::Injective>;
template class LinearCategory<LinearKind::Isometric>;
template class LinearCategory<LinearKind::Coisometric>;

}  // namespace catlevy
