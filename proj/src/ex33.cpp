#include "catlevy/ex33.hpp"

#include <map>

namespace catlevy {

std::size_t SumProduct::dim(const Obj& a) {
    switch (a.kind()) {
    case Obj::Kind::Unit: return 0;
    case Obj::Kind::Leaf: return a.atom().n;
    case Obj::Kind::Node: {
        const auto l = dim(a.left()), r = dim(a.right());
        return l + r + l * r;
    }
    }
    return 0;
}

std::vector<SumProduct::Label> SumProduct::labels(const Obj& a, std::size_t first_leaf) {
    std::vector<Label> out;
    switch (a.kind()) {
    case Obj::Kind::Unit: break;
    case Obj::Kind::Leaf:
        for (std::size_t i = 0; i < a.atom().n; ++i) out.push_back({{first_leaf, i}});
        break;
    case Obj::Kind::Node: {
        auto l = labels(a.left(), first_leaf);
        auto r = labels(a.right(), first_leaf + a.left().leaf_count());
        out = l;
        out.insert(out.end(), r.begin(), r.end());
        for (const auto& x : l)
            for (const auto& y : r) {
                Label u = x;
                u.insert(y.begin(), y.end());
                out.push_back(u);
            }
        break;
    }
    }
    return out;
}

SumProduct::Data SumProduct::tensor_data(const Mor& f, const Mor& g) const {
    return block_diag(block_diag(f.data, g.data), kron(f.data, g.data));
}

SumProduct::Data SumProduct::structural_data(const Obj& from, const Obj& to) const {
    if (from.leaves() != to.leaves())
        throw std::invalid_argument("structural map between different leaf sequences");
    const auto lf = labels(from), lt = labels(to);
    std::map<Label, std::size_t> pos;
    for (std::size_t i = 0; i < lf.size(); ++i) pos[lf[i]] = i;
    Matrix p(lt.size(), lf.size());
    for (std::size_t i = 0; i < lt.size(); ++i) p(i, pos.at(lt[i])) = 1;
    return p;
}

bool SumProduct::is_valid(const Mor& f) const {
    return f.data.rows() == dim(f.target) && f.data.cols() == dim(f.source);
}

std::optional<SumProduct::Mor> SumProduct::independence_candidate(const std::vector<Mor>& fs) const {
    Obj src = fs[0].source;
    for (std::size_t i = 1; i < fs.size(); ++i) src = tensor_obj(src, fs[i].source);
    // which factor owns each leaf, and the label positions inside each factor
    std::vector<std::size_t> owner;
    std::vector<std::size_t> offset;
    std::vector<std::map<Label, std::size_t>> pos(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        offset.push_back(owner.size());
        auto ls = labels(fs[i].source, owner.size());
        for (std::size_t j = 0; j < ls.size(); ++j) pos[i][ls[j]] = j;
        for (std::size_t k = 0; k < fs[i].source.leaf_count(); ++k) owner.push_back(i);
    }
    const auto ls = labels(src);
    const std::size_t m = dim(fs[0].target);
    Matrix h(m, ls.size());
    for (std::size_t c = 0; c < ls.size(); ++c) {
        const std::size_t i = owner.at(ls[c].begin()->first);
        bool single = true;
        for (const auto& [leaf, idx] : ls[c]) single = single && owner[leaf] == i;
        if (!single) continue;
        const std::size_t col = pos[i].at(ls[c]);
        for (std::size_t r = 0; r < m; ++r) h(r, c) = fs[i].data(r, col);
    }
    return Mor{src, fs[0].target, h};
}

SumProduct::Obj SumProduct::random_object(Rng& rng) const { return space(rand_below(rng, 3)); }

SumProduct::Mor SumProduct::random_morphism_into(const Obj& target, Rng& rng) const {
    const std::size_t m = dim(target), k = rand_below(rng, 3);
    Matrix a(m, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) a(i, j) = rand_rational(rng, 2, 2);
    return {space(k), target, a};
}

SumProduct::Mor SumProduct::random_morphism_from(const Obj& source, Rng& rng) const {
    const std::size_t k = dim(source), m = rand_below(rng, 4);
    Matrix a(m, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) a(i, j) = rand_rational(rng, 2, 2);
    return {source, space(m), a};
}

std::string SumProduct::describe(const Obj& a) const {
    return a.str([](const Dim& d) { return "V" + std::to_string(d.n); });
}

std::string SumProduct::describe(const Mor& f) const {
    return describe(f.source) + " -> " + describe(f.target) + " " + f.data.str();
}

}  // namespace catlevy
