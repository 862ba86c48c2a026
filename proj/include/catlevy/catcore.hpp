#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catlevy/category.hpp"
#include "catlevy/expr.hpp"
#include "catlevy/report.hpp"

namespace catlevy {

template <class C>
using ObjOf = typename C::Obj;
template <class C>
using MorOf = typename C::Mor;

// Left-associated tensor; E for an empty list.
template <TensorCategory C>
ObjOf<C> tensor_all(const C& cat, const std::vector<ObjOf<C>>& objs) {
    if (objs.empty()) return cat.unit();
    ObjOf<C> acc = objs[0];
    for (std::size_t i = 1; i < objs.size(); ++i) acc = cat.tensor_obj(acc, objs[i]);
    return acc;
}

template <TensorCategory C>
MorOf<C> tensor_all_mor(const C& cat, const std::vector<MorOf<C>>& mors) {
    if (mors.empty()) return cat.identity(cat.unit());
    MorOf<C> acc = mors[0];
    for (std::size_t i = 1; i < mors.size(); ++i) acc = cat.tensor_mor(acc, mors[i]);
    return acc;
}

template <TensorCategory C>
ObjOf<C> build_object(const C& cat, const Formal& f, const std::vector<ObjOf<C>>& leaves) {
    switch (f.kind()) {
    case Formal::Kind::Unit: return cat.unit();
    case Formal::Kind::Leaf: return leaves.at(static_cast<std::size_t>(f.atom()));
    case Formal::Kind::Node:
        return cat.tensor_obj(build_object(cat, f.left(), leaves), build_object(cat, f.right(), leaves));
    }
    throw std::logic_error("bad formal expression");
}

namespace detail {

template <class C>
struct Iso {
    MorOf<C> fwd, bwd;
};

// obj(NL) * obj(NR) -> obj(left_assoc(L ++ R)) for left-associated NL, NR.
template <TensorCategory C>
Iso<C> merge_normal(const C& cat, const Formal& nl, const Formal& nr,
                    const std::vector<ObjOf<C>>& leaves) {
    const auto ol = build_object(cat, nl, leaves);
    const auto orr = build_object(cat, nr, leaves);
    if (nr.is_unit()) return {cat.runit(ol), cat.runit_inv(ol)};
    if (nl.is_unit()) return {cat.lunit(orr), cat.lunit_inv(orr)};
    if (nr.is_leaf()) {
        auto id = cat.identity(cat.tensor_obj(ol, orr));
        return {id, id};
    }
    // NL * (NR' * x)  ->  (NL * NR') * x  ->  left_assoc(L ++ R') * x
    const Formal rp = nr.left();
    const auto x = build_object(cat, nr.right(), leaves);
    const auto orp = build_object(cat, rp, leaves);
    auto inner = merge_normal(cat, nl, rp, leaves);
    auto idx = cat.identity(x);
    auto fwd = cat.compose(cat.tensor_mor(inner.fwd, idx), cat.assoc_inv(ol, orp, x));
    auto bwd = cat.compose(cat.assoc(ol, orp, x), cat.tensor_mor(inner.bwd, idx));
    return {fwd, bwd};
}

inline std::vector<int> formal_leaves(const Formal& f) { return f.leaves(); }

// obj(f) -> obj(left_assoc(leaves of f)), with inverse.
template <TensorCategory C>
Iso<C> normalize(const C& cat, const Formal& f, const std::vector<ObjOf<C>>& leaves) {
    if (!f.is_node()) {
        auto id = cat.identity(build_object(cat, f, leaves));
        return {id, id};
    }
    auto nl = normalize(cat, f.left(), leaves);
    auto nr = normalize(cat, f.right(), leaves);
    auto m1f = cat.tensor_mor(nl.fwd, nr.fwd);
    auto m1b = cat.tensor_mor(nl.bwd, nr.bwd);
    auto m2 = merge_normal(cat, left_assoc(f.left().leaves()), left_assoc(f.right().leaves()), leaves);
    return {cat.compose(m2.fwd, m1f), cat.compose(m1b, m2.bwd)};
}

}  // namespace detail

// The coherence isomorphism between two bracketings (units allowed) of the
// same leaf sequence, built from associators and unit constraints.
template <TensorCategory C>
MorOf<C> reassociate(const C& cat, const Formal& from, const Formal& to,
                     const std::vector<ObjOf<C>>& leaves) {
    if (from.leaves() != to.leaves())
        throw std::invalid_argument("reassociate: bracketings have different leaf sequences");
    auto a = detail::normalize(cat, from, leaves);
    auto b = detail::normalize(cat, to, leaves);
    return cat.compose(b.bwd, a.fwd);
}

// iota^1 = (id * 1_B) o r_A^{-1}
template <InitialUnitCategory C>
MorOf<C> inclusion1(const C& cat, const ObjOf<C>& a, const ObjOf<C>& b) {
    return cat.compose(cat.tensor_mor(cat.identity(a), cat.initial(b)), cat.runit_inv(a));
}

// iota^2 = (1_A * id) o l_B^{-1}
template <InitialUnitCategory C>
MorOf<C> inclusion2(const C& cat, const ObjOf<C>& a, const ObjOf<C>& b) {
    return cat.compose(cat.tensor_mor(cat.initial(a), cat.identity(b)), cat.lunit_inv(b));
}

template <InitialUnitCategory C>
std::pair<MorOf<C>, MorOf<C>> canonical_inclusions(const C& cat, const ObjOf<C>& a,
                                                   const ObjOf<C>& b) {
    return {inclusion1(cat, a, b), inclusion2(cat, a, b)};
}

// Inclusion of B_{i_1} * ... * B_{i_k} into B_0 * ... * B_{n-1}, both
// left-associated. Indices are 0-based and strictly increasing.
template <InitialUnitCategory C>
MorOf<C> multi_inclusion(const C& cat, const std::vector<std::size_t>& indices,
                         const std::vector<ObjOf<C>>& objects) {
    if (indices.empty()) throw std::domain_error("multi_inclusion: empty index list");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= objects.size())
            throw std::domain_error("multi_inclusion: index out of range");
        if (i && indices[i] <= indices[i - 1])
            throw std::domain_error("multi_inclusion: indices not strictly increasing");
    }
    const std::size_t n = objects.size();
    if (n == 1) return cat.identity(objects[0]);
    std::vector<ObjOf<C>> head(objects.begin(), objects.end() - 1);
    const auto& last = objects.back();
    if (indices.back() == n - 1) {
        if (indices.size() == 1) return inclusion2(cat, tensor_all(cat, head), last);
        std::vector<std::size_t> rest(indices.begin(), indices.end() - 1);
        return cat.tensor_mor(multi_inclusion(cat, rest, head), cat.identity(last));
    }
    return cat.compose(inclusion1(cat, tensor_all(cat, head), last),
                       multi_inclusion(cat, indices, head));
}

// h o iota^{i;n} == f_i for every i, and h is a valid morphism.
// Throws std::invalid_argument on shape mismatches.
template <InitialUnitCategory C>
bool verify_independence(const C& cat, const std::vector<MorOf<C>>& fs, const MorOf<C>& h) {
    if (fs.empty()) throw std::invalid_argument("verify_independence: empty family");
    std::vector<ObjOf<C>> sources;
    for (const auto& f : fs) {
        if (f.target != h.target)
            throw std::invalid_argument("verify_independence: f target differs from h target");
        sources.push_back(f.source);
    }
    if (h.source != tensor_all(cat, sources))
        throw std::invalid_argument("verify_independence: h source is not the tensor of the sources");
    if (!cat.is_valid(h)) return false;
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (cat.compose(h, multi_inclusion(cat, {i}, sources)) != fs[i]) return false;
    return true;
}

// The instance's forced candidate, kept only if it passes verify_independence.
template <InitialUnitCategory C>
std::optional<MorOf<C>> find_independence_morphism(const C& cat, const std::vector<MorOf<C>>& fs) {
    if (fs.empty()) throw std::invalid_argument("find_independence_morphism: empty family");
    for (const auto& f : fs)
        if (f.target != fs[0].target)
            throw std::invalid_argument("find_independence_morphism: targets differ");
    if (fs.size() == 1) return fs[0];
    auto h = cat.independence_candidate(fs);
    if (!h || !verify_independence(cat, fs, *h)) return std::nullopt;
    return h;
}

// Vertices are objects, edges morphisms. Inverse edges are admitted only for
// isomorphisms whose inverse has been verified.
template <TensorCategory C>
class Diagram {
public:
    explicit Diagram(const C& cat) : cat_(&cat) {}

    std::size_t add_vertex(const ObjOf<C>& o) {
        objs_.push_back(o);
        return objs_.size() - 1;
    }

    void add_edge(std::size_t from, std::size_t to, const MorOf<C>& m) {
        if (from >= objs_.size() || to >= objs_.size())
            throw std::domain_error("diagram edge refers to a missing vertex");
        if (m.source != objs_[from] || m.target != objs_[to])
            throw std::domain_error("diagram edge label does not match its endpoints");
        edges_.push_back({from, to, m});
    }

    // Edge from -> to labelled by iso^{-1}, where iso: to -> from.
    void add_inverse_edge(std::size_t from, std::size_t to, const MorOf<C>& iso,
                          const MorOf<C>& inverse) {
        if (cat_->compose(iso, inverse) != cat_->identity(iso.target) ||
            cat_->compose(inverse, iso) != cat_->identity(iso.source))
            throw std::domain_error("inverse edge on a morphism that is not a verified isomorphism");
        add_edge(from, to, inverse);
    }

    const C& category() const { return *cat_; }
    std::size_t vertex_count() const { return objs_.size(); }

    struct Edge {
        std::size_t from, to;
        MorOf<C> mor;
    };
    const std::vector<Edge>& edges() const { return edges_; }

private:
    const C* cat_;
    std::vector<ObjOf<C>> objs_;
    std::vector<Edge> edges_;
};

// True iff all directed paths with the same endpoints have equal composites.
template <TensorCategory C>
bool check_diagram(const Diagram<C>& d) {
    const auto& cat = d.category();
    const std::size_t n = d.vertex_count();
    // composites[v][w]: composites of all paths v -> w (length >= 1)
    std::vector<std::map<std::size_t, std::vector<MorOf<C>>>> comp(n);
    std::vector<int> state(n, 0);
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        if (state[v] == 2) return;
        if (state[v] == 1) throw std::domain_error("diagram has a directed cycle");
        state[v] = 1;
        for (const auto& e : d.edges()) {
            if (e.from != v) continue;
            visit(e.to);
            comp[v][e.to].push_back(e.mor);
            for (const auto& [w, mors] : comp[e.to])
                for (const auto& m : mors) comp[v][w].push_back(cat.compose(m, e.mor));
        }
        state[v] = 2;
    };
    for (std::size_t v = 0; v < n; ++v) visit(v);
    for (const auto& row : comp)
        for (const auto& [w, mors] : row)
            for (std::size_t i = 1; i < mors.size(); ++i)
                if (mors[i] != mors[0]) return false;
    return true;
}

namespace detail {

inline Rng case_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return Rng(seq);
}

// Random bracketing of leaves [lo, hi) with occasional unit factors.
inline Formal random_bracketing(Rng& rng, int lo, int hi) {
    Formal f;
    if (hi - lo == 1) {
        f = Formal::leaf(lo);
    } else {
        int k = rand_int(rng, lo + 1, hi - 1);
        f = Formal::tensor(random_bracketing(rng, lo, k), random_bracketing(rng, k, hi));
    }
    switch (rand_below(rng, 6)) {
    case 0: return Formal::tensor(f, Formal::unit());
    case 1: return Formal::tensor(Formal::unit(), f);
    default: return f;
    }
}

inline std::vector<std::size_t> random_subset(Rng& rng, const std::vector<std::size_t>& from) {
    std::vector<std::size_t> out;
    while (out.empty())
        for (auto x : from)
            if (rand_bool(rng)) out.push_back(x);
    return out;
}

}  // namespace detail

// Pentagon, triangle, unit compatibility of the inclusions, their naturality,
// the associator/inclusion diagrams, initiality, functoriality and a catalogue
// of coherence identities, on n_cases random object tuples.
template <InitialUnitCategory C>
Report coherence_suite(const C& cat, std::size_t n_cases, std::uint64_t seed) {
    Report rep(std::string("coherence/") + cat.name());
    rep.cases = n_cases;
    for (std::size_t k = 0; k < n_cases; ++k) {
        Rng rng = detail::case_rng(seed, k);
        const auto a = cat.random_object(rng), b = cat.random_object(rng);
        const auto c = cat.random_object(rng), d = cat.random_object(rng);
        const auto e = cat.unit();
        auto id = [&](const ObjOf<C>& x) { return cat.identity(x); };
        auto ten = [&](const MorOf<C>& f, const MorOf<C>& g) { return cat.tensor_mor(f, g); };
        auto o = [&](const MorOf<C>& g, const MorOf<C>& f) { return cat.compose(g, f); };
        auto show = [&](const ObjOf<C>& x) { return cat.describe(x); };
        const std::string abc = show(a) + ", " + show(b) + ", " + show(c);

        // pentagon
        {
            auto lhs = o(cat.assoc(a, b, cat.tensor_obj(c, d)), cat.assoc(cat.tensor_obj(a, b), c, d));
            auto rhs = o(ten(id(a), cat.assoc(b, c, d)),
                         o(cat.assoc(a, cat.tensor_obj(b, c), d), ten(cat.assoc(a, b, c), id(d))));
            rep.expect(lhs == rhs, "pentagon", k, abc + ", " + show(d));
        }
        rep.expect(o(ten(id(a), cat.lunit(b)), cat.assoc(a, e, b)) == ten(cat.runit(a), id(b)),
                   "triangle", k, show(a) + ", " + show(b));
        rep.expect(o(cat.assoc(a, b, c), cat.assoc_inv(a, b, c)) == id(cat.tensor_obj(a, cat.tensor_obj(b, c))) &&
                       o(cat.assoc_inv(a, b, c), cat.assoc(a, b, c)) == id(cat.tensor_obj(cat.tensor_obj(a, b), c)),
                   "assoc-inverse", k, abc);
        rep.expect(o(cat.lunit(a), cat.lunit_inv(a)) == id(a) &&
                       o(cat.lunit_inv(a), cat.lunit(a)) == id(cat.tensor_obj(e, a)) &&
                       o(cat.runit(a), cat.runit_inv(a)) == id(a) &&
                       o(cat.runit_inv(a), cat.runit(a)) == id(cat.tensor_obj(a, e)),
                   "unit-inverse", k, show(a));
        rep.expect(cat.lunit(e) == cat.runit(e), "l_E=r_E", k);

        // unit compatibility of the inclusions
        rep.expect(o(cat.lunit(a), inclusion2(cat, e, a)) == id(a) &&
                       o(cat.runit(a), inclusion1(cat, a, e)) == id(a),
                   "unit-compatible-inclusions", k, show(a));

        // initiality: l_A o iota^1_{E,A} reconstructs 1_A
        rep.expect(o(cat.lunit(a), inclusion1(cat, e, a)) == cat.initial(a), "initial-reconstruction", k,
                   show(a));

        // random morphisms f1: a1 -> a, f2: b1 -> b, f3: c1 -> c, g1: a2 -> a1, g2: b2 -> b1
        const auto f1 = cat.random_morphism_into(a, rng);
        const auto f2 = cat.random_morphism_into(b, rng);
        const auto f3 = cat.random_morphism_into(c, rng);
        const auto g1 = cat.random_morphism_into(f1.source, rng);
        const auto g2 = cat.random_morphism_into(f2.source, rng);
        rep.expect(cat.is_valid(f1) && cat.is_valid(f2) && cat.is_valid(f3) && cat.is_valid(g1) &&
                       cat.is_valid(g2),
                   "random-morphisms-valid", k);
        rep.expect(cat.is_valid(cat.assoc(a, b, c)) && cat.is_valid(cat.lunit(a)) &&
                       cat.is_valid(cat.runit_inv(a)) && cat.is_valid(cat.initial(a)),
                   "structural-valid", k, show(a));
        rep.expect(o(f1, cat.initial(f1.source)) == cat.initial(a), "initial-natural", k, cat.describe(f1));

        // naturality of the inclusions
        const auto a1 = f1.source, b1 = f2.source, c1 = f3.source;
        rep.expect(o(ten(f1, f2), inclusion1(cat, a1, b1)) == o(inclusion1(cat, a, b), f1),
                   "inclusion1-natural", k, cat.describe(f1) + " ; " + cat.describe(f2));
        rep.expect(o(ten(f1, f2), inclusion2(cat, a1, b1)) == o(inclusion2(cat, a, b), f2),
                   "inclusion2-natural", k, cat.describe(f1) + " ; " + cat.describe(f2));

        // associator against the inclusions
        rep.expect(o(cat.assoc(a, b, c), ten(inclusion1(cat, a, b), id(c))) ==
                       ten(id(a), inclusion2(cat, b, c)),
                   "assoc-inclusion-outer", k, abc);
        rep.expect(o(cat.assoc(a, b, c), o(inclusion1(cat, cat.tensor_obj(a, b), c), inclusion2(cat, a, b))) ==
                       o(inclusion2(cat, a, cat.tensor_obj(b, c)), inclusion1(cat, b, c)),
                   "assoc-inclusion-middle", k, abc);
        rep.expect(o(cat.assoc(a, b, c), inclusion2(cat, cat.tensor_obj(a, b), c)) ==
                       o(inclusion2(cat, a, cat.tensor_obj(b, c)), inclusion2(cat, b, c)),
                   "assoc-inclusion-last", k, abc);

        // naturality of the structural isomorphisms, functoriality
        rep.expect(o(cat.assoc(a, b, c), ten(ten(f1, f2), f3)) == o(ten(f1, ten(f2, f3)), cat.assoc(a1, b1, c1)),
                   "assoc-natural", k, abc);
        rep.expect(o(cat.lunit(a), ten(id(e), f1)) == o(f1, cat.lunit(a1)) &&
                       o(cat.runit(a), ten(f1, id(e))) == o(f1, cat.runit(a1)),
                   "unit-natural", k, cat.describe(f1));
        rep.expect(ten(o(f1, g1), o(f2, g2)) == o(ten(f1, f2), ten(g1, g2)) &&
                       ten(id(a), id(b)) == id(cat.tensor_obj(a, b)),
                   "tensor-functorial", k, cat.describe(f1) + " ; " + cat.describe(f2));

        // coherence catalogue: routes through an intermediate bracketing agree,
        // and the n-ary inclusions compose transitively
        {
            const int n = rand_int(rng, 2, 4);
            std::vector<ObjOf<C>> objs{a, b, c, d};
            objs.resize(static_cast<std::size_t>(n));
            auto p = detail::random_bracketing(rng, 0, n);
            auto q = detail::random_bracketing(rng, 0, n);
            auto r = detail::random_bracketing(rng, 0, n);
            auto direct = reassociate(cat, p, r, objs);
            auto routed = o(reassociate(cat, q, r, objs), reassociate(cat, p, q, objs));
            rep.expect(direct == routed, "coherence-reassociation", k, std::to_string(n) + " factors");

            std::vector<std::size_t> all;
            for (int i = 0; i < n; ++i) all.push_back(static_cast<std::size_t>(i));
            auto outer = detail::random_subset(rng, all);
            auto inner = detail::random_subset(rng, outer);
            std::vector<ObjOf<C>> outer_objs;
            for (auto i : outer) outer_objs.push_back(objs[i]);
            std::vector<std::size_t> inner_rel;
            for (auto i : inner)
                inner_rel.push_back(static_cast<std::size_t>(
                    std::find(outer.begin(), outer.end(), i) - outer.begin()));
            auto via = o(multi_inclusion(cat, outer, objs), multi_inclusion(cat, inner_rel, outer_objs));
            rep.expect(via == multi_inclusion(cat, inner, objs), "coherence-inclusion-transitive", k,
                       std::to_string(n) + " factors");
        }
    }
    return rep;
}

// Subsequences and precompositions of an independent family stay independent,
// for families of size 1..4 obtained as h o iota^{i;n}.
template <InitialUnitCategory C>
Report independence_suite(const C& cat, std::size_t n_cases, std::uint64_t seed) {
    Report rep(std::string("independence/") + cat.name());
    rep.cases = n_cases;
    for (std::size_t k = 0; k < n_cases; ++k) {
        Rng rng = detail::case_rng(seed ^ 0x5bd1e995u, k);
        const std::size_t n = 1 + k % 4;
        std::vector<ObjOf<C>> bs;
        for (std::size_t i = 0; i < n; ++i) bs.push_back(cat.random_object(rng));
        const auto h = cat.random_morphism_from(tensor_all(cat, bs), rng);
        std::vector<MorOf<C>> fs;
        for (std::size_t i = 0; i < n; ++i) fs.push_back(cat.compose(h, multi_inclusion(cat, {i}, bs)));
        if (!rep.expect(verify_independence(cat, fs, h), "family-independent", k, cat.describe(h))) continue;
        auto found = find_independence_morphism(cat, fs);
        rep.expect(found.has_value() && verify_independence(cat, fs, *found), "candidate-found", k,
                   cat.describe(h));

        // every nonempty subsequence, with h o iota^{I;n}
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::size_t> idx;
            std::vector<MorOf<C>> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) {
                    idx.push_back(i);
                    sub.push_back(fs[i]);
                }
            auto hs = cat.compose(h, multi_inclusion(cat, idx, bs));
            rep.expect(verify_independence(cat, sub, hs), "subsequence", k, "mask " + std::to_string(mask));
        }

        // precomposition g_i = f_i o j_i with h o (j_1 * ... * j_n)
        std::vector<MorOf<C>> js, gs;
        for (std::size_t i = 0; i < n; ++i) {
            js.push_back(cat.random_morphism_into(bs[i], rng));
            gs.push_back(cat.compose(fs[i], js.back()));
        }
        rep.expect(verify_independence(cat, gs, cat.compose(h, tensor_all_mor(cat, js))), "precomposition",
                   k, cat.describe(h));
    }
    return rep;
}

}  // namespace catlevy
