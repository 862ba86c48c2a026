#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catlevy/catcore.hpp"
#include "catlevy/report.hpp"

namespace catlevy {

// Finite directed poset with objects and connecting morphisms f_beta^alpha,
// produced on demand by `connect(alpha, beta)` for alpha <= beta.
template <TensorCategory C>
struct InductiveSystem {
    const C* cat = nullptr;
    std::vector<std::string> labels;
    std::vector<ObjOf<C>> objects;
    std::function<bool(std::size_t, std::size_t)> leq;
    std::function<MorOf<C>(std::size_t, std::size_t)> connect;

    std::size_t size() const { return objects.size(); }
};

// Identity and cocycle conditions over every pair and chain of the poset.
template <TensorCategory C>
Report validate_system(const InductiveSystem<C>& s) {
    Report rep("inductive-system");
    const auto& cat = *s.cat;
    const std::size_t n = s.size();
    rep.cases = n;
    std::vector<std::vector<std::optional<MorOf<C>>>> f(n, std::vector<std::optional<MorOf<C>>>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (s.leq(a, b)) {
                f[a][b] = s.connect(a, b);
                const bool shape = f[a][b]->source == s.objects[a] && f[a][b]->target == s.objects[b];
                rep.expect(shape && cat.is_valid(*f[a][b]), "connecting-morphism", a,
                           s.labels[a] + " -> " + s.labels[b]);
            }
    for (std::size_t a = 0; a < n; ++a)
        rep.expect(f[a][a] && *f[a][a] == cat.identity(s.objects[a]), "identity", a, s.labels[a]);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!f[a][b] || a == b) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (!f[b][c] || b == c) continue;
                rep.expect(f[a][c] && cat.compose(*f[b][c], *f[a][b]) == *f[a][c], "cocycle", a,
                           s.labels[a] + " <= " + s.labels[b] + " <= " + s.labels[c]);
            }
        }
    return rep;
}

template <TensorCategory C>
struct AttainedLimit {
    const InductiveSystem<C>* system = nullptr;
    std::size_t max_index = 0;
    ObjOf<C> object;

    // f^alpha = f_max^alpha
    MorOf<C> injection(std::size_t alpha) const { return system->connect(alpha, max_index); }
};

template <TensorCategory C>
std::optional<std::size_t> maximum(const InductiveSystem<C>& s, const std::vector<std::size_t>& subset) {
    for (auto m : subset) {
        bool top = true;
        for (auto a : subset) top = top && s.leq(a, m);
        if (top) return m;
    }
    return std::nullopt;
}

// Throws std::domain_error when the poset has no maximum.
template <TensorCategory C>
AttainedLimit<C> attained_limit(const InductiveSystem<C>& s) {
    std::vector<std::size_t> all(s.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto m = maximum(s, all);
    if (!m) throw std::domain_error("inductive system has no maximum element");
    return {&s, *m, s.objects[*m]};
}

// g = g^max after checking g^alpha = g^beta o f_beta^alpha for all alpha <= beta.
// Throws std::domain_error naming the first incoherent pair.
template <TensorCategory C>
MorOf<C> mediating_morphism(const AttainedLimit<C>& lim, const std::vector<MorOf<C>>& gs) {
    const auto& s = *lim.system;
    const auto& cat = *s.cat;
    if (gs.size() != s.size()) throw std::invalid_argument("mediating_morphism: one morphism per index needed");
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b)
            if (a != b && s.leq(a, b) && cat.compose(gs[b], s.connect(a, b)) != gs[a])
                throw std::domain_error("incoherent family at (" + s.labels[a] + ", " + s.labels[b] + ")");
    return gs[lim.max_index];
}

template <TensorCategory C>
struct NestedLimit {
    Report report{"nested-limit"};
    InductiveSystem<C> outer;
    std::vector<std::size_t> sub_max;  // maximum of each J_k
    std::optional<MorOf<C>> to_outer, from_outer;
};

// Limits of the J_k, the induced system between them, and the comparison of its
// limit with the limit of the whole system by mediating morphisms both ways.
template <TensorCategory C>
NestedLimit<C> nested_limit(const InductiveSystem<C>& s, const std::vector<std::vector<std::size_t>>& parts) {
    NestedLimit<C> out;
    auto& rep = out.report;
    const auto& cat = *s.cat;
    rep.cases = parts.size();
    if (parts.empty()) throw std::invalid_argument("nested_limit: no sub-posets");
    for (std::size_t k = 0; k < parts.size(); ++k) {
        auto m = maximum(s, parts[k]);
        if (!m) throw std::domain_error("nested_limit: sub-poset " + std::to_string(k) + " has no maximum");
        out.sub_max.push_back(*m);
        if (k) {
            for (auto a : parts[k - 1])
                if (std::find(parts[k].begin(), parts[k].end(), a) == parts[k].end())
                    throw std::domain_error("nested_limit: sub-posets are not nested at " + s.labels[a]);
        }
    }
    // cofinality of the union
    std::vector<std::size_t> witness(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
        bool found = false;
        for (auto b : parts.back())
            if (s.leq(a, b)) {
                witness[a] = b;
                found = true;
                break;
            }
        if (!found) throw std::domain_error("nested_limit: union is not cofinal, " + s.labels[a] + " is not below it");
    }

    auto& o = out.outer;
    o.cat = s.cat;
    const auto sub_max = out.sub_max;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        o.labels.push_back("J" + std::to_string(k) + "=" + s.labels[sub_max[k]]);
        o.objects.push_back(s.objects[sub_max[k]]);
    }
    o.leq = [](std::size_t a, std::size_t b) { return a <= b; };
    const InductiveSystem<C>* sp = &s;
    o.connect = [sp, sub_max](std::size_t a, std::size_t b) { return sp->connect(sub_max[a], sub_max[b]); };
    rep.merge(validate_system(o));

    const auto inner = attained_limit(s);
    const auto outer = attained_limit(o);
    // outer -> inner: family f^{m_k}
    std::vector<MorOf<C>> g_out;
    for (std::size_t k = 0; k < o.size(); ++k) g_out.push_back(inner.injection(sub_max[k]));
    // inner -> outer: alpha <= beta in J_K, through the J_K limit
    std::vector<MorOf<C>> g_in;
    const std::size_t last = parts.size() - 1;
    for (std::size_t a = 0; a < s.size(); ++a)
        g_in.push_back(cat.compose(s.connect(witness[a], sub_max[last]), s.connect(a, witness[a])));
    try {
        out.to_outer = mediating_morphism(inner, g_in);
        out.from_outer = mediating_morphism(outer, g_out);
        rep.expect(cat.compose(*out.from_outer, *out.to_outer) == cat.identity(inner.object) &&
                       cat.compose(*out.to_outer, *out.from_outer) == cat.identity(outer.object),
                   "mutually-inverse", 0);
    } catch (const std::domain_error& e) {
        rep.fail("mediating", 0, e.what());
    }
    return out;
}

}  // namespace catlevy
