#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catlevy/catcore.hpp"
#include "catlevy/comonoidal.hpp"
#include "catlevy/limits.hpp"
#include "catlevy/monoid.hpp"

namespace catlevy {

template <TensorCategory C>
ObjOf<C> factorization_object(const ComonoidalSystem<C>& S, const Factorization& sigma) {
    std::vector<ObjOf<C>> objs;
    for (const auto& s : sigma) objs.push_back(S.object(s));
    return tensor_all(*S.cat, objs);
}

// Delta_sigma: A_t -> A_sigma, t the product of sigma.
//   () -> delta, (t) -> id, (s_1..s_{n+1}) -> (Delta_{(s_1..s_n)} * id) o Delta_{s_1...s_n, s_{n+1}}
template <TensorCategory C>
MorOf<C> delta_sigma(const ComonoidalSystem<C>& S, const Factorization& sigma) {
    const auto& cat = *S.cat;
    const auto& m = S.monoid;
    if (sigma.empty()) return S.counit;
    if (sigma.size() == 1) return cat.identity(S.object(sigma[0]));
    Factorization head(sigma.begin(), sigma.end() - 1);
    const auto& last = sigma.back();
    return cat.compose(cat.tensor_mor(delta_sigma(S, head), cat.identity(S.object(last))),
                       S.delta(m.product(head), last));
}

// Delta^tau_sigma = Delta_{tau_1} * ... * Delta_{tau_n}, reassociated onto the
// left-associated A_sigma. Throws std::invalid_argument if sigma does not refine tau.
template <InitialUnitCategory C>
MorOf<C> delta_sigma_tau(const ComonoidalSystem<C>& S, const Factorization& tau, const Factorization& sigma) {
    const auto& cat = *S.cat;
    auto blocks = refines(sigma, tau, S.monoid);
    if (!blocks) throw std::invalid_argument("delta_sigma_tau: " + S.monoid.format(sigma) + " does not refine " +
                                             S.monoid.format(tau));
    std::vector<MorOf<C>> parts;
    std::vector<Formal> shape;
    int next = 0;
    for (const auto& b : *blocks) {
        parts.push_back(delta_sigma(S, b));
        shape.push_back(left_assoc_range(next, static_cast<int>(b.size())));
        next += static_cast<int>(b.size());
    }
    auto raw = tensor_all_mor(cat, parts);
    Formal from = shape.empty() ? Formal::unit() : shape[0];
    for (std::size_t i = 1; i < shape.size(); ++i) from = Formal::tensor(from, shape[i]);
    std::vector<ObjOf<C>> leaves;
    for (const auto& s : sigma) leaves.push_back(S.object(s));
    return cat.compose(reassociate(cat, from, left_assoc_range(0, next), leaves), raw);
}

// The inductive system (A_tau)_{tau in F_t} with the Delta^tau_sigma.
template <InitialUnitCategory C>
struct FactorizationSystem {
    std::vector<Factorization> index;
    InductiveSystem<C> system;
};

template <InitialUnitCategory C>
FactorizationSystem<C> factorization_system(const ComonoidalSystem<C>& S, const MonoidValue& t) {
    FactorizationSystem<C> fs;
    const auto& m = S.monoid;
    fs.index = enumerate_factorizations(t, m, static_cast<std::size_t>(std::max(1, m.size(t))));
    auto& sys = fs.system;
    sys.cat = S.cat;
    for (const auto& f : fs.index) {
        sys.labels.push_back(m.format(f));
        sys.objects.push_back(factorization_object(S, f));
    }
    const auto idx = fs.index;
    const Monoid mm = m;
    sys.leq = [idx, mm](std::size_t a, std::size_t b) { return refines(idx[b], idx[a], mm).has_value(); };
    const ComonoidalSystem<C>* sp = &S;
    sys.connect = [idx, sp](std::size_t a, std::size_t b) { return delta_sigma_tau(*sp, idx[a], idx[b]); };
    return fs;
}

// 𝒜_t is A at the maximum of F_t; D^tau = Delta^tau_max; D_t = D^{(t)}, D_e = delta.
template <InitialUnitCategory C>
struct FullComonoidalSystem {
    const ComonoidalSystem<C>* base = nullptr;
    std::map<MonoidValue, Factorization> finest;
    std::map<MonoidValue, ObjOf<C>> objects;
    std::map<std::pair<MonoidValue, MonoidValue>, MorOf<C>> delta_tilde, delta_tilde_inv;
    std::map<MonoidValue, MorOf<C>> embedding;  // D_t
    Report construction{"full-system"};

    const ObjOf<C>& object(const MonoidValue& t) const { return objects.at(t); }
    MorOf<C> injection(const Factorization& tau) const {
        return delta_sigma_tau(*base, tau, finest.at(base->monoid.product(tau)));
    }
    const MorOf<C>& dt(const MonoidValue& s, const MonoidValue& t) const { return delta_tilde.at({s, t}); }
    const MorOf<C>& dt_inv(const MonoidValue& s, const MonoidValue& t) const { return delta_tilde_inv.at({s, t}); }
};

// Builds 𝒜_t, D_t and the invertible coproducts. The coproduct on 𝒜 is the
// reassociation of the finest factorization of st into those of s and t,
// which is the morphism the factorization square forces since D at the
// maximum is the identity; both inverse composites are checked.
template <InitialUnitCategory C>
FullComonoidalSystem<C> generate_full_system(const ComonoidalSystem<C>& S) {
    FullComonoidalSystem<C> F;
    F.base = &S;
    const auto& cat = *S.cat;
    const auto& m = S.monoid;
    for (const auto& t : S.window) {
        auto fs = factorization_system(S, t);
        auto lim = attained_limit(fs.system);
        F.finest.emplace(t, fs.index[lim.max_index]);
        F.objects.emplace(t, lim.object);
        F.embedding.emplace(t, m.is_unit(t) ? S.counit : delta_sigma(S, fs.index[lim.max_index]));
    }
    std::size_t idx = 0;
    for (const auto& [s, t] : detail::window_pairs(m, S.window)) {
        const auto st = m.op(s, t);
        const auto &fs_ = F.finest.at(s), &ft = F.finest.at(t), &fst = F.finest.at(st);
        Factorization joined = fs_;
        joined.insert(joined.end(), ft.begin(), ft.end());
        if (joined != fst)
            throw std::domain_error("finest factorization of " + m.format(st) + " is not the concatenation for (" +
                                    m.format(s) + "," + m.format(t) + ")");
        std::vector<ObjOf<C>> leaves;
        for (const auto& x : fst) leaves.push_back(S.object(x));
        const int ns = static_cast<int>(fs_.size()), nt = static_cast<int>(ft.size());
        const Formal flat = left_assoc_range(0, ns + nt);
        const Formal split = Formal::tensor(left_assoc_range(0, ns), left_assoc_range(ns, nt));
        auto fwd = reassociate(cat, flat, split, leaves);
        auto bwd = reassociate(cat, split, flat, leaves);
        F.construction.expect(cat.compose(bwd, fwd) == cat.identity(fwd.source) &&
                                  cat.compose(fwd, bwd) == cat.identity(fwd.target),
                              "delta-tilde-invertible", idx++, detail::pair_text(m, s, t));
        F.delta_tilde.emplace(std::make_pair(s, t), fwd);
        F.delta_tilde_inv.emplace(std::make_pair(s, t), bwd);
    }
    return F;
}

// The generated system as a comonoidal system (its counit is id_E).
template <InitialUnitCategory C>
ComonoidalSystem<C> as_system(const FullComonoidalSystem<C>& F) {
    ComonoidalSystem<C> out;
    out.cat = F.base->cat;
    out.monoid = F.base->monoid;
    out.window = F.base->window;
    out.objects = F.objects;
    out.coproducts = F.delta_tilde;
    out.counit = out.cat->identity(F.objects.at(out.monoid.unit()));
    return out;
}

// Factorization square, intertwining and coproduct laws of the generated system.
template <InitialUnitCategory C>
Report check_full_system(const FullComonoidalSystem<C>& F) {
    Report rep("full-system");
    rep.merge(F.construction);
    const auto& S = *F.base;
    const auto& cat = *S.cat;
    const auto& m = S.monoid;
    rep.merge(check_system_laws(as_system(F)));
    rep.expect(F.object(m.unit()) == cat.unit(), "unit-limit-is-E", 0);
    std::size_t idx = 0;
    for (const auto& [s, t] : detail::window_pairs(m, S.window)) {
        const auto st = m.op(s, t);
        // D_s * D_t o Delta_{s,t} = Delta~_{s,t} o D_{st}
        auto lhs = cat.compose(F.dt(s, t), F.embedding.at(st));
        auto rhs = cat.compose(cat.tensor_mor(F.embedding.at(s), F.embedding.at(t)), S.delta(s, t));
        rep.expect(lhs == rhs, "intertwining", idx, detail::pair_text(m, s, t));
        // Delta~ o D^{sigma ++ tau} = (D^sigma * D^tau) o a_{sigma,tau} on every pair
        const auto Fs = enumerate_factorizations(s, m, static_cast<std::size_t>(std::max(1, m.size(s))));
        const auto Ft = enumerate_factorizations(t, m, static_cast<std::size_t>(std::max(1, m.size(t))));
        for (const auto& sig : Fs)
            for (const auto& tau : Ft) {
                Factorization joined = sig;
                joined.insert(joined.end(), tau.begin(), tau.end());
                std::vector<ObjOf<C>> leaves;
                for (const auto& x : joined) leaves.push_back(S.object(x));
                const int ns = static_cast<int>(sig.size()), nt = static_cast<int>(tau.size());
                auto a = reassociate(cat, left_assoc_range(0, ns + nt),
                                     Formal::tensor(left_assoc_range(0, ns), left_assoc_range(ns, nt)), leaves);
                auto l = cat.compose(F.dt(s, t), F.injection(joined));
                auto r = cat.compose(cat.tensor_mor(F.injection(sig), F.injection(tau)), a);
                rep.expect(l == r, "factorization-square", idx, m.format(sig) + " | " + m.format(tau));
            }
        ++idx;
    }
    return rep;
}

// i_t^s = Delta~_{s,p}^{-1} o iota^1, p the complement of s in t.
template <InitialUnitCategory C>
MorOf<C> increment_inclusion(const FullComonoidalSystem<C>& F, const MonoidValue& s, const MonoidValue& t) {
    const auto& cat = *F.base->cat;
    auto p = divides(s, t, F.base->monoid);
    if (!p) throw std::domain_error("increment_inclusion: " + F.base->monoid.format(s) + " does not divide " +
                                    F.base->monoid.format(t));
    return cat.compose(F.dt_inv(s, *p), inclusion1(cat, F.object(s), F.object(*p)));
}

template <InitialUnitCategory C>
struct LevyProcess {
    FullComonoidalSystem<C> full;
    MonoidValue horizon;
    ObjOf<C> ambient;
    std::vector<MonoidValue> times;  // window elements below the horizon
    std::map<MonoidValue, MorOf<C>> time_inclusion;
    std::map<std::pair<MonoidValue, MonoidValue>, MorOf<C>> increments;
    std::map<std::tuple<MonoidValue, MonoidValue, MonoidValue>, MorOf<C>> triples;

    const ComonoidalSystem<C>& system() const { return *full.base; }
    const MorOf<C>& j(const MonoidValue& s, const MonoidValue& t) const { return increments.at({s, t}); }
};

template <InitialUnitCategory C>
MorOf<C> levy_independence(const LevyProcess<C>& P, const std::vector<std::pair<MonoidValue, MonoidValue>>& iv);

// 𝒜 = 𝒜_T, i^t = i_T^t, j_{s,t} = i^t o Delta~^{-1} o iota^2 o D_{t-s},
// j_{r,s,t} = i^t o Delta~_{r,t-r}^{-1} o iota^2 o Delta~_{s-r,t-s}^{-1} o (D_{s-r} * D_{t-s}).
template <InitialUnitCategory C>
LevyProcess<C> build_levy(const ComonoidalSystem<C>& S, const MonoidValue& horizon) {
    const auto& m = S.monoid;
    if (!m.totally_ordered()) throw std::domain_error("build_levy needs a totally ordered time monoid");
    if (!S.in_window(horizon)) throw std::out_of_range("horizon " + m.format(horizon) + " outside the window");
    LevyProcess<C> P{generate_full_system(S), horizon, {}, {}, {}, {}, {}};
    const auto& cat = *S.cat;
    const auto& F = P.full;
    P.ambient = F.object(horizon);
    for (const auto& t : S.window)
        if (m.less_equal(t, horizon)) P.times.push_back(t);
    for (const auto& t : P.times) P.time_inclusion.emplace(t, increment_inclusion(F, t, horizon));
    for (const auto& s : P.times)
        for (const auto& t : P.times) {
            if (!m.less_equal(s, t)) continue;
            const auto p = *divides(s, t, m);
            auto j = cat.compose(P.time_inclusion.at(t),
                                 cat.compose(F.dt_inv(s, p),
                                             cat.compose(inclusion2(cat, F.object(s), F.object(p)), F.embedding.at(p))));
            P.increments.emplace(std::make_pair(s, t), j);
        }
    for (const auto& r : P.times)
        for (const auto& s : P.times)
            for (const auto& t : P.times) {
                if (!m.less_equal(r, s) || !m.less_equal(s, t)) continue;
                const auto a = *divides(r, s, m), b = *divides(s, t, m), ab = *divides(r, t, m);
                auto inner = cat.compose(F.dt_inv(a, b), cat.tensor_mor(F.embedding.at(a), F.embedding.at(b)));
                auto j = cat.compose(P.time_inclusion.at(t),
                                     cat.compose(F.dt_inv(r, ab),
                                                 cat.compose(inclusion2(cat, F.object(r), F.object(ab)), inner)));
                P.triples.emplace(std::make_tuple(r, s, t), j);
            }
    return P;
}

// Independence morphism for non-overlapping intervals s_1<=t_1<=...<=s_n<=t_n<=T:
// cut [0,T] into gaps and selected pieces, include the selected pieces with
// iota, glue with the inverse coproducts and precompose the D's.
template <InitialUnitCategory C>
MorOf<C> levy_independence(const LevyProcess<C>& P, const std::vector<std::pair<MonoidValue, MonoidValue>>& iv) {
    const auto& S = P.system();
    const auto& cat = *S.cat;
    const auto& m = S.monoid;
    const auto& F = P.full;
    if (iv.empty()) throw std::invalid_argument("levy_independence: no intervals");
    std::vector<MonoidValue> lengths;
    std::vector<std::size_t> selected;
    MonoidValue cursor = m.unit();
    auto piece = [&](const MonoidValue& from, const MonoidValue& to) {
        auto d = divides(from, to, m);
        if (!d) throw std::invalid_argument("levy_independence: intervals overlap or are out of order");
        lengths.push_back(*d);
    };
    for (const auto& [s, t] : iv) {
        piece(cursor, s);
        piece(s, t);
        selected.push_back(lengths.size() - 1);
        cursor = t;
    }
    piece(cursor, P.horizon);
    std::vector<ObjOf<C>> objs;
    for (const auto& l : lengths) objs.push_back(F.object(l));
    // glue: 𝒜_{l_0} * ... * 𝒜_{l_k} -> 𝒜_T
    MorOf<C> glue = cat.identity(objs[0]);
    MonoidValue acc = lengths[0];
    for (std::size_t k = 1; k < lengths.size(); ++k) {
        glue = cat.compose(F.dt_inv(acc, lengths[k]), cat.tensor_mor(glue, cat.identity(objs[k])));
        acc = m.op(acc, lengths[k]);
    }
    std::vector<MorOf<C>> ds;
    for (auto k : selected) ds.push_back(F.embedding.at(lengths[k]));
    return cat.compose(glue, cat.compose(multi_inclusion(cat, selected, objs), tensor_all_mor(cat, ds)));
}

// Every non-decreasing chain s_1<=t_1<=...<=s_n<=t_n among the times.
inline void interval_tuples(const std::vector<MonoidValue>& times, std::size_t n,
                            std::vector<std::vector<std::pair<MonoidValue, MonoidValue>>>& out) {
    std::vector<std::size_t> pts;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (pts.size() == 2 * n) {
            std::vector<std::pair<MonoidValue, MonoidValue>> iv;
            for (std::size_t i = 0; i < n; ++i) iv.push_back({times[pts[2 * i]], times[pts[2 * i + 1]]});
            out.push_back(std::move(iv));
            return;
        }
        for (std::size_t k = start; k < times.size(); ++k) {
            pts.push_back(k);
            self(self, k);
            pts.pop_back();
        }
    };
    rec(rec, 0);
}

// (1) j_{t,t} = 1 o delta; (2) every increment family over non-overlapping
// intervals with n <= max_n is independent through the stored construction;
// (3) j_{r,s,t} o Delta_{s-r,t-s} = j_{r,t}, with j_{r,s,t} an independence
// morphism for j_{r,s}, j_{s,t}. Times must be sorted ascending.
template <InitialUnitCategory C>
Report verify_levy(const LevyProcess<C>& P, std::size_t max_n) {
    Report rep("levy");
    const auto& S = P.system();
    const auto& cat = *S.cat;
    const auto& m = S.monoid;
    std::size_t idx = 0;
    for (const auto& t : P.times)
        rep.expect(P.j(t, t) == cat.compose(cat.initial(P.ambient), S.counit), "unit-increment", idx++,
                   "t=" + m.format(t));
    for (const auto& [st, j] : P.increments)
        rep.expect(j.source == S.object(*divides(st.first, st.second, m)) && j.target == P.ambient && cat.is_valid(j),
                   "increment-valid", idx++, detail::pair_text(m, st.first, st.second));
    idx = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<std::vector<std::pair<MonoidValue, MonoidValue>>> tuples;
        interval_tuples(P.times, n, tuples);
        for (const auto& iv : tuples) {
            std::vector<MorOf<C>> fs;
            std::string text;
            for (const auto& [s, t] : iv) {
                fs.push_back(P.j(s, t));
                text += "[" + m.format(s) + "," + m.format(t) + "]";
            }
            bool ok = false;
            try {
                ok = verify_independence(cat, fs, levy_independence(P, iv));
            } catch (const std::exception& ex) {
                text += std::string(" ") + ex.what();
            }
            rep.expect(ok, "independent-increments", idx++, text);
        }
    }
    idx = 0;
    for (const auto& [rst, j3] : P.triples) {
        const auto& [r, s, t] = rst;
        const auto a = *divides(r, s, m), b = *divides(s, t, m);
        const std::string w = "(r,s,t)=(" + m.format(r) + "," + m.format(s) + "," + m.format(t) + ")";
        rep.expect(cat.compose(j3, S.delta(a, b)) == P.j(r, t), "increment-composition", idx, w);
        bool ok = false;
        try {
            ok = verify_independence(cat, {P.j(r, s), P.j(s, t)}, j3);
        } catch (const std::exception&) {
        }
        rep.expect(ok, "composition-independent", idx++, w);
    }
    rep.cases = P.times.size();
    return rep;
}

// i_t^s o i_s^r = i_t^r for every r <= s <= t in the window, and i_t^t = id.
template <InitialUnitCategory C>
Report check_increment_cocycle(const FullComonoidalSystem<C>& F, const std::vector<MonoidValue>& times) {
    Report rep("increment-cocycle");
    const auto& cat = *F.base->cat;
    const auto& m = F.base->monoid;
    std::size_t idx = 0;
    for (const auto& t : times) rep.expect(increment_inclusion(F, t, t) == cat.identity(F.object(t)), "identity", idx++);
    idx = 0;
    for (const auto& r : times)
        for (const auto& s : times)
            for (const auto& t : times) {
                if (!m.less_equal(r, s) || !m.less_equal(s, t)) continue;
                rep.expect(cat.compose(increment_inclusion(F, s, t), increment_inclusion(F, r, s)) ==
                               increment_inclusion(F, r, t),
                           "cocycle", idx++, "(r,s,t)=(" + m.format(r) + "," + m.format(s) + "," + m.format(t) + ")");
            }
    rep.cases = times.size();
    return rep;
}

// (𝒜_t) with the i_t^s as an inductive system over the times.
template <InitialUnitCategory C>
InductiveSystem<C> time_system(const FullComonoidalSystem<C>& F, const std::vector<MonoidValue>& times) {
    InductiveSystem<C> sys;
    sys.cat = F.base->cat;
    const auto& m = F.base->monoid;
    for (const auto& t : times) {
        sys.labels.push_back(m.format(t));
        sys.objects.push_back(F.object(t));
    }
    const Monoid mm = m;
    sys.leq = [times, mm](std::size_t a, std::size_t b) { return mm.less_equal(times[a], times[b]); };
    const FullComonoidalSystem<C>* fp = &F;
    sys.connect = [fp, times](std::size_t a, std::size_t b) { return increment_inclusion(*fp, times[a], times[b]); };
    return sys;
}

// The system over F = union of the F_t: sigma <= tau when tau = tau_1 ++ ... ++ tau_n ++ tau_{n+1}
// with tau_k in F_{sigma_k}; i^sigma_tau = iota^1 o Delta^sigma_{tau_1...tau_n}, reassociated.
template <InitialUnitCategory C>
struct FactorizationUnion {
    std::vector<Factorization> index;
    std::vector<MonoidValue> level;  // product of each index
    InductiveSystem<C> system;
};

template <InitialUnitCategory C>
FactorizationUnion<C> factorization_union(const ComonoidalSystem<C>& S, const std::vector<MonoidValue>& times) {
    FactorizationUnion<C> U;
    const auto& m = S.monoid;
    for (const auto& t : times)
        for (auto& f : enumerate_factorizations(t, m, static_cast<std::size_t>(std::max(1, m.size(t))))) {
            U.index.push_back(f);
            U.level.push_back(t);
        }
    auto& sys = U.system;
    sys.cat = S.cat;
    for (const auto& f : U.index) {
        sys.labels.push_back(m.format(f));
        sys.objects.push_back(factorization_object(S, f));
    }
    const auto idx = U.index;
    const Monoid mm = m;
    // the prefix of tau refining sigma, if any
    auto prefix = [idx, mm](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
        const auto& sigma = idx[a];
        const auto& tau = idx[b];
        const auto target = mm.product(sigma);
        for (std::size_t k = 0; k <= tau.size(); ++k) {
            Factorization head(tau.begin(), tau.begin() + static_cast<std::ptrdiff_t>(k));
            if (mm.product(head) == target && refines(head, sigma, mm)) return k;
        }
        return std::nullopt;
    };
    sys.leq = [prefix](std::size_t a, std::size_t b) { return prefix(a, b).has_value(); };
    const ComonoidalSystem<C>* sp = &S;
    sys.connect = [idx, sp, prefix](std::size_t a, std::size_t b) {
        const auto& cat = *sp->cat;
        const std::size_t k = *prefix(a, b);
        const auto& tau = idx[b];
        Factorization head(tau.begin(), tau.begin() + static_cast<std::ptrdiff_t>(k));
        Factorization tail(tau.begin() + static_cast<std::ptrdiff_t>(k), tau.end());
        auto refine = delta_sigma_tau(*sp, idx[a], head);
        auto inc = inclusion1(cat, factorization_object(*sp, head), factorization_object(*sp, tail));
        std::vector<ObjOf<C>> leaves;
        for (const auto& x : tau) leaves.push_back(sp->object(x));
        const int nh = static_cast<int>(head.size()), nt = static_cast<int>(tail.size());
        auto a_ = reassociate(cat, Formal::tensor(left_assoc_range(0, nh), left_assoc_range(nh, nt)),
                              left_assoc_range(0, nh + nt), leaves);
        return cat.compose(a_, cat.compose(inc, refine));
    };
    return U;
}

// Nested limits over J_k = F_{t_0} u ... u F_{t_k}, and the comparison of the
// outer system with (𝒜_t, i_t^s): mediating morphisms both ways, checked for
// coherence, must be mutually inverse.
template <InitialUnitCategory C>
Report direct_system_over_F(const ComonoidalSystem<C>& S, const std::vector<MonoidValue>& times) {
    Report rep("direct-limit");
    const auto& cat = *S.cat;
    auto U = factorization_union(S, times);
    rep.merge(validate_system(U.system));
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> acc;
    for (const auto& t : times) {
        for (std::size_t i = 0; i < U.index.size(); ++i)
            if (U.level[i] == t) acc.push_back(i);
        parts.push_back(acc);
    }
    auto nested = nested_limit(U.system, parts);
    rep.merge(nested.report);

    auto F = generate_full_system(S);
    auto tsys = time_system(F, times);
    rep.merge(validate_system(tsys));
    const auto outer_lim = attained_limit(nested.outer);
    const auto time_lim = attained_limit(tsys);
    std::vector<MorOf<C>> to_outer, to_time;
    for (std::size_t k = 0; k < times.size(); ++k) {
        to_outer.push_back(outer_lim.injection(k));
        to_time.push_back(time_lim.injection(k));
    }
    try {
        auto u = mediating_morphism(time_lim, to_outer);
        auto v = mediating_morphism(outer_lim, to_time);
        rep.expect(cat.compose(v, u) == cat.identity(time_lim.object) &&
                       cat.compose(u, v) == cat.identity(outer_lim.object),
                   "limits-isomorphic", 0);
    } catch (const std::domain_error& ex) {
        rep.fail("limits-isomorphic", 0, ex.what());
    }
    rep.cases = times.size();
    return rep;
}

// Joint law of the positions X_t = j_{0,t} for t in J: the pairing map pushed
// forward from the ambient measure, as a table over the product of the ranges.
inline std::vector<Rational> joint_position_law(const Prob& cat, const LevyProcess<Prob>& P,
                                                const std::vector<MonoidValue>& J) {
    const auto e = P.system().monoid.unit();
    std::vector<Prob::Mor> fs;
    for (const auto& t : J) fs.push_back(P.j(e, t));
    if (fs.empty()) return {Rational(1)};
    auto h = *cat.independence_candidate(fs);
    return cat.pushforward(h);
}

// mu_I = mu_J o (p^J_I)^{-1} for every I subset J of the given times (J nonempty).
inline Report classical_consistency(const Prob& cat, const LevyProcess<Prob>& P, const std::vector<MonoidValue>& times,
                                    std::size_t states) {
    Report rep("classical-consistency");
    const std::size_t n = times.size();
    std::size_t idx = 0;
    for (unsigned jmask = 1; jmask < (1u << n); ++jmask) {
        std::vector<MonoidValue> J;
        std::vector<std::size_t> jpos;
        for (std::size_t i = 0; i < n; ++i)
            if (jmask & (1u << i)) {
                J.push_back(times[i]);
                jpos.push_back(i);
            }
        const auto muJ = joint_position_law(cat, P, J);
        for (unsigned imask = 0; imask <= jmask; ++imask) {
            if ((imask & jmask) != imask) continue;
            std::vector<MonoidValue> I;
            std::vector<std::size_t> keep;  // positions within J
            for (std::size_t k = 0; k < jpos.size(); ++k)
                if (imask & (1u << jpos[k])) {
                    I.push_back(times[jpos[k]]);
                    keep.push_back(k);
                }
            const auto muI = joint_position_law(cat, P, I);
            std::vector<Rational> proj(muI.size());
            for (std::size_t x = 0; x < muJ.size(); ++x) {
                // digits of x, most significant first
                std::vector<std::size_t> digits(J.size());
                std::size_t rest = x;
                for (std::size_t k = J.size(); k-- > 0;) {
                    digits[k] = rest % states;
                    rest /= states;
                }
                std::size_t y = 0;
                for (auto k : keep) y = y * states + digits[k];
                proj[y] += muJ[x];
            }
            rep.expect(proj == muI, "projective-consistency", idx++,
                       "|I|=" + std::to_string(I.size()) + " |J|=" + std::to_string(J.size()));
        }
    }
    rep.cases = idx;
    return rep;
}

}  // namespace catlevy
