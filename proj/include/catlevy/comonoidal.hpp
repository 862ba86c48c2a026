#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catlevy/catcore.hpp"
#include "catlevy/monoid.hpp"
#include "catlevy/prob.hpp"
#include "catlevy/qps.hpp"
#include "catlevy/report.hpp"
#include "catlevy/vec.hpp"

namespace catlevy {

// A_s on a finite window of the monoid, Delta_{s,t}: A_{st} -> A_s * A_t for
// every pair with st in the window, and the counit delta: A_e -> E.
template <TensorCategory C>
struct ComonoidalSystem {
    const C* cat = nullptr;
    Monoid monoid;
    std::vector<MonoidValue> window;
    std::map<MonoidValue, ObjOf<C>> objects;
    std::map<std::pair<MonoidValue, MonoidValue>, MorOf<C>> coproducts;
    MorOf<C> counit;

    bool in_window(const MonoidValue& s) const { return objects.count(s) > 0; }

    const ObjOf<C>& object(const MonoidValue& s) const {
        auto it = objects.find(s);
        if (it == objects.end()) throw std::out_of_range("index " + monoid.format(s) + " outside the window");
        return it->second;
    }
    const MorOf<C>& delta(const MonoidValue& s, const MonoidValue& t) const {
        auto it = coproducts.find({s, t});
        if (it == coproducts.end())
            throw std::out_of_range("no coproduct for (" + monoid.format(s) + ", " + monoid.format(t) + ")");
        return it->second;
    }
};

// Monoidal system: mu_{s,t}: A_s * A_t -> A_{st} and the unit u: E -> A_e.
template <TensorCategory C>
struct MonoidalSystem {
    const C* cat = nullptr;
    Monoid monoid;
    std::vector<MonoidValue> window;
    std::map<MonoidValue, ObjOf<C>> objects;
    std::map<std::pair<MonoidValue, MonoidValue>, MorOf<C>> products;
    MorOf<C> unit;
};

namespace detail {

inline std::string pair_text(const Monoid& m, const MonoidValue& s, const MonoidValue& t) {
    return "(s,t)=(" + m.format(s) + "," + m.format(t) + ")";
}

inline std::vector<std::pair<MonoidValue, MonoidValue>> window_pairs(const Monoid& m,
                                                                     const std::vector<MonoidValue>& window) {
    std::vector<std::pair<MonoidValue, MonoidValue>> out;
    for (const auto& s : window)
        for (const auto& t : window) {
            MonoidValue st;
            try {
                st = m.op(s, t);
            } catch (const std::domain_error&) {
                continue;
            }
            if (std::find(window.begin(), window.end(), st) != window.end()) out.push_back({s, t});
        }
    return out;
}

}  // namespace detail

// Validity of every Delta_{s,t} and delta, coassociativity on every triple
// inside the window and both counit laws.
template <TensorCategory C>
Report check_system_laws(const ComonoidalSystem<C>& S) {
    Report rep("comonoidal-system");
    rep.cases = S.window.size();
    const auto& cat = *S.cat;
    const auto& m = S.monoid;
    const auto e = m.unit();
    std::size_t idx = 0;
    for (const auto& [st, d] : S.coproducts) {
        const auto& [s, t] = st;
        const bool shape = d.source == S.object(m.op(s, t)) &&
                           d.target == cat.tensor_obj(S.object(s), S.object(t));
        rep.expect(shape && cat.is_valid(d), "coproduct-valid", idx++, detail::pair_text(m, s, t));
    }
    rep.expect(S.counit.source == S.object(e) && S.counit.target == cat.unit() && cat.is_valid(S.counit),
               "counit-valid", 0);
    if (!rep.ok()) return rep;

    idx = 0;
    for (const auto& r : S.window)
        for (const auto& s : S.window)
            for (const auto& t : S.window) {
                MonoidValue rst;
                try {
                    rst = m.op(m.op(r, s), t);
                } catch (const std::domain_error&) {
                    continue;
                }
                if (!S.in_window(rst)) continue;
                const auto rs = m.op(r, s), st = m.op(s, t);
                const auto &ar = S.object(r), &as = S.object(s), &at = S.object(t);
                auto lhs = cat.compose(cat.assoc(ar, as, at),
                                       cat.compose(cat.tensor_mor(S.delta(r, s), cat.identity(at)), S.delta(rs, t)));
                auto rhs = cat.compose(cat.tensor_mor(cat.identity(ar), S.delta(s, t)), S.delta(r, st));
                rep.expect(lhs == rhs, "coassociativity", idx++,
                           "(r,s,t)=(" + m.format(r) + "," + m.format(s) + "," + m.format(t) + ")");
            }
    idx = 0;
    for (const auto& s : S.window) {
        const auto& as = S.object(s);
        auto left = cat.compose(cat.lunit(as), cat.compose(cat.tensor_mor(S.counit, cat.identity(as)), S.delta(e, s)));
        auto right = cat.compose(cat.runit(as), cat.compose(cat.tensor_mor(cat.identity(as), S.counit), S.delta(s, e)));
        rep.expect(left == cat.identity(as), "counit-left", idx, "s=" + m.format(s));
        rep.expect(right == cat.identity(as), "counit-right", idx, "s=" + m.format(s));
        ++idx;
    }
    return rep;
}

template <TensorCategory C>
Report check_monoidal_laws(const MonoidalSystem<C>& S) {
    Report rep("monoidal-system");
    const auto& cat = *S.cat;
    const auto& m = S.monoid;
    const auto e = m.unit();
    auto mu = [&](const MonoidValue& s, const MonoidValue& t) -> const MorOf<C>& { return S.products.at({s, t}); };
    std::size_t idx = 0;
    for (const auto& [st, p] : S.products) {
        const auto& [s, t] = st;
        const bool shape = p.target == S.objects.at(m.op(s, t)) &&
                           p.source == cat.tensor_obj(S.objects.at(s), S.objects.at(t));
        rep.expect(shape && cat.is_valid(p), "product-valid", idx++, detail::pair_text(m, s, t));
    }
    rep.expect(S.unit.target == S.objects.at(e) && S.unit.source == cat.unit() && cat.is_valid(S.unit),
               "unit-valid", 0);
    if (!rep.ok()) return rep;
    idx = 0;
    for (const auto& r : S.window)
        for (const auto& s : S.window)
            for (const auto& t : S.window) {
                MonoidValue rst;
                try {
                    rst = m.op(m.op(r, s), t);
                } catch (const std::domain_error&) {
                    continue;
                }
                if (!S.objects.count(rst)) continue;
                const auto rs = m.op(r, s), st = m.op(s, t);
                const auto &ar = S.objects.at(r), &as = S.objects.at(s), &at = S.objects.at(t);
                auto lhs = cat.compose(mu(r, st), cat.compose(cat.tensor_mor(cat.identity(ar), mu(s, t)),
                                                              cat.assoc(ar, as, at)));
                auto rhs = cat.compose(mu(rs, t), cat.tensor_mor(mu(r, s), cat.identity(at)));
                rep.expect(lhs == rhs, "associativity", idx++,
                           "(r,s,t)=(" + m.format(r) + "," + m.format(s) + "," + m.format(t) + ")");
            }
    idx = 0;
    for (const auto& s : S.window) {
        const auto& as = S.objects.at(s);
        auto left = cat.compose(mu(e, s), cat.compose(cat.tensor_mor(S.unit, cat.identity(as)), cat.lunit_inv(as)));
        auto right = cat.compose(mu(s, e), cat.compose(cat.tensor_mor(cat.identity(as), S.unit), cat.runit_inv(as)));
        rep.expect(left == cat.identity(as) && right == cat.identity(as), "unit-law", idx++, "s=" + m.format(s));
    }
    rep.cases = S.window.size();
    return rep;
}

// Restriction to a submonoid of the window. Throws std::invalid_argument when
// u lacks the unit, leaves the window or is not closed under the product.
template <TensorCategory C>
ComonoidalSystem<C> restrict(const ComonoidalSystem<C>& S, const std::vector<MonoidValue>& u) {
    const auto& m = S.monoid;
    auto has = [&](const MonoidValue& x) { return std::find(u.begin(), u.end(), x) != u.end(); };
    if (!has(m.unit())) throw std::invalid_argument("restrict: subset does not contain the unit");
    for (const auto& s : u)
        if (!S.in_window(s)) throw std::invalid_argument("restrict: " + m.format(s) + " outside the window");
    for (const auto& s : u)
        for (const auto& t : u) {
            MonoidValue st;
            try {
                st = m.op(s, t);
            } catch (const std::domain_error&) {
                continue;
            }
            if (S.in_window(st) && !has(st))
                throw std::invalid_argument("restrict: not closed, " + m.format(s) + " * " + m.format(t));
        }
    ComonoidalSystem<C> out{S.cat, m, {}, {}, {}, S.counit};
    for (const auto& s : S.window)
        if (has(s)) {
            out.window.push_back(s);
            out.objects.emplace(s, S.object(s));
        }
    for (const auto& [st, d] : S.coproducts)
        if (has(st.first) && has(st.second)) out.coproducts.emplace(st, d);
    return out;
}

// Cotensor functor C -> D: object and morphism maps, Delta_{A,B}: F(A*B) -> F(A)*F(B)
// and delta: F(E) -> E.
template <TensorCategory C, TensorCategory D>
struct CotensorFunctor {
    std::string name;
    const C* source = nullptr;
    const D* target = nullptr;
    std::function<ObjOf<D>(const ObjOf<C>&)> on_obj;
    std::function<MorOf<D>(const MorOf<C>&)> on_mor;
    std::function<MorOf<D>(const ObjOf<C>&, const ObjOf<C>&)> delta;
    std::function<MorOf<D>()> counit;
    bool strong = false;
};

// Coassociativity and counit squares of the functor on the given objects,
// functoriality and naturality of Delta on the given morphisms.
template <TensorCategory C, TensorCategory D>
Report check_functor_laws(const CotensorFunctor<C, D>& F, const std::vector<ObjOf<C>>& objs,
                          const std::vector<MorOf<C>>& mors) {
    Report rep("cotensor-functor/" + F.name);
    const auto& c = *F.source;
    const auto& d = *F.target;
    std::size_t idx = 0;
    for (const auto& a : objs)
        for (const auto& b : objs)
            for (const auto& x : objs) {
                auto ab = c.tensor_obj(a, b), bx = c.tensor_obj(b, x);
                auto lhs = d.compose(d.assoc(F.on_obj(a), F.on_obj(b), F.on_obj(x)),
                                     d.compose(d.tensor_mor(F.delta(a, b), d.identity(F.on_obj(x))), F.delta(ab, x)));
                auto rhs = d.compose(d.tensor_mor(d.identity(F.on_obj(a)), F.delta(b, x)),
                                     d.compose(F.delta(a, bx), F.on_mor(c.assoc(a, b, x))));
                rep.expect(lhs == rhs, "coassociativity", idx++);
            }
    idx = 0;
    for (const auto& a : objs) {
        auto fa = F.on_obj(a);
        auto left = d.compose(d.lunit(fa), d.compose(d.tensor_mor(F.counit(), d.identity(fa)), F.delta(c.unit(), a)));
        auto right = d.compose(d.runit(fa), d.compose(d.tensor_mor(d.identity(fa), F.counit()), F.delta(a, c.unit())));
        rep.expect(left == F.on_mor(c.lunit(a)) && right == F.on_mor(c.runit(a)), "counit", idx++);
        rep.expect(F.on_mor(c.identity(a)) == d.identity(fa), "identity", idx);
    }
    idx = 0;
    for (const auto& f : mors)
        for (const auto& g : mors) {
            if (f.target == g.source)
                rep.expect(F.on_mor(c.compose(g, f)) == d.compose(F.on_mor(g), F.on_mor(f)), "functorial", idx);
            auto nat_l = d.compose(F.delta(f.target, g.target), F.on_mor(c.tensor_mor(f, g)));
            auto nat_r = d.compose(d.tensor_mor(F.on_mor(f), F.on_mor(g)), F.delta(f.source, g.source));
            rep.expect(nat_l == nat_r, "delta-natural", idx++);
        }
    rep.cases = objs.size();
    return rep;
}

// Objects F(A_s), coproducts Delta_{F A_s, F A_t} o F(Delta_{s,t}), counit delta' o F(delta).
template <TensorCategory C, TensorCategory D>
ComonoidalSystem<D> map_system(const CotensorFunctor<C, D>& F, const ComonoidalSystem<C>& S) {
    const auto& d = *F.target;
    ComonoidalSystem<D> out;
    out.cat = F.target;
    out.monoid = S.monoid;
    out.window = S.window;
    for (const auto& [s, a] : S.objects) out.objects.emplace(s, F.on_obj(a));
    for (const auto& [st, m] : S.coproducts)
        out.coproducts.emplace(st, d.compose(F.delta(S.object(st.first), S.object(st.second)), F.on_mor(m)));
    out.counit = d.compose(F.counit(), F.on_mor(S.counit));
    return out;
}

template <TensorCategory C>
CotensorFunctor<C, C> identity_functor(const C& cat) {
    CotensorFunctor<C, C> f;
    f.name = "identity";
    f.source = f.target = &cat;
    f.on_obj = [](const ObjOf<C>& a) { return a; };
    f.on_mor = [](const MorOf<C>& m) { return m; };
    f.delta = [&cat](const ObjOf<C>& a, const ObjOf<C>& b) { return cat.identity(cat.tensor_obj(a, b)); };
    f.counit = [&cat] { return cat.identity(cat.unit()); };
    f.strong = true;
    return f;
}

template <TensorCategory C, TensorCategory D, TensorCategory E>
CotensorFunctor<C, E> compose_functors(const CotensorFunctor<D, E>& g, const CotensorFunctor<C, D>& f) {
    CotensorFunctor<C, E> h;
    h.name = g.name + "." + f.name;
    h.source = f.source;
    h.target = g.target;
    h.on_obj = [f, g](const ObjOf<C>& a) { return g.on_obj(f.on_obj(a)); };
    h.on_mor = [f, g](const MorOf<C>& m) { return g.on_mor(f.on_mor(m)); };
    // Delta^h_{A,B} = Delta^g_{FA,FB} o G(Delta^f_{A,B})
    h.delta = [f, g](const ObjOf<C>& a, const ObjOf<C>& b) {
        return g.target->compose(g.delta(f.on_obj(a), f.on_obj(b)), g.on_mor(f.delta(a, b)));
    };
    h.counit = [f, g] { return g.target->compose(g.counit(), g.on_mor(f.counit())); };
    h.strong = f.strong && g.strong;
    return h;
}

// Isometries are injective: the same matrices in the injective category.
inline CotensorFunctor<Hilb, Vec> forget_inner_product(const Hilb& h, const Vec& v) {
    CotensorFunctor<Hilb, Vec> f;
    f.name = "forget";
    f.source = &h;
    f.target = &v;
    // both categories use the same object trees
    f.on_obj = [](const Hilb::Obj& a) { return a; };
    f.on_mor = [](const Hilb::Mor& m) { return Vec::Mor{m.source, m.target, m.data}; };
    f.delta = [&v](const Hilb::Obj& a, const Hilb::Obj& b) { return v.identity(v.tensor_obj(a, b)); };
    f.counit = [&v] { return v.identity(v.unit()); };
    f.strong = true;
    return f;
}

// Transposes every coproduct and the counit: a comonoidal system of
// isometries becomes a monoidal system of coisometries.
inline MonoidalSystem<HilbCo> transpose_system(const ComonoidalSystem<Hilb>& S, const HilbCo& co) {
    MonoidalSystem<HilbCo> out;
    out.cat = &co;
    out.monoid = S.monoid;
    out.window = S.window;
    out.objects = S.objects;
    for (const auto& [st, d] : S.coproducts) out.products.emplace(st, HilbCo::Mor{d.target, d.source, d.data.transpose()});
    out.unit = HilbCo::Mor{S.counit.target, S.counit.source, S.counit.data.transpose()};
    return out;
}

// Window of all elements of size <= max_size.
inline std::vector<MonoidValue> monoid_window(const Monoid& m, int max_size) { return m.elements_up_to(max_size); }

// Generic builder: objects from `object`, every coproduct from `coproduct`
// (source A_{st}, factors A_s, A_t) and the counit from `counit`.
template <TensorCategory C>
ComonoidalSystem<C> build_system(const C& cat, const Monoid& m, const std::vector<MonoidValue>& window,
                                 const std::function<ObjOf<C>(const MonoidValue&)>& object,
                                 const std::function<MorOf<C>(const ObjOf<C>&, const ObjOf<C>&, const ObjOf<C>&)>& coproduct,
                                 const std::function<MorOf<C>(const ObjOf<C>&)>& counit) {
    ComonoidalSystem<C> S;
    S.cat = &cat;
    S.monoid = m;
    S.window = window;
    for (const auto& s : window) S.objects.emplace(s, object(s));
    for (const auto& [s, t] : detail::window_pairs(m, window))
        S.coproducts.emplace(std::make_pair(s, t), coproduct(S.object(m.op(s, t)), S.object(s), S.object(t)));
    S.counit = counit(S.object(m.unit()));
    return S;
}

// Random walk on Z/n: A_t carries the law mu_t, Delta_{s,t} is addition mod n
// read as a map on sample spaces, the counit picks 0. The laws hold iff
// mu_{s+t} = mu_s * mu_t and mu_e is the point mass at 0.
inline ComonoidalSystem<Prob> group_walk_system(const Prob& cat, const Monoid& m, const std::vector<MonoidValue>& window,
                                                std::size_t order,
                                                const std::function<std::vector<Rational>(const MonoidValue&)>& law) {
    return build_system<Prob>(
        cat, m, window, [&](const MonoidValue& s) { return Prob::space(law(s)); },
        [&cat, order](const Prob::Obj& ast, const Prob::Obj& as, const Prob::Obj& at) {
            Prob::Data d;
            for (std::uint32_t x = 0; x < order; ++x)
                for (std::uint32_t y = 0; y < order; ++y) d.push_back(static_cast<std::uint32_t>((x + y) % order));
            return Prob::Mor{ast, cat.tensor_obj(as, at), d};
        },
        [&cat](const Prob::Obj& ae) { return Prob::Mor{ae, cat.unit(), Prob::Data{0}}; });
}

// Bialgebra on one alphabet: A_t = (words, phi_t), Delta_{s,t} the comultiplication,
// the counit the bialgebra counit.
inline ComonoidalSystem<Qps> bialgebra_system(const Qps& cat, const Monoid& m, const std::vector<MonoidValue>& window,
                                              const Comultiplication& delta,
                                              const std::function<MomentFunctional(const MonoidValue&)>& phi) {
    if (delta.commuting != cat.commuting())
        throw std::invalid_argument("comultiplication and product kind disagree on commuting legs");
    return build_system<Qps>(
        cat, m, window, [&](const MonoidValue& s) { return Qps::space(phi(s)); },
        [&cat, delta](const Qps::Obj& ast, const Qps::Obj& as, const Qps::Obj& at) {
            return Qps::Mor{ast, cat.tensor_obj(as, at), SubstitutionTable{delta.images}};
        },
        [&cat, delta](const Qps::Obj& ae) {
            SubstitutionTable t(1);
            for (const auto& c : delta.counit) t[0].push_back(cat.commuting() ? poly_constant(c) : Polynomial{});
            for (const auto& c : delta.counit)
                if (!cat.commuting() && c != 0)
                    throw std::invalid_argument("nonzero counit needs commuting legs");
            return Qps::Mor{ae, cat.unit(), t};
        });
}

// mu^{*k} on Z/n by direct convolution sums.
inline std::vector<Rational> convolution_power(const std::vector<Rational>& mu, int k) {
    const std::size_t n = mu.size();
    std::vector<Rational> acc(n);
    acc[0] = 1;
    for (int i = 0; i < k; ++i) {
        std::vector<Rational> next(n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) next[(x + y) % n] += acc[x] * mu[y];
        acc = std::move(next);
    }
    return acc;
}

}  // namespace catlevy
