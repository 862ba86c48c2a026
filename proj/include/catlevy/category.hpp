#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "catlevy/expr.hpp"
#include "catlevy/rational.hpp"

namespace catlevy {

template <class ObjT, class DataT>
struct Morphism {
    ObjT source;
    ObjT target;
    DataT data;
    bool operator==(const Morphism& o) const {
        return data == o.data && source == o.source && target == o.target;
    }
    bool operator!=(const Morphism& o) const { return !(*this == o); }
};

using Rng = std::mt19937_64;

// Portable draws: the standard distributions differ between library vendors,
// and reports must depend only on the seed.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) { return n ? rng() % n : 0; }
inline int rand_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}
inline bool rand_bool(Rng& rng) { return rng() & 1u; }
// Small rational in [-bound, bound] with denominator at most max_den.
inline Rational rand_rational(Rng& rng, int bound = 3, int max_den = 4) {
    Rational q(rand_int(rng, -bound * max_den, bound * max_den), rand_int(rng, 1, max_den));
    q.canonicalize();
    return q;
}

// What the generic machinery (catcore, comonoidal, limits, levy) needs from an instance.
template <class C>
concept TensorCategory = requires(const C& c, const typename C::Obj& a, const typename C::Mor& f,
                                  const std::vector<typename C::Mor>& fs) {
    { c.unit() } -> std::convertible_to<typename C::Obj>;
    { c.tensor_obj(a, a) } -> std::convertible_to<typename C::Obj>;
    { c.tensor_mor(f, f) } -> std::convertible_to<typename C::Mor>;
    { c.identity(a) } -> std::convertible_to<typename C::Mor>;
    { c.compose(f, f) } -> std::convertible_to<typename C::Mor>;
    { c.assoc(a, a, a) } -> std::convertible_to<typename C::Mor>;
    { c.assoc_inv(a, a, a) } -> std::convertible_to<typename C::Mor>;
    { c.lunit(a) } -> std::convertible_to<typename C::Mor>;
    { c.lunit_inv(a) } -> std::convertible_to<typename C::Mor>;
    { c.runit(a) } -> std::convertible_to<typename C::Mor>;
    { c.runit_inv(a) } -> std::convertible_to<typename C::Mor>;
    { c.is_valid(f) } -> std::convertible_to<bool>;
    { c.describe(f) } -> std::convertible_to<std::string>;
    { c.describe(a) } -> std::convertible_to<std::string>;
};

template <class C>
concept InitialUnitCategory = TensorCategory<C> && requires(const C& c, const typename C::Obj& a,
                                                            const std::vector<typename C::Mor>& fs,
                                                            Rng& rng) {
    { c.initial(a) } -> std::convertible_to<typename C::Mor>;
    { c.independence_candidate(fs) } -> std::convertible_to<std::optional<typename C::Mor>>;
    { c.random_object(rng) } -> std::convertible_to<typename C::Obj>;
    { c.random_morphism_into(a, rng) } -> std::convertible_to<typename C::Mor>;
    { c.random_morphism_from(a, rng) } -> std::convertible_to<typename C::Mor>;
    { c.name() } -> std::convertible_to<std::string>;
};

// Objects are bracketed expressions over atoms; the derived class supplies the
// morphism data operations and the data of the structural isomorphisms.
template <class Derived, class AtomT, class DataT>
class ExprCategory {
public:
    using Atom = AtomT;
    using Obj = Expr<AtomT>;
    using Data = DataT;
    using Mor = Morphism<Obj, DataT>;

    Obj unit() const { return Obj::unit(); }
    Obj leaf(Atom a) const { return Obj::leaf(std::move(a)); }
    Obj tensor_obj(const Obj& a, const Obj& b) const { return Obj::tensor(a, b); }

    Mor identity(const Obj& a) const { return {a, a, self().identity_data(a)}; }

    Mor compose(const Mor& g, const Mor& f) const {
        if (f.target != g.source)
            throw std::domain_error("cannot compose: target " + self().describe(f.target) +
                                    " differs from source " + self().describe(g.source));
        return {f.source, g.target, self().compose_data(g, f)};
    }

    Mor tensor_mor(const Mor& f, const Mor& g) const {
        return {tensor_obj(f.source, g.source), tensor_obj(f.target, g.target),
                self().tensor_data(f, g)};
    }

    Mor assoc(const Obj& a, const Obj& b, const Obj& c) const {
        return structural(tensor_obj(tensor_obj(a, b), c), tensor_obj(a, tensor_obj(b, c)));
    }
    Mor assoc_inv(const Obj& a, const Obj& b, const Obj& c) const {
        return structural(tensor_obj(a, tensor_obj(b, c)), tensor_obj(tensor_obj(a, b), c));
    }
    Mor lunit(const Obj& a) const { return structural(tensor_obj(unit(), a), a); }
    Mor lunit_inv(const Obj& a) const { return structural(a, tensor_obj(unit(), a)); }
    Mor runit(const Obj& a) const { return structural(tensor_obj(a, unit()), a); }
    Mor runit_inv(const Obj& a) const { return structural(a, tensor_obj(a, unit())); }

    Mor structural(const Obj& from, const Obj& to) const {
        return {from, to, self().structural_data(from, to)};
    }

private:
    const Derived& self() const { return static_cast<const Derived&>(*this); }
};

}  // namespace catlevy
