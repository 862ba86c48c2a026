#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catlevy/category.hpp"

namespace catlevy {

// Finite probability space: point i has weight weights[i].
struct FiniteSpace {
    std::vector<Rational> weights;
    bool operator==(const FiniteSpace& o) const { return weights == o.weights; }
};

// Sample-space map. Direction warning: a morphism A -> B of the opposite
// category is stored as the map Omega_B -> Omega_A (entry b holds its image in A).
using SampleMap = std::vector<std::uint32_t>;

// Finite probability spaces, opposite category. The flattened sample space of
// an object is the product of its leaves in mixed radix, first leaf most
// significant; the unit is the one-point space.
class Prob : public ExprCategory<Prob, FiniteSpace, SampleMap> {
public:
    static FiniteSpace make_space(std::vector<Rational> weights);
    static Obj space(std::vector<Rational> weights) { return Obj::leaf(make_space(std::move(weights))); }

    std::size_t points(const Obj& a) const;
    // Product measure on the flattened space.
    std::vector<Rational> measure(const Obj& a) const;
    // Law of the stored map under the target measure, as a measure on the source space.
    std::vector<Rational> pushforward(const Mor& f) const;

    Data identity_data(const Obj& a) const;
    Data compose_data(const Mor& g, const Mor& f) const;
    Data tensor_data(const Mor& f, const Mor& g) const;
    Data structural_data(const Obj& from, const Obj& to) const;

    Mor initial(const Obj& a) const { return {unit(), a, Data(points(a), 0)}; }
    bool is_valid(const Mor& f) const;
    // The pairing omega -> (X_1(omega), ..., X_n(omega)).
    std::optional<Mor> independence_candidate(const std::vector<Mor>& fs) const;

    Obj random_object(Rng& rng) const;
    Mor random_morphism_into(const Obj& target, Rng& rng) const;
    Mor random_morphism_from(const Obj& source, Rng& rng) const;

    std::string describe(const Obj& a) const;
    std::string describe(const Mor& f) const;
    std::string name() const { return "prob"; }
};

}  // namespace catlevy
