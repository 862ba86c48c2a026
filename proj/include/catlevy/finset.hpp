#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catlevy/category.hpp"

namespace catlevy {

// Sorted symbol set; tensor is the disjoint union, the unit is the empty set.
struct SymbolSet {
    std::vector<std::string> symbols;
    bool operator==(const SymbolSet& o) const { return symbols == o.symbols; }
};

// A morphism stores, for each element of the flattened source, the index of
// its image in the flattened target (leaves in order, each leaf's symbols in order).
using IndexMap = std::vector<std::uint32_t>;

class FinSet : public ExprCategory<FinSet, SymbolSet, IndexMap> {
public:
    static SymbolSet make_set(std::vector<std::string> symbols);

    std::size_t size(const Obj& a) const;

    Data identity_data(const Obj& a) const;
    Data compose_data(const Mor& g, const Mor& f) const;
    Data tensor_data(const Mor& f, const Mor& g) const;
    Data structural_data(const Obj& from, const Obj& to) const;

    Mor initial(const Obj& a) const { return {unit(), a, {}}; }
    bool is_valid(const Mor& f) const;
    std::optional<Mor> independence_candidate(const std::vector<Mor>& fs) const;

    // Every injection source -> target, in lexicographic order of the image lists.
    std::vector<Mor> all_morphisms(const Obj& source, const Obj& target) const;

    Obj random_object(Rng& rng) const;
    Mor random_morphism_into(const Obj& target, Rng& rng) const;
    Mor random_morphism_from(const Obj& source, Rng& rng) const;

    std::string describe(const Obj& a) const;
    std::string describe(const Mor& f) const;
    std::string name() const { return "finset"; }
};

}  // namespace catlevy
