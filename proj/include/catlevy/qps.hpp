#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catlevy/category.hpp"
#include "catlevy/uniprod.hpp"
#include "catlevy/words.hpp"

namespace catlevy {

struct QpsAtom {
    std::shared_ptr<const MomentFunctional> phi;
    bool operator==(const QpsAtom& o) const { return phi == o.phi || *phi == *o.phi; }
};

// Row per source leg, entry per generator: the image polynomial over target letters.
using SubstitutionTable = std::vector<std::vector<Polynomial>>;

// Algebraic quantum probability spaces on truncated word algebras. Each leaf
// of an object is one leg (a free algebra on its alphabet with a moment
// functional); the tensor is the tensor product (kind Tensor, legs commute)
// or the free product with the free, Boolean or monotone functional.
//
// Degree bounds: with Tensor every leg keeps its own bound; with the universal
// kinds a word must also have total length at most the largest leg bound.
class Qps : public ExprCategory<Qps, QpsAtom, SubstitutionTable> {
public:
    explicit Qps(ProductKind kind = ProductKind::Tensor) : kind_(kind) {}
    ProductKind kind() const { return kind_; }
    bool commuting() const { return kind_ == ProductKind::Tensor; }

    static Obj space(MomentFunctional phi) {
        return Obj::leaf(QpsAtom{std::make_shared<const MomentFunctional>(std::move(phi))});
    }

    std::vector<const MomentFunctional*> legs(const Obj& a) const;
    bool word_allowed(const Obj& a, const ColoredWord& w) const;
    // Every allowed word; with Tensor only leg-sorted words.
    std::vector<ColoredWord> words(const Obj& a) const;
    Rational evaluate(const Obj& a, const ColoredWord& w) const;
    Rational evaluate(const Obj& a, const Polynomial& p) const;

    Polynomial apply(const Mor& j, const ColoredWord& w) const;
    Polynomial apply_table(const SubstitutionTable& t, const Polynomial& p) const;
    // phi_target o j for a morphism out of a one-leg object.
    MomentFunctional pullback(const Mor& j) const;

    Data identity_data(const Obj& a) const;
    Data compose_data(const Mor& g, const Mor& f) const;
    Data tensor_data(const Mor& f, const Mor& g) const;
    Data structural_data(const Obj& from, const Obj& to) const;

    Mor initial(const Obj& a) const { return {unit(), a, {}}; }
    // Shape checks, then phi_target(j(w)) = phi_source(w) on every allowed source
    // word. Throws DegreeOverflow when an image word exceeds the target bounds.
    bool is_valid(const Mor& j) const;
    // Generators of each factor sent to their images: mu o (j_1 (x) ... (x) j_n)
    // for Tensor, the free-product homomorphism otherwise.
    std::optional<Mor> independence_candidate(const std::vector<Mor>& fs) const;

    Obj random_object(Rng& rng) const;
    Mor random_morphism_into(const Obj& target, Rng& rng) const;
    Mor random_morphism_from(const Obj& source, Rng& rng) const;

    std::string describe(const Obj& a) const;
    std::string describe(const Mor& f) const;
    std::string name() const;

private:
    ProductKind kind_;
};

// Evaluates the functional of one object; memoized per (subtree, word).
class QpsEvaluator {
public:
    QpsEvaluator(const Qps& cat, Qps::Obj obj);
    Rational operator()(const ColoredWord& w);
    Rational operator()(const Polynomial& p);

private:
    Rational node(const Qps::Obj& n, unsigned first_leg, const ColoredWord& w);

    const Qps* cat_;
    Qps::Obj obj_;
    std::map<std::pair<const void*, ColoredWord>, Rational> memo_;
};

}  // namespace catlevy
