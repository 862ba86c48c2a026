#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catlevy/rational.hpp"
#include "catlevy/words.hpp"

namespace catlevy {

enum class ProductKind { Tensor, Free, Boolean, Monotone };

std::string to_string(ProductKind k);
// Accepts tensor, free, boolean, monotone. Throws std::invalid_argument.
ProductKind parse_product_kind(const std::string& s);

using WordEval = std::function<Rational(const ColoredWord&)>;

// The product rule at one binary split. Letters with is_left go to `left`,
// the others to `right`. `self` evaluates the product functional itself and
// is only used by the free rule, which recurses on shorter block sequences.
Rational product_rule(ProductKind kind, const ColoredWord& w, const std::function<bool(Letter)>& is_left,
                      const WordEval& left, const WordEval& right, const WordEval& self);

// phi1 on leg-0 letters, phi2 on leg-1 letters. The memo table lives in each call.
class ProductFunctional {
public:
    ProductFunctional(ProductKind kind, MomentFunctional phi1, MomentFunctional phi2);
    Rational operator()(const ColoredWord& w) const;
    Rational operator()(const Polynomial& p) const;
    ProductKind kind() const { return kind_; }

private:
    using Memo = std::map<ColoredWord, Rational>;
    Rational eval(const ColoredWord& w, Memo& memo) const;

    ProductKind kind_;
    MomentFunctional phi1_, phi2_;
};

Rational tensor_product(const MomentFunctional& phi1, const MomentFunctional& phi2, const ColoredWord& w);
Rational free_product(const MomentFunctional& phi1, const MomentFunctional& phi2, const ColoredWord& w);
Rational boolean_product(const MomentFunctional& phi1, const MomentFunctional& phi2, const ColoredWord& w);
Rational monotone_product(const MomentFunctional& phi1, const MomentFunctional& phi2, const ColoredWord& w);

// Comultiplication on one generator alphabet: image of each generator as a
// polynomial in leg-0 / leg-1 letters, plus the counit value of each generator.
struct Comultiplication {
    std::vector<Polynomial> images;
    std::vector<Rational> counit;
    // letters of different legs commute (tensor products)
    bool commuting = false;

    Polynomial apply(const ColoredWord& w) const;
};

// Delta(g) = g (x) g, counit 1, for every generator.
Comultiplication group_like(std::size_t generators);
// Delta(x) = x (x) 1 + 1 (x) x written as x_1 + x_2, counit 0.
Comultiplication primitive(std::size_t generators, bool commuting);

MomentFunctional counit_functional(const std::vector<std::string>& alphabet, int degree,
                                   const Comultiplication& delta);

// (phi1 * phi2)(w) = (phi1 [] phi2)(Delta(w)); degree is the smaller bound.
MomentFunctional convolve(const MomentFunctional& phi1, const MomentFunctional& phi2,
                          const Comultiplication& delta, ProductKind kind);

}  // namespace catlevy
