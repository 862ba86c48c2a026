#include "catlevy/uniprod.hpp"

#include <stdexcept>

namespace catlevy {

std::string to_string(ProductKind k) {
    switch (k) {
    case ProductKind::Tensor: return "tensor";
    case ProductKind::Free: return "free";
    case ProductKind::Boolean: return "boolean";
    case ProductKind::Monotone: return "monotone";
    }
    return "?";
}

ProductKind parse_product_kind(const std::string& s) {
    if (s == "tensor") return ProductKind::Tensor;
    if (s == "free") return ProductKind::Free;
    if (s == "boolean") return ProductKind::Boolean;
    if (s == "monotone") return ProductKind::Monotone;
    throw std::invalid_argument("unknown product '" + s + "'");
}

namespace {

struct Block {
    bool left;
    ColoredWord word;
};

std::vector<Block> blocks_of(const ColoredWord& w, const std::function<bool(Letter)>& is_left) {
    std::vector<Block> out;
    for (Letter l : w) {
        const bool side = is_left(l);
        if (out.empty() || out.back().left != side) out.push_back({side, {}});
        out.back().word.push_back(l);
    }
    return out;
}

}  // namespace

Rational product_rule(ProductKind kind, const ColoredWord& w, const std::function<bool(Letter)>& is_left,
                      const WordEval& left, const WordEval& right, const WordEval& self) {
    auto bs = blocks_of(w, is_left);
    if (bs.empty()) return 1;
    if (bs.size() == 1) return bs[0].left ? left(bs[0].word) : right(bs[0].word);

    switch (kind) {
    case ProductKind::Tensor: {
        ColoredWord l, r;
        for (Letter x : w) (is_left(x) ? l : r).push_back(x);
        return left(l) * right(r);
    }
    case ProductKind::Boolean: {
        Rational p = 1;
        for (const auto& b : bs) p *= b.left ? left(b.word) : right(b.word);
        return p;
    }
    case ProductKind::Monotone: {
        ColoredWord l;
        Rational p = 1;
        for (const auto& b : bs) {
            if (b.left)
                l += b.word;
            else
                p *= right(b.word);
        }
        return p * left(l);
    }
    case ProductKind::Free: {
        // Centering every block: w = prod (c_k + phi_k) with Phi(alternating centered) = 0.
        // Phi(w) = - sum over proper subsets S of prod_{k not in S} (-phi_k) * Phi(b_S).
        const std::size_t m = bs.size();
        if (m > 20) throw std::length_error("word has too many blocks");
        std::vector<Rational> phi(m);
        for (std::size_t k = 0; k < m; ++k) phi[k] = bs[k].left ? left(bs[k].word) : right(bs[k].word);
        Rational total = 0;
        const unsigned full = (1u << m) - 1;
        for (unsigned s = 0; s < full; ++s) {
            Rational coef = 1;
            ColoredWord sub;
            for (std::size_t k = 0; k < m; ++k) {
                if (s & (1u << k))
                    sub += bs[k].word;
                else
                    coef *= -phi[k];
            }
            if (coef == 0) continue;
            total += coef * self(sub);
        }
        return -total;
    }
    }
    throw std::logic_error("unknown product kind");
}

ProductFunctional::ProductFunctional(ProductKind kind, MomentFunctional phi1, MomentFunctional phi2)
    : kind_(kind), phi1_(std::move(phi1)), phi2_(std::move(phi2)) {}

Rational ProductFunctional::operator()(const ColoredWord& w) const {
    Memo memo;
    return eval(w, memo);
}

Rational ProductFunctional::eval(const ColoredWord& w, Memo& memo) const {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    for (Letter l : w)
        if (leg_of(l) > 1) throw std::out_of_range("product functional has two legs");
    auto is_left = [](Letter l) { return leg_of(l) == 0; };
    auto left = [this](const ColoredWord& u) { return phi1_(u); };
    auto right = [this](const ColoredWord& u) { return phi2_(u); };
    auto self = [this, &memo](const ColoredWord& u) { return eval(u, memo); };
    Rational v = product_rule(kind_, w, is_left, left, right, self);
    memo.emplace(w, v);
    return v;
}

Rational ProductFunctional::operator()(const Polynomial& p) const {
    Memo memo;
    Rational v = 0;
    for (const auto& [w, c] : p) v += c * eval(w, memo);
    return v;
}

Rational tensor_product(const MomentFunctional& a, const MomentFunctional& b, const ColoredWord& w) {
    return ProductFunctional(ProductKind::Tensor, a, b)(w);
}
Rational free_product(const MomentFunctional& a, const MomentFunctional& b, const ColoredWord& w) {
    return ProductFunctional(ProductKind::Free, a, b)(w);
}
Rational boolean_product(const MomentFunctional& a, const MomentFunctional& b, const ColoredWord& w) {
    return ProductFunctional(ProductKind::Boolean, a, b)(w);
}
Rational monotone_product(const MomentFunctional& a, const MomentFunctional& b, const ColoredWord& w) {
    return ProductFunctional(ProductKind::Monotone, a, b)(w);
}

Polynomial Comultiplication::apply(const ColoredWord& w) const {
    Polynomial acc = poly_constant(1);
    for (Letter l : w) acc = poly_mul(acc, images.at(sym_of(l)), commuting);
    return acc;
}

Comultiplication group_like(std::size_t generators) {
    Comultiplication c;
    c.commuting = true;
    for (unsigned s = 0; s < generators; ++s) {
        c.images.push_back(Polynomial{{ColoredWord{make_letter(0, s), make_letter(1, s)}, Rational(1)}});
        c.counit.push_back(1);
    }
    return c;
}

Comultiplication primitive(std::size_t generators, bool commuting) {
    Comultiplication c;
    c.commuting = commuting;
    for (unsigned s = 0; s < generators; ++s) {
        c.images.push_back(poly_add(poly_letter(make_letter(0, s)), poly_letter(make_letter(1, s))));
        c.counit.push_back(0);
    }
    return c;
}

MomentFunctional counit_functional(const std::vector<std::string>& alphabet, int degree,
                                   const Comultiplication& delta) {
    return MomentFunctional::from_function(alphabet, degree, [&](const ColoredWord& w) {
        Rational p = 1;
        for (Letter l : w) p *= delta.counit.at(sym_of(l));
        return p;
    });
}

MomentFunctional convolve(const MomentFunctional& phi1, const MomentFunctional& phi2,
                          const Comultiplication& delta, ProductKind kind) {
    if (phi1.alphabet() != phi2.alphabet())
        throw std::invalid_argument("convolution of functionals on different alphabets");
    if (delta.images.size() != phi1.alphabet_size())
        throw std::invalid_argument("comultiplication does not match the alphabet");
    ProductFunctional prod(kind, phi1, phi2);
    const int d = std::min(phi1.degree(), phi2.degree());
    return MomentFunctional::from_function(phi1.alphabet(), d,
                                           [&](const ColoredWord& w) { return prod(delta.apply(w)); });
}

}  // namespace catlevy
