#include <gtest/gtest.h>

#include "catlevy/category.hpp"
#include "catlevy/uniprod.hpp"
#include "oracles.hpp"

using namespace catlevy;

namespace {

const ProductKind kAll[] = {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean, ProductKind::Monotone};

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

MomentFunctional random_functional(std::vector<std::string> alphabet, int degree, Rng& rng) {
    return MomentFunctional::from_function(std::move(alphabet), degree,
                                           [&](const ColoredWord&) { return rand_rational(rng, 2, 3); });
}

oracle::Fun as_fun(const MomentFunctional& phi) {
    return [phi](const std::vector<int>& syms) {
        ColoredWord w;
        for (int s : syms) w.push_back(make_letter(0, static_cast<unsigned>(s)));
        return phi(w);
    };
}

oracle::Word2 as_word2(const ColoredWord& w) {
    oracle::Word2 out;
    for (Letter l : w) out.emplace_back(static_cast<int>(leg_of(l)), static_cast<int>(sym_of(l)));
    return out;
}

// Every two-coloured word of length <= n, alphabet size k on each leg.
std::vector<ColoredWord> coloured_words(unsigned k, std::size_t n) {
    std::vector<ColoredWord> out{ColoredWord()}, layer{ColoredWord()};
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<ColoredWord> next;
        for (const auto& w : layer)
            for (unsigned leg = 0; leg < 2; ++leg)
                for (unsigned s = 0; s < k; ++s) next.push_back(w + make_letter(leg, s));
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

ColoredWord swap_legs(const ColoredWord& w) {
    ColoredWord out;
    for (Letter l : w) out.push_back(make_letter(1 - leg_of(l), sym_of(l)));
    return out;
}

Rational oracle_value(ProductKind k, const MomentFunctional& p1, const MomentFunctional& p2, const ColoredWord& w) {
    auto f1 = as_fun(p1), f2 = as_fun(p2);
    auto w2 = as_word2(w);
    switch (k) {
    case ProductKind::Tensor: return oracle::tensor_oracle(f1, f2, w2);
    case ProductKind::Free: return oracle::free_oracle(f1, f2, w2);
    case ProductKind::Boolean: return oracle::boolean_oracle(f1, f2, w2);
    case ProductKind::Monotone: return oracle::monotone_oracle(f1, f2, w2);
    }
    return 0;
}

const Letter a1 = make_letter(0, 0), a2 = make_letter(0, 1), b = make_letter(1, 0);

}  // namespace

TEST(ProductKinds, NamesRoundTrip) {
    for (auto k : kAll) EXPECT_EQ(parse_product_kind(to_string(k)), k);
    EXPECT_THROW(parse_product_kind("orthogonal"), std::invalid_argument);
}

class Examples : public ::testing::Test {
protected:
    void SetUp() override {
        Rng rng(5);
        phi1 = random_functional({"a1", "a2"}, 4, rng);
        phi2 = random_functional({"b"}, 4, rng);
    }
    Rational p1(ColoredWord w) const { return phi1(w); }
    Rational p2(ColoredWord w) const { return phi2(w); }
    MomentFunctional phi1, phi2;
};

TEST_F(Examples, Tensor) {
    EXPECT_EQ(tensor_product(phi1, phi2, {a1, b, a2}), p1({a1, a2}) * p2({b}));
    EXPECT_EQ(tensor_product(phi1, phi2, {}), 1);
    EXPECT_EQ(tensor_product(phi1, phi2, {a2, a1, a1}), p1({a2, a1, a1}));
}

TEST_F(Examples, Free) {
    EXPECT_EQ(free_product(phi1, phi2, {a1, b}), p1({a1}) * p2({b}));
    EXPECT_EQ(free_product(phi1, phi2, {a1, b, a2}), p2({b}) * p1({a1, a2}));
}

TEST_F(Examples, FreeVanishesOnCenteredAlternatingWords) {
    // (a1 - phi(a1)) (b - phi(b)) (a2 - phi(a2)) (b - phi(b))
    Polynomial p = poly_constant(1);
    for (Letter l : ColoredWord{a1, b, a2, b}) {
        Rational m = leg_of(l) == 0 ? p1({l}) : p2({l});
        p = poly_mul(p, poly_add(poly_letter(l), poly_constant(-m)), false);
    }
    EXPECT_EQ(ProductFunctional(ProductKind::Free, phi1, phi2)(p), 0);
}

TEST_F(Examples, Boolean) {
    EXPECT_EQ(boolean_product(phi1, phi2, {a1, b, a2}), p1({a1}) * p2({b}) * p1({a2}));
    EXPECT_EQ(boolean_product(phi1, phi2, {b, b}), p2({b, b}));
    EXPECT_EQ(boolean_product(phi1, phi2, {}), 1);
}

TEST_F(Examples, Monotone) {
    EXPECT_EQ(monotone_product(phi1, phi2, {a1, b, a2}), p2({b}) * p1({a1, a2}));
    EXPECT_EQ(monotone_product(phi1, phi2, {b, a1}), p2({b}) * p1({a1}));
}

TEST_F(Examples, OverflowThrows) {
    auto small = MomentFunctional({"b"}, 1, {q(1), q(2)});
    EXPECT_THROW(tensor_product(phi1, small, {b, b}), DegreeOverflow);
    EXPECT_THROW(free_product(phi1, small, {b, a1, b}), DegreeOverflow);
}

TEST(ProductOracles, AllWordsUpToFourAgree) {
    Rng rng(11);
    const auto words = coloured_words(2, 4);
    for (int trial = 0; trial < 3; ++trial) {
        auto p1 = random_functional({"a", "c"}, 4, rng), p2 = random_functional({"b", "d"}, 4, rng);
        for (auto k : kAll) {
            ProductFunctional prod(k, p1, p2);
            for (const auto& w : words) ASSERT_EQ(prod(w), oracle_value(k, p1, p2, w)) << to_string(k);
        }
    }
}

TEST(ProductOracles, FreeFunctionsMatchProductFunctional) {
    Rng rng(3);
    auto p1 = random_functional({"a"}, 4, rng), p2 = random_functional({"b"}, 4, rng);
    for (const auto& w : coloured_words(1, 4)) {
        EXPECT_EQ(tensor_product(p1, p2, w), ProductFunctional(ProductKind::Tensor, p1, p2)(w));
        EXPECT_EQ(free_product(p1, p2, w), ProductFunctional(ProductKind::Free, p1, p2)(w));
        EXPECT_EQ(boolean_product(p1, p2, w), ProductFunctional(ProductKind::Boolean, p1, p2)(w));
        EXPECT_EQ(monotone_product(p1, p2, w), ProductFunctional(ProductKind::Monotone, p1, p2)(w));
    }
}

TEST(ProductProperties, PureWordsRestrictToTheFactor) {
    Rng rng(21);
    auto p1 = random_functional({"a", "c"}, 4, rng), p2 = random_functional({"b"}, 4, rng);
    for (auto k : kAll) {
        ProductFunctional prod(k, p1, p2);
        for (const auto& w : p1.words()) EXPECT_EQ(prod(w), p1(w));
        for (const auto& w : p2.words()) EXPECT_EQ(prod(swap_legs(w)), p2(w));
    }
}

TEST(ProductProperties, AllKindsAgreeUpToLengthTwo) {
    Rng rng(8);
    auto p1 = random_functional({"a", "c"}, 4, rng), p2 = random_functional({"b", "d"}, 4, rng);
    for (const auto& w : coloured_words(2, 2)) {
        const Rational t = tensor_product(p1, p2, w);
        for (auto k : kAll) EXPECT_EQ(ProductFunctional(k, p1, p2)(w), t);
    }
}

TEST(ProductProperties, SymmetryUnderSwappingLegs) {
    Rng rng(13);
    auto p1 = random_functional({"a"}, 4, rng), p2 = random_functional({"b"}, 4, rng);
    bool monotone_asymmetric = false;
    for (const auto& w : coloured_words(1, 4)) {
        for (auto k : {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean})
            EXPECT_EQ(ProductFunctional(k, p1, p2)(w), ProductFunctional(k, p2, p1)(swap_legs(w)));
        if (monotone_product(p1, p2, w) != monotone_product(p2, p1, swap_legs(w))) monotone_asymmetric = true;
    }
    EXPECT_TRUE(monotone_asymmetric);
}

TEST(ProductProperties, LengthFourSeparatesKinds) {
    Rng rng(2);
    auto p1 = random_functional({"a"}, 4, rng), p2 = random_functional({"b"}, 4, rng);
    bool free_vs_tensor = false, boolean_vs_free = false;
    for (const auto& w : coloured_words(1, 4)) {
        if (w.size() != 4) continue;
        free_vs_tensor = free_vs_tensor || free_product(p1, p2, w) != tensor_product(p1, p2, w);
        boolean_vs_free = boolean_vs_free || boolean_product(p1, p2, w) != free_product(p1, p2, w);
    }
    EXPECT_TRUE(free_vs_tensor);
    EXPECT_TRUE(boolean_vs_free);
    // a b a b, computed by hand from the centering expansion
    const ColoredWord abab{make_letter(0, 0), make_letter(1, 0), make_letter(0, 0), make_letter(1, 0)};
    const Rational A = p1(ColoredWord{make_letter(0, 0)}), AA = p1(ColoredWord(2, make_letter(0, 0)));
    const Rational B = p2(ColoredWord{make_letter(0, 0)}), BB = p2(ColoredWord(2, make_letter(0, 0)));
    EXPECT_EQ(free_product(p1, p2, abab), AA * B * B + A * A * BB - A * A * B * B);
}

TEST(Convolve, GroupLikeUnderTensor) {
    Rng rng(4);
    auto p1 = random_functional({"g"}, 4, rng), p2 = random_functional({"g"}, 4, rng);
    auto c = convolve(p1, p2, group_like(1), ProductKind::Tensor);
    for (const auto& w : p1.words()) EXPECT_EQ(c(w), p1(w) * p2(w));
}

namespace {

// Characteristic functional of a Bernoulli step on Z/2: phi(g^n) = E[(-1)^(nX)].
MomentFunctional z2_character(const Rational& p) {
    return MomentFunctional::from_function({"g"}, 4, [p](const ColoredWord& w) {
        return w.size() % 2 ? Rational(1 - 2 * p) : Rational(1);
    });
}

}  // namespace

TEST(Convolve, Z2CharacterMatchesClassicalConvolution) {
    const Rational p = q(1, 3), r = q(1, 5);
    auto c = convolve(z2_character(p), z2_character(r), group_like(1), ProductKind::Tensor);
    // P(X + Y = 1 mod 2)
    const Rational odd = p * (1 - r) + r * (1 - p);
    EXPECT_EQ(c(ColoredWord{make_letter(0, 0)}), 1 - 2 * odd);
    EXPECT_EQ(c(ColoredWord{make_letter(0, 0)}), (1 - 2 * p) * (1 - 2 * r));
    auto law = oracle::walk_law({1 - p, p}, 2);
    auto c2 = convolve(z2_character(p), z2_character(p), group_like(1), ProductKind::Tensor);
    EXPECT_EQ(law[1], q(4, 9));
    EXPECT_EQ(c2(ColoredWord{make_letter(0, 0)}), law[0] - law[1]);
}

TEST(Convolve, CounitIsNeutral) {
    Rng rng(9);
    for (auto k : kAll) {
        auto delta = primitive(2, k == ProductKind::Tensor);
        auto phi = random_functional({"x", "y"}, 4, rng);
        auto eps = counit_functional({"x", "y"}, 4, delta);
        EXPECT_EQ(convolve(phi, eps, delta, k), phi) << to_string(k);
        EXPECT_EQ(convolve(eps, phi, delta, k), phi) << to_string(k);
    }
    auto g = group_like(1);
    auto phi = random_functional({"g"}, 4, rng);
    EXPECT_EQ(convolve(phi, counit_functional({"g"}, 4, g), g, ProductKind::Tensor), phi);
}

TEST(Convolve, Associative) {
    Rng rng(31);
    for (auto k : kAll) {
        auto delta = primitive(1, k == ProductKind::Tensor);
        auto f = random_functional({"x"}, 4, rng), g = random_functional({"x"}, 4, rng),
             h = random_functional({"x"}, 4, rng);
        EXPECT_EQ(convolve(convolve(f, g, delta, k), h, delta, k), convolve(f, convolve(g, h, delta, k), delta, k))
            << to_string(k);
    }
    auto d2 = primitive(2, false);
    auto f = random_functional({"x", "y"}, 3, rng), g = random_functional({"x", "y"}, 3, rng),
         h = random_functional({"x", "y"}, 3, rng);
    EXPECT_EQ(convolve(convolve(f, g, d2, ProductKind::Free), h, d2, ProductKind::Free),
              convolve(f, convolve(g, h, d2, ProductKind::Free), d2, ProductKind::Free));
    auto gl = group_like(1);
    auto u = random_functional({"g"}, 4, rng), v = random_functional({"g"}, 4, rng), z = random_functional({"g"}, 4, rng);
    EXPECT_EQ(convolve(convolve(u, v, gl, ProductKind::Tensor), z, gl, ProductKind::Tensor),
              convolve(u, convolve(v, z, gl, ProductKind::Tensor), gl, ProductKind::Tensor));
}

TEST(Convolve, PrimitiveIsCommutativeExceptMonotone) {
    Rng rng(12);
    auto f = random_functional({"x"}, 4, rng), g = random_functional({"x"}, 4, rng);
    for (auto k : {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean}) {
        auto delta = primitive(1, k == ProductKind::Tensor);
        EXPECT_EQ(convolve(f, g, delta, k), convolve(g, f, delta, k)) << to_string(k);
    }
    auto delta = primitive(1, false);
    EXPECT_NE(convolve(f, g, delta, ProductKind::Monotone), convolve(g, f, delta, ProductKind::Monotone));
}

TEST(Convolve, FreeConvolutionPowersMatchCumulantScaling) {
    // step: moments 0 1 0 2 (semicircle)
    auto step = MomentFunctional({"x"}, 4, {q(1), q(0), q(1), q(0), q(2)});
    auto delta = primitive(1, false);
    auto acc = step;
    for (int n = 2; n <= 4; ++n) {
        acc = convolve(acc, step, delta, ProductKind::Free);
        for (std::size_t len = 0; len <= 4; ++len)
            EXPECT_EQ(acc(ColoredWord(len, make_letter(0, 0))), oracle::free_power_moment(as_fun(step), n, len));
    }
    EXPECT_EQ(acc(ColoredWord(4, make_letter(0, 0))), 2 * 4 * 4);
}

TEST(Convolve, DegreeIsTheSmallerBound) {
    Rng rng(1);
    auto f = random_functional({"x"}, 4, rng), g = random_functional({"x"}, 2, rng);
    EXPECT_EQ(convolve(f, g, primitive(1, false), ProductKind::Free).degree(), 2);
}
