#include <gtest/gtest.h>

#include "catlevy/catcore.hpp"
#include "catlevy/finset.hpp"
#include "catlevy/prob.hpp"
#include "catlevy/qps.hpp"
#include "catlevy/vec.hpp"
#include "oracles.hpp"

using namespace catlevy;

namespace {

FinSet::Obj set(std::vector<std::string> syms) { return FinSet::Obj::leaf(FinSet::make_set(std::move(syms))); }

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Letter L(unsigned leg, unsigned sym) { return make_letter(leg, sym); }

}  // namespace

TEST(FinSetInstance, DisjointImagesGiveCopair) {
    FinSet c;
    auto target = set({"1", "2"});
    FinSet::Mor f1{set({"x"}), target, {0}}, f2{set({"y"}), target, {1}};
    auto h = find_independence_morphism(c, {f1, f2});
    ASSERT_TRUE(h);
    EXPECT_EQ(h->data, (IndexMap{0, 1}));
}

TEST(FinSetInstance, OverlappingImagesHaveNoCopair) {
    FinSet c;
    auto target = set({"1", "2"});
    FinSet::Mor f1{set({"x"}), target, {0}}, f2{set({"y"}), target, {0}};
    EXPECT_FALSE(find_independence_morphism(c, {f1, f2}));
}

TEST(FinSetInstance, EmptySourcesAreIndependent) {
    FinSet c;
    auto target = set({"1"});
    FinSet::Mor f1{set({}), target, {}}, f2{set({}), target, {}};
    EXPECT_TRUE(find_independence_morphism(c, {f1, f2}));
}

TEST(FinSetInstance, HomSetsAreAllInjections) {
    FinSet c;
    // |inj(m, n)| = n! / (n-m)!
    EXPECT_EQ(c.all_morphisms(set({"a", "b"}), set({"1", "2", "3"})).size(), 6u);
    EXPECT_EQ(c.all_morphisms(set({"a", "b", "c"}), set({"1", "2"})).size(), 0u);
    EXPECT_EQ(c.all_morphisms(set({"a", "b", "c", "d"}), set({"1", "2", "3", "4"})).size(), 24u);
}

TEST(FinSetInstance, ExhaustivePairsMatchDisjointness) {
    FinSet c;
    auto one = set({"x"}), two = set({"y", "z"}), target = set({"1", "2", "3"});
    for (const auto& f : c.all_morphisms(one, target))
        for (const auto& g : c.all_morphisms(two, target)) {
            bool disjoint = true;
            for (auto a : f.data)
                for (auto b : g.data) disjoint = disjoint && a != b;
            EXPECT_EQ(find_independence_morphism(c, {f, g}).has_value(), disjoint);
        }
}

TEST(VecInstance, CoordinateEmbeddingsAreIndependent) {
    Vec c;
    Vec::Mor e1{Vec::space(1), Vec::space(2), Matrix(2, 1, {1, 0})}, e2{Vec::space(1), Vec::space(2), Matrix(2, 1, {0, 1})};
    auto h = find_independence_morphism(c, {e1, e2});
    ASSERT_TRUE(h);
    EXPECT_EQ(h->data, Matrix::identity(2));
    EXPECT_FALSE(find_independence_morphism(c, {e1, e1}));
}

TEST(VecInstance, ThreeRangesSpanningQ3) {
    Vec c;
    Vec::Mor f1{Vec::space(1), Vec::space(3), Matrix(3, 1, {1, 1, 0})};
    Vec::Mor f2{Vec::space(1), Vec::space(3), Matrix(3, 1, {0, 1, 1})};
    Vec::Mor f3{Vec::space(1), Vec::space(3), Matrix(3, 1, {1, 0, 1})};
    auto h = find_independence_morphism(c, {f1, f2, f3});
    ASSERT_TRUE(h);
    std::vector<std::vector<mpq_class>> rows(3, std::vector<mpq_class>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) rows[i][j] = h->data(i, j);
    EXPECT_EQ(oracle::minor_rank(rows), 3u);
    // f3 replaced by f1 + f2: rank 2
    Vec::Mor g3{Vec::space(1), Vec::space(3), Matrix(3, 1, {1, 2, 1})};
    EXPECT_FALSE(find_independence_morphism(c, {f1, f2, g3}));
}

TEST(HilbInstance, OrthogonalRanges) {
    Hilb c;
    Hilb::Mor e1{Hilb::space(1), Hilb::space(2), Matrix(2, 1, {1, 0})}, e2{Hilb::space(1), Hilb::space(2), Matrix(2, 1, {0, 1})};
    EXPECT_TRUE(find_independence_morphism(c, {e1, e2}));
    EXPECT_FALSE(find_independence_morphism(c, {e1, e1}));
}

TEST(HilbInstance, PythagoreanRotationIsNotOrthogonalToE2) {
    Hilb c;
    Hilb::Mor v1{Hilb::space(1), Hilb::space(2), Matrix(2, 1, {q(3, 5), q(4, 5)})};
    Hilb::Mor v2{Hilb::space(1), Hilb::space(2), Matrix(2, 1, {0, 1})};
    ASSERT_TRUE(c.is_valid(v1));
    EXPECT_EQ((v1.data.transpose() * v2.data)(0, 0), q(4, 5));
    EXPECT_FALSE(find_independence_morphism(c, {v1, v2}));
}

TEST(HilbInstance, NonIsometryIsInvalid) {
    Hilb c;
    EXPECT_FALSE(c.is_valid({Hilb::space(1), Hilb::space(2), Matrix(2, 1, {1, 1})}));
}

TEST(ProbInstance, FairCoinCoordinatesAreIndependent) {
    Prob c;
    auto omega = Prob::space({q(1, 4), q(1, 4), q(1, 4), q(1, 4)});
    auto coin = Prob::space({q(1, 2), q(1, 2)});
    Prob::Mor x1{coin, omega, {0, 0, 1, 1}}, x2{coin, omega, {0, 1, 0, 1}};
    ASSERT_TRUE(c.is_valid(x1) && c.is_valid(x2));
    auto h = find_independence_morphism(c, {x1, x2});
    ASSERT_TRUE(h);
    EXPECT_EQ(c.pushforward(*h), (std::vector<Rational>{q(1, 4), q(1, 4), q(1, 4), q(1, 4)}));
}

TEST(ProbInstance, VariableWithItselfIsDependent) {
    Prob c;
    auto omega = Prob::space({q(1, 4), q(1, 4), q(1, 4), q(1, 4)});
    auto coin = Prob::space({q(1, 2), q(1, 2)});
    Prob::Mor x{coin, omega, {0, 0, 1, 1}};
    EXPECT_FALSE(find_independence_morphism(c, {x, x}));
}

TEST(ProbInstance, ConstantIsIndependentOfAnything) {
    Prob c;
    auto omega = Prob::space({q(1, 3), q(2, 3)});
    auto point = Prob::space({q(1)});
    Prob::Mor k{point, omega, {0, 0}}, x{omega, omega, {0, 1}};
    EXPECT_TRUE(find_independence_morphism(c, {k, x}));
}

TEST(ProbInstance, MeasureIsProductInMixedRadix) {
    Prob c;
    auto a = Prob::space({q(1, 3), q(2, 3)}), b = Prob::space({q(1, 2), q(1, 4), q(1, 4)});
    EXPECT_EQ(c.measure(c.tensor_obj(a, b)),
              (std::vector<Rational>{q(1, 6), q(1, 12), q(1, 12), q(1, 3), q(1, 6), q(1, 6)}));
}

TEST(QpsInstance, InclusionsIntoTensorProductAreIndependent) {
    Qps c;
    auto a = Qps::space(MomentFunctional({"a"}, 2, {q(1), q(2), q(5)}));
    auto b = Qps::space(MomentFunctional({"b"}, 2, {q(1), q(-1), q(3)}));
    auto [j1, j2] = canonical_inclusions(c, a, b);
    auto h = find_independence_morphism(c, {j1, j2});
    ASSERT_TRUE(h);
    EXPECT_EQ(*h, c.identity(c.tensor_obj(a, b)));
    // a1 b1 a1 under the tensor functional
    EXPECT_EQ(c.evaluate(c.tensor_obj(a, b), ColoredWord{L(0, 0), L(0, 0), L(1, 0)}), q(5) * q(-1));
}

TEST(QpsInstance, NoncommutingImagesAreNotIndependent) {
    Qps c;
    auto target = Qps::space(MomentFunctional::from_function({"a", "b"}, 2, [](const ColoredWord& w) {
        return Rational(static_cast<long>(w.size()));
    }));
    auto x = Qps::space(MomentFunctional({"x"}, 1, {q(1), q(1)}));
    Qps::Mor j1{x, target, {{poly_letter(L(0, 0))}}}, j2{x, target, {{poly_letter(L(0, 1))}}};
    ASSERT_TRUE(c.is_valid(j1) && c.is_valid(j2));
    EXPECT_NE(poly_mul(j1.data[0][0], j2.data[0][0], true), poly_mul(j2.data[0][0], j1.data[0][0], true));
    EXPECT_FALSE(find_independence_morphism(c, {j1, j2}));
}

TEST(QpsInstance, NonFactorizingFunctionalIsNotIndependent) {
    Qps c;
    auto target = Qps::space(MomentFunctional({"a"}, 2, {q(1), q(1), q(2)}));
    auto x = Qps::space(MomentFunctional({"x"}, 2, {q(1), q(1), q(2)}));
    Qps::Mor j{x, target, {{poly_letter(L(0, 0))}}};
    ASSERT_TRUE(c.is_valid(j));
    // phi(a a) = 2 but phi(a) phi(a) = 1
    EXPECT_FALSE(find_independence_morphism(c, {j, j}));
}

TEST(QpsInstance, OverflowingImageIsAnError) {
    Qps c;
    auto target = Qps::space(MomentFunctional({"a"}, 1, {q(1), q(0)}));
    auto x = Qps::space(MomentFunctional({"x"}, 1, {q(1), q(0)}));
    Qps::Mor j{x, target, {{poly_mul(poly_letter(L(0, 0)), poly_letter(L(0, 0)), true)}}};
    EXPECT_THROW(c.is_valid(j), DegreeOverflow);
}

TEST(QpsInstance, UniversalKindsRejectConstantTerms) {
    Qps c(ProductKind::Free);
    auto target = Qps::space(MomentFunctional({"a"}, 1, {q(1), q(0)}));
    auto x = Qps::space(MomentFunctional({"x"}, 1, {q(1), q(0)}));
    Qps::Mor j{x, target, {{poly_add(poly_letter(L(0, 0)), poly_constant(0))}}};
    EXPECT_TRUE(c.is_valid(j));
    Qps::Mor k{x, target, {{poly_add(poly_letter(L(0, 0)), poly_constant(1))}}};
    EXPECT_FALSE(c.is_valid(k));
}

// Composition against substituting by hand, without any normal form.
TEST(QpsInstance, CompositionMatchesDirectSubstitution) {
    for (auto kind : {ProductKind::Tensor, ProductKind::Free, ProductKind::Monotone}) {
        Qps c(kind);
        Rng rng(17);
        for (int k = 0; k < 40; ++k) {
            auto a = c.random_object(rng);
            auto f = c.random_morphism_into(a, rng);
            auto g = c.random_morphism_into(f.source, rng);
            auto gf = c.compose(f, g);
            for (const auto& w : c.words(g.source)) {
                // expand letter by letter
                Polynomial direct = poly_constant(1);
                for (Letter l : w) {
                    Polynomial img;
                    for (const auto& [u, cu] : g.data[leg_of(l)][sym_of(l)]) {
                        Polynomial t = poly_constant(cu);
                        for (Letter m : u) t = poly_mul(t, f.data[leg_of(m)][sym_of(m)], c.commuting());
                        img = poly_add(img, t);
                    }
                    direct = poly_mul(direct, img, c.commuting());
                }
                ASSERT_EQ(c.apply(gf, w), direct);
                ASSERT_EQ(c.evaluate(a, direct), c.evaluate(g.source, w));
            }
        }
    }
}

TEST(QpsInstance, DegreeBoundsOfProducts) {
    auto a = Qps::space(MomentFunctional({"a"}, 1, {q(1), q(0)}));
    auto b = Qps::space(MomentFunctional({"b"}, 3, {q(1), q(0), q(1), q(0)}));
    Qps t, f(ProductKind::Free);
    auto ab = t.tensor_obj(a, b);
    // per-leg bounds under the tensor product
    EXPECT_TRUE(t.word_allowed(ab, ColoredWord{L(0, 0), L(1, 0), L(1, 0), L(1, 0)}));
    EXPECT_FALSE(t.word_allowed(ab, ColoredWord{L(0, 0), L(0, 0)}));
    // universal products: per-leg bounds and total length up to the larger bound
    EXPECT_TRUE(f.word_allowed(ab, ColoredWord{L(1, 0), L(0, 0), L(1, 0)}));
    EXPECT_FALSE(f.word_allowed(ab, ColoredWord{L(0, 0), L(1, 0), L(0, 0)}));
    EXPECT_FALSE(f.word_allowed(ab, ColoredWord{L(1, 0), L(0, 0), L(1, 0), L(1, 0)}));
}
