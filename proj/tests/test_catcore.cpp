#include <gtest/gtest.h>

#include "catlevy/catcore.hpp"
#include "catlevy/ex33.hpp"
#include "catlevy/finset.hpp"
#include "catlevy/prob.hpp"
#include "catlevy/qps.hpp"
#include "catlevy/vec.hpp"

using namespace catlevy;

namespace {

FinSet::Obj set(std::vector<std::string> syms) { return FinSet::Obj::leaf(FinSet::make_set(std::move(syms))); }

FinSet::Obj sized(std::size_t n) {
    std::vector<std::string> syms;
    for (std::size_t i = 0; i < n; ++i) syms.push_back("e" + std::to_string(i));
    return set(syms);
}

// FinSet whose associator swaps the first two elements of the first factor.
class SwappedAssoc : public FinSet {
public:
    Mor assoc(const Obj& a, const Obj& b, const Obj& c) const { return swap(FinSet::assoc(a, b, c), a); }
    Mor assoc_inv(const Obj& a, const Obj& b, const Obj& c) const { return swap(FinSet::assoc_inv(a, b, c), a); }

private:
    Mor swap(Mor m, const Obj& a) const {
        if (size(a) >= 2) std::swap(m.data[0], m.data[1]);
        return m;
    }
};

}  // namespace

TEST(Diagram, SingleEdgeCommutes) {
    FinSet c;
    Diagram<FinSet> d(c);
    auto a = d.add_vertex(sized(2)), b = d.add_vertex(sized(3));
    d.add_edge(a, b, {sized(2), sized(3), {0, 2}});
    EXPECT_TRUE(check_diagram(d));
}

TEST(Diagram, TriangleOfComposite) {
    FinSet c;
    FinSet::Mor f{sized(1), sized(2), {1}}, g{sized(2), sized(3), {2, 0}};
    Diagram<FinSet> d(c);
    auto x = d.add_vertex(sized(1)), y = d.add_vertex(sized(2)), z = d.add_vertex(sized(3));
    d.add_edge(x, y, f);
    d.add_edge(y, z, g);
    d.add_edge(x, z, c.compose(g, f));
    EXPECT_TRUE(check_diagram(d));
}

TEST(Diagram, SquareWithDistinctMorphismFails) {
    FinSet c;
    FinSet::Mor f{sized(1), sized(2), {0}}, f2{sized(1), sized(2), {1}};
    Diagram<FinSet> d(c);
    auto x = d.add_vertex(sized(1)), y = d.add_vertex(sized(2)), z = d.add_vertex(sized(2));
    d.add_edge(x, y, c.compose(c.identity(sized(2)), f));
    d.add_edge(y, z, c.identity(sized(2)));
    d.add_edge(x, z, f2);
    EXPECT_FALSE(check_diagram(d));
}

TEST(Diagram, RejectsMismatchedEdgesAndUnverifiedInverses) {
    FinSet c;
    Diagram<FinSet> d(c);
    auto x = d.add_vertex(sized(1)), y = d.add_vertex(sized(2));
    EXPECT_THROW(d.add_edge(x, y, {sized(2), sized(2), {0, 1}}), std::domain_error);
    FinSet::Mor not_iso{sized(1), sized(2), {0}};
    EXPECT_THROW(d.add_inverse_edge(y, x, not_iso, {sized(2), sized(1), {0, 0}}), std::domain_error);
    auto a = c.assoc(sized(1), sized(1), sized(1));
    auto u = d.add_vertex(a.target), v = d.add_vertex(a.source);
    EXPECT_NO_THROW(d.add_inverse_edge(u, v, a, c.assoc_inv(sized(1), sized(1), sized(1))));
}

TEST(Inclusions, VecFirstSummandEmbedding) {
    Vec c;
    auto [i1, i2] = canonical_inclusions(c, Vec::space(2), Vec::space(1));
    EXPECT_EQ(i1.data, Matrix(3, 2, {1, 0, 0, 1, 0, 0}));
    EXPECT_EQ(i2.data, Matrix(3, 1, {0, 0, 1}));
}

TEST(Inclusions, UnitCompatibleAtE) {
    Vec c;
    auto a = Vec::space(3);
    EXPECT_EQ(c.compose(c.lunit(a), inclusion2(c, c.unit(), a)), c.identity(a));
    EXPECT_EQ(c.compose(c.runit(a), inclusion1(c, a, c.unit())), c.identity(a));
}

TEST(Inclusions, FinSetLeftCofactor) {
    FinSet c;
    auto a = set({"p", "q"}), b = set({"r"});
    auto i1 = inclusion1(c, a, b);
    EXPECT_EQ(i1.data, (IndexMap{0, 1}));
    EXPECT_EQ(i1.target, c.tensor_obj(a, b));
    EXPECT_EQ(inclusion2(c, a, b).data, (IndexMap{2}));
}

TEST(MultiInclusion, FullIndexListIsIdentity) {
    Vec c;
    std::vector<Vec::Obj> bs{Vec::space(1), Vec::space(2), Vec::space(1)};
    EXPECT_EQ(multi_inclusion(c, {0, 1, 2}, bs), c.identity(tensor_all(c, bs)));
}

TEST(MultiInclusion, TwoFactorsRecoverCanonicalInclusions) {
    Prob c;
    std::vector<Prob::Obj> bs{Prob::space({Rational(1, 3), Rational(2, 3)}), Prob::space({Rational(1, 2), Rational(1, 2)})};
    EXPECT_EQ(multi_inclusion(c, {0}, bs), inclusion1(c, bs[0], bs[1]));
    EXPECT_EQ(multi_inclusion(c, {1}, bs), inclusion2(c, bs[0], bs[1]));
}

TEST(MultiInclusion, Transitive) {
    FinSet c;
    std::vector<FinSet::Obj> bs{sized(1), sized(2), sized(1)};
    auto outer = multi_inclusion(c, {0, 2}, bs);
    auto inner = multi_inclusion(c, {0}, {bs[0], bs[2]});
    EXPECT_EQ(c.compose(outer, inner), multi_inclusion(c, {0}, bs));
}

TEST(MultiInclusion, RejectsBadIndexLists) {
    FinSet c;
    std::vector<FinSet::Obj> bs{sized(1), sized(1)};
    EXPECT_THROW(multi_inclusion(c, {}, bs), std::domain_error);
    EXPECT_THROW(multi_inclusion(c, {1, 0}, bs), std::domain_error);
    EXPECT_THROW(multi_inclusion(c, {0, 0}, bs), std::domain_error);
    EXPECT_THROW(multi_inclusion(c, {2}, bs), std::domain_error);
}

TEST(Independence, SingleMorphismIsItsOwnWitness) {
    Vec c;
    Vec::Mor f{Vec::space(1), Vec::space(2), Matrix(2, 1, {1, 1})};
    EXPECT_TRUE(verify_independence(c, {f}, f));
    auto found = find_independence_morphism(c, {f});
    ASSERT_TRUE(found);
    EXPECT_EQ(*found, f);
}

TEST(Independence, WrongTargetIsShapeError) {
    Vec c;
    Vec::Mor f{Vec::space(1), Vec::space(2), Matrix(2, 1, {1, 0})};
    Vec::Mor h{Vec::space(1), Vec::space(3), Matrix(3, 1, {1, 0, 0})};
    EXPECT_THROW(verify_independence(c, {f}, h), std::invalid_argument);
}

TEST(Independence, SumProductMorphismsAreNotUnique) {
    SumProduct c;
    auto one = SumProduct::space(1), two = SumProduct::space(2);
    std::vector<SumProduct::Mor> fs{{one, two, Matrix(2, 1, {1, 0})}, {one, two, Matrix(2, 1, {0, 1})}};
    auto h = *c.independence_candidate(fs);
    auto h2 = h;
    h2.data(1, 2) = 5;
    EXPECT_NE(h, h2);
    EXPECT_TRUE(verify_independence(c, fs, h));
    EXPECT_TRUE(verify_independence(c, fs, h2));
}

TEST(Independence, FinSetDisjointAndOverlapping) {
    FinSet c;
    auto target = set({"1", "2"});
    FinSet::Mor f1{set({"x"}), target, {0}}, f2{set({"y"}), target, {1}}, f3{set({"y"}), target, {0}};
    EXPECT_TRUE(find_independence_morphism(c, {f1, f2}));
    EXPECT_FALSE(find_independence_morphism(c, {f1, f3}));
}

// Initiality both ways: 1_A from the inclusions, inclusions from 1_A.
TEST(InitialUnit, FinSetHomSetsFromUnitAreSingletons) {
    FinSet c;
    for (std::size_t n = 0; n <= 4; ++n) {
        auto a = sized(n);
        auto homs = c.all_morphisms(c.unit(), a);
        ASSERT_EQ(homs.size(), 1u);
        EXPECT_EQ(homs[0], c.initial(a));
        EXPECT_EQ(c.compose(c.lunit(a), inclusion1(c, c.unit(), a)), c.initial(a));
        for (std::size_t k = 0; k + n <= 4; ++k) {
            auto b = sized(k);
            auto [i1, i2] = canonical_inclusions(c, a, b);
            EXPECT_EQ(c.compose(c.runit(a), inclusion1(c, a, c.unit())), c.identity(a));
            EXPECT_TRUE(c.is_valid(i1) && c.is_valid(i2));
            // naturality of iota^1 over a whole hom-set
            for (const auto& f : c.all_morphisms(sized(std::min<std::size_t>(n, 2)), a)) {
                EXPECT_EQ(c.compose(c.tensor_mor(f, c.identity(b)), inclusion1(c, f.source, b)), c.compose(i1, f));
            }
        }
    }
}

TEST(InitialUnit, StructuralUniquenessElsewhere) {
    Vec v;
    EXPECT_EQ((Vec::Mor{v.unit(), Vec::space(3), Matrix::zeros(3, 0)}), v.initial(Vec::space(3)));
    Prob p;
    auto a = Prob::space({Rational(1, 4), Rational(3, 4)});
    EXPECT_EQ((Prob::Mor{p.unit(), a, SampleMap{0, 0}}), p.initial(a));
    Qps q;
    auto x = Qps::space(MomentFunctional({"x"}, 1, {Rational(1), Rational(2)}));
    EXPECT_EQ((Qps::Mor{q.unit(), x, {}}), q.initial(x));
    EXPECT_TRUE(q.is_valid(q.initial(x)));
}

TEST(CoherenceSuite, ZeroCasesGiveEmptyReport) {
    Vec c;
    auto r = coherence_suite(c, 0, 1);
    EXPECT_EQ(r.checks, 0u);
    EXPECT_TRUE(r.ok());
}

TEST(CoherenceSuite, CorruptedAssociatorIsCaughtByPentagon) {
    SwappedAssoc c;
    auto r = coherence_suite(c, 100, 3);
    bool pentagon = false;
    for (const auto& f : r.failures) pentagon = pentagon || f.check == "pentagon";
    EXPECT_TRUE(pentagon);
}

TEST(CoherenceSuite, DeterministicInSeed) {
    Qps c(ProductKind::Monotone);
    auto a = coherence_suite(c, 20, 9), b = coherence_suite(c, 20, 9);
    EXPECT_EQ(format_json(a), format_json(b));
}

template <class C>
void expect_suites(const C& c) {
    auto coh = coherence_suite(c, 100, 42);
    EXPECT_TRUE(coh.ok()) << format_text(coh);
    auto ind = independence_suite(c, 100, 42);
    EXPECT_TRUE(ind.ok()) << format_text(ind);
}

TEST(CoherenceSuite, FinSet) { expect_suites(FinSet{}); }
TEST(CoherenceSuite, Vec) { expect_suites(Vec{}); }
TEST(CoherenceSuite, Hilb) { expect_suites(Hilb{}); }
TEST(CoherenceSuite, Prob) { expect_suites(Prob{}); }
TEST(CoherenceSuite, QpsTensor) { expect_suites(Qps(ProductKind::Tensor)); }
TEST(CoherenceSuite, QpsFree) { expect_suites(Qps(ProductKind::Free)); }
TEST(CoherenceSuite, QpsBoolean) { expect_suites(Qps(ProductKind::Boolean)); }
TEST(CoherenceSuite, QpsMonotone) { expect_suites(Qps(ProductKind::Monotone)); }
TEST(CoherenceSuite, SumProduct) { expect_suites(SumProduct{}); }
