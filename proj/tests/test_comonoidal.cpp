#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "catlevy/comonoidal.hpp"
#include "catlevy/semigroup_spec.hpp"
#include "oracles.hpp"

using namespace catlevy;

namespace {

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

ComonoidalSystem<Prob> z2_walk(const Prob& cat, const Rational& p, int horizon) {
    auto m = Monoid::nat_add(horizon);
    return group_walk_system(cat, m, monoid_window(m, horizon), 2,
                             [p](const MonoidValue& t) { return convolution_power({1 - p, p}, t[0]); });
}

MomentFunctional z2_phi(int t) {
    Rational c = 1;
    for (int i = 0; i < t; ++i) c *= q(1, 3);
    return MomentFunctional::from_function({"g"}, 4, [c](const ColoredWord& w) {
        return w.size() % 2 ? c : Rational(1);
    });
}

ComonoidalSystem<Qps> z2_bialgebra(const Qps& cat, int horizon) {
    auto m = Monoid::nat_add(horizon);
    return bialgebra_system(cat, m, monoid_window(m, horizon), group_like(1),
                            [](const MonoidValue& t) { return z2_phi(t[0]); });
}

// A_t of dimension t, every coproduct the identity of C^{s+t}.
ComonoidalSystem<Hilb> dimension_system(const Hilb& cat, int horizon) {
    auto m = Monoid::nat_add(horizon);
    return build_system<Hilb>(
        cat, m, monoid_window(m, horizon), [](const MonoidValue& t) { return Hilb::space(t[0]); },
        [&cat](const Hilb::Obj& ast, const Hilb::Obj& as, const Hilb::Obj& at) {
            return Hilb::Mor{ast, cat.tensor_obj(as, at), Matrix::identity(Hilb::dim(ast))};
        },
        [&cat](const Hilb::Obj& ae) { return Hilb::Mor{ae, cat.unit(), Matrix::identity(0)}; });
}

template <class S>
std::set<std::string> failed_checks(const S& sys) {
    std::set<std::string> out;
    for (const auto& f : check_system_laws(sys).failures) out.insert(f.check);
    return out;
}

}  // namespace

TEST(SystemLaws, ClassicalWalkPasses) {
    Prob cat;
    auto S = z2_walk(cat, q(1, 3), 6);
    auto rep = check_system_laws(S);
    EXPECT_TRUE(rep.ok()) << format_text(rep);
    EXPECT_EQ(rep.cases, 7u);
    EXPECT_GT(rep.checks, 50u);
}

TEST(SystemLaws, GroupBialgebraPasses) {
    Qps cat;
    auto rep = check_system_laws(z2_bialgebra(cat, 6));
    EXPECT_TRUE(rep.ok()) << format_text(rep);
}

TEST(SystemLaws, CorruptedCoproductFailsWithWitness) {
    Prob cat;
    auto S = z2_walk(cat, q(1, 3), 4);
    // (x, y) -> x + y + 1 at one entry
    auto& d = S.coproducts.at({{1}, {2}});
    d.data[0] = 1;
    auto rep = check_system_laws(S);
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.failures[0].check, "coproduct-valid");
    EXPECT_EQ(rep.failures[0].witness, "(s,t)=(1,2)");

    Qps qc;
    auto B = z2_bialgebra(qc, 4);
    auto& img = B.coproducts.at({{1}, {1}}).data[0][0];
    img.begin()->second = 2;
    EXPECT_FALSE(check_system_laws(B).ok());
}

TEST(SystemLaws, CorruptedButValidCoproductBreaksCoassociativity) {
    Hilb cat;
    auto S = dimension_system(cat, 4);
    ASSERT_TRUE(check_system_laws(S).ok());
    // swap the two coordinates of C^2 = A_1 + A_1: still an isometry
    S.coproducts.at({{1}, {1}}).data = Matrix(2, 2, {0, 1, 1, 0});
    auto checks = failed_checks(S);
    EXPECT_EQ(checks.count("coproduct-valid"), 0u);
    EXPECT_EQ(checks.count("coassociativity"), 1u);
}

TEST(SystemLaws, WrongCounitFails) {
    Qps cat;
    auto m = Monoid::nat_add(3);
    Comultiplication bad = group_like(1);
    bad.counit[0] = 2;
    auto S = bialgebra_system(cat, m, monoid_window(m, 3), bad, [](const MonoidValue& t) { return z2_phi(t[0]); });
    EXPECT_FALSE(check_system_laws(S).ok());
}

TEST(SystemLaws, KindMismatchIsRejected) {
    Qps free_cat(ProductKind::Free);
    auto m = Monoid::nat_add(2);
    EXPECT_THROW(bialgebra_system(free_cat, m, monoid_window(m, 2), group_like(1),
                                  [](const MonoidValue& t) { return z2_phi(t[0]); }),
                 std::invalid_argument);
}

TEST(Semigroups, FairCoinIsIdempotent) {
    Prob cat;
    auto S = z2_walk(cat, q(1, 2), 5);
    EXPECT_TRUE(check_system_laws(S).ok());
    for (int t = 1; t <= 5; ++t) EXPECT_EQ(convolution_power({q(1, 2), q(1, 2)}, t), (std::vector<Rational>{q(1, 2), q(1, 2)}));
}

TEST(Semigroups, ConvolutionPowersMatchPathSums) {
    const std::vector<Rational> step{q(2, 3), q(1, 3)};
    EXPECT_EQ(convolution_power(step, 2)[0], q(5, 9));
    for (int t = 0; t <= 6; ++t) EXPECT_EQ(convolution_power(step, t), oracle::walk_law(step, t)) << t;
    const std::vector<Rational> z3{q(1, 2), q(1, 4), q(1, 4)};
    for (int t = 0; t <= 5; ++t) EXPECT_EQ(convolution_power(z3, t), oracle::walk_law(z3, t)) << t;
    Prob cat;
    EXPECT_TRUE(check_system_laws(z2_walk(cat, q(1, 3), 4)).ok());
}

TEST(Semigroups, NonSemigroupFamilyIsRejected) {
    Prob cat;
    auto m = Monoid::nat_add(4);
    auto S = group_walk_system(cat, m, monoid_window(m, 4), 2, [](const MonoidValue& t) {
        return t[0] == 2 ? std::vector<Rational>{q(1, 2), q(1, 2)} : convolution_power({q(2, 3), q(1, 3)}, t[0]);
    });
    auto rep = check_system_laws(S);
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.failures[0].witness, "(s,t)=(1,1)");
}

TEST(Restrict, DyadicToIntegers) {
    Prob cat;
    auto m = Monoid::dyadic_grid(1, 2);
    auto S = group_walk_system(cat, m, monoid_window(m, 4), 3, [](const MonoidValue& t) {
        return convolution_power({q(1, 2), q(1, 4), q(1, 4)}, t[0]);
    });
    ASSERT_TRUE(check_system_laws(S).ok());
    auto I = restrict(S, {m.from_int(0), m.from_int(1), m.from_int(2)});
    EXPECT_EQ(I.window.size(), 3u);
    EXPECT_TRUE(check_system_laws(I).ok());
    // A_1 carries two half steps
    EXPECT_EQ(cat.measure(I.object(m.from_int(1))), convolution_power({q(1, 2), q(1, 4), q(1, 4)}, 2));

    EXPECT_THROW(restrict(S, {m.from_int(0), m.parse("1/2")}), std::invalid_argument);
    EXPECT_THROW(restrict(S, {m.from_int(1)}), std::invalid_argument);
    EXPECT_THROW(restrict(S, {m.from_int(0), m.from_int(3)}), std::invalid_argument);
}

TEST(Restrict, UnitGivesComonoid) {
    Qps cat;
    auto S = z2_bialgebra(cat, 3);
    auto E = restrict(S, {{0}});
    ASSERT_EQ(E.window.size(), 1u);
    ASSERT_EQ(E.coproducts.size(), 1u);
    EXPECT_TRUE(E.coproducts.count({{0}, {0}}));
    EXPECT_TRUE(check_system_laws(E).ok());
}

TEST(Restrict, TwiceIsIntersection) {
    Prob cat;
    auto m = Monoid::dyadic_grid(1, 2);
    auto S = group_walk_system(cat, m, monoid_window(m, 4), 2,
                               [](const MonoidValue& t) { return convolution_power({q(2, 3), q(1, 3)}, t[0]); });
    auto twice = restrict(restrict(S, {m.from_int(0), m.from_int(1), m.from_int(2)}), {m.from_int(0), m.from_int(2)});
    auto once = restrict(S, {m.from_int(0), m.from_int(2)});
    EXPECT_EQ(twice.window, once.window);
    EXPECT_EQ(twice.objects, once.objects);
    EXPECT_EQ(twice.coproducts, once.coproducts);
}

TEST(Restrict, CommutesWithBuildingFromASpec) {
    auto spec = load_semigroup_spec(CATLEVY_DATA "/z2_walk.spec");
    Prob cat;
    auto S = spec_prob_system(spec, cat);
    std::vector<MonoidValue> evens{{0}, {2}, {4}, {6}};
    auto R = restrict(S, evens);
    spec.window = evens;
    auto T = spec_prob_system(spec, cat);
    EXPECT_EQ(R.window, T.window);
    EXPECT_EQ(R.objects, T.objects);
    EXPECT_EQ(R.coproducts, T.coproducts);
    EXPECT_EQ(R.counit, T.counit);
}

TEST(Functors, IdentityMapsToTheSameSystem) {
    Prob cat;
    auto S = z2_walk(cat, q(1, 3), 4);
    auto F = identity_functor(cat);
    auto M = map_system(F, S);
    EXPECT_EQ(M.objects, S.objects);
    EXPECT_EQ(M.coproducts, S.coproducts);
    EXPECT_EQ(M.counit, S.counit);
}

TEST(Functors, ForgettingTheInnerProduct) {
    Hilb h;
    Vec v;
    auto S = dimension_system(h, 5);
    auto F = forget_inner_product(h, v);
    auto M = map_system(F, S);
    EXPECT_TRUE(check_system_laws(M).ok());
    for (const auto& [st, d] : S.coproducts) EXPECT_EQ(M.delta(st.first, st.second).data, d.data);

    Rng rng(6);
    std::vector<Hilb::Obj> objs{h.unit()};
    std::vector<Hilb::Mor> mors;
    for (int i = 0; i < 3; ++i) objs.push_back(h.random_object(rng));
    for (const auto& a : objs) mors.push_back(h.random_morphism_from(a, rng));
    auto rep = check_functor_laws(F, objs, mors);
    EXPECT_TRUE(rep.ok()) << format_text(rep);
}

TEST(Functors, CompositeIsMappingTwice) {
    Hilb h;
    Vec v;
    auto S = dimension_system(h, 4);
    auto F = forget_inner_product(h, v);
    auto G = identity_functor(v);
    auto GF = compose_functors(G, F);
    auto once = map_system(GF, S);
    auto twice = map_system(G, map_system(F, S));
    EXPECT_EQ(once.objects, twice.objects);
    EXPECT_EQ(once.coproducts, twice.coproducts);
    EXPECT_EQ(once.counit, twice.counit);
    EXPECT_TRUE(check_system_laws(once).ok());
    EXPECT_TRUE(check_functor_laws(GF, {h.unit(), Hilb::space(1), Hilb::space(2)}, {}).ok());
}

TEST(Duality, TransposedCoproductsFormAMonoidalSystem) {
    Hilb h;
    HilbCo co;
    auto S = dimension_system(h, 4);
    auto rep = check_monoidal_laws(transpose_system(S, co));
    EXPECT_TRUE(rep.ok()) << format_text(rep);

    S.coproducts.at({{1}, {1}}).data = Matrix(2, 2, {0, 1, 1, 0});
    EXPECT_FALSE(check_system_laws(S).ok());
    EXPECT_FALSE(check_monoidal_laws(transpose_system(S, co)).ok());
}

TEST(SpecFiles, ParseClassicalWalk) {
    auto spec = load_semigroup_spec(CATLEVY_DATA "/z2_walk.spec");
    EXPECT_TRUE(spec.is_prob());
    EXPECT_EQ(spec.group_order, 2u);
    EXPECT_EQ(spec.horizon, 6);
    EXPECT_EQ(spec.window.size(), 7u);
    EXPECT_EQ(spec_law(spec, {2}), (std::vector<Rational>{q(5, 9), q(4, 9)}));
}

TEST(SpecFiles, ParseBialgebraAndFreeSystems) {
    auto spec = load_semigroup_spec(CATLEVY_DATA "/z2_bialgebra.spec");
    EXPECT_EQ(spec.product(), ProductKind::Tensor);
    EXPECT_EQ(spec_functional(spec, {3}), z2_phi(3));
    Qps cat(spec.product());
    EXPECT_TRUE(check_system_laws(spec_qps_system(spec, cat)).ok());

    auto fr = load_semigroup_spec(CATLEVY_DATA "/free_primitive.spec");
    EXPECT_EQ(fr.product(), ProductKind::Free);
    auto phi0 = spec_functional(fr, {0});
    EXPECT_EQ(phi0(ColoredWord(2, make_letter(0, 0))), 0);
    Qps fcat(fr.product());
    EXPECT_TRUE(check_system_laws(spec_qps_system(fr, fcat)).ok());
}

TEST(SpecFiles, DyadicWindowCountsHalfSteps) {
    auto spec = load_semigroup_spec(CATLEVY_DATA "/dyadic_walk.spec");
    EXPECT_EQ(spec.window.size(), 5u);
    EXPECT_EQ(spec_law(spec, spec.monoid.from_int(1)), convolution_power(spec.step_law, 2));
}

TEST(SpecFiles, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_semigroup_spec(in);
        } catch (const SpecError& e) {
            return e.line;
        }
        return -1;
    };
    const std::string head = "[monoid]\nkind = nat\nhorizon = 3\n[carrier]\ninstance = prob\ngroup = 2\n[delta]\nrule = add\n";
    EXPECT_EQ(line_of(head + "[phi]\nstep = 1/2 1/2\n"), -1);
    EXPECT_EQ(line_of(head + "[phi]\nstep = 1/2 1/3\n"), 10);
    EXPECT_EQ(line_of(head + "[phi]\nstep = 1/2\n"), 10);
    EXPECT_EQ(line_of(head + "[phi]\nstep = 1/2 1/2\nat 9 = 1 0\n"), 11);
    EXPECT_EQ(line_of("[monoid]\nkind = nat\nhorizon = 2\n"), 3);  // missing sections: reported at the end
    EXPECT_EQ(line_of("[monoid]\nkind = nat\nhorizon = x\n[carrier]\n[phi]\n"), 3);
    EXPECT_EQ(line_of("# comment\nkind = nat\n"), 2);
    EXPECT_EQ(line_of("[monoid\n"), 1);
}

TEST(SpecFiles, FunctionalFiles) {
    auto phi = load_functional(CATLEVY_DATA "/phi1.fun");
    EXPECT_EQ(phi.degree(), 4);
    EXPECT_EQ(phi(ColoredWord(4, make_letter(0, 0))), 14);
    std::istringstream missing("generators = a\ndegree = 2\na = 1\n");
    EXPECT_THROW(parse_functional(missing), SpecError);
    std::istringstream unknown("generators = a\ndegree = 1\nb = 1\n");
    try {
        parse_functional(unknown);
        FAIL();
    } catch (const SpecError& e) {
        EXPECT_EQ(e.line, 3);
    }
}
