#include <doctest.h>

#include "gradual/gradual_group.hpp"

using namespace gradual;

namespace {

const Rational half(1, 2);
const Rational third(1, 3);

FiniteGroup s3() { return FiniteGroup::symmetric(3); }

ElemSet alternating(const FiniteGroup& G) {
    ElemSet a;
    for (int g = 0; g < G.order(); ++g)
        if (g == G.identity() || subgroup_generated(G, elemset_of({g})).count() == 3)
            a.set(static_cast<size_t>(g));
    return a;
}

ElemSet some_order2(const FiniteGroup& G) {
    for (const auto& H : all_subgroups(G))
        if (H.count() == 2) return H;
    return ElemSet{};
}

// full group up to `cut`, subgroup H above it
GradualSubgroup two_level(const FiniteGroup& G, const ElemSet& H, const Rational& cut) {
    return make_gradual_subgroup(
        G, make_step_map<ElemSet>({{IntervalPiece::make(Rational(0), cut, false, true), G.ground().all()},
                                   {IntervalPiece::make(cut, Rational(1), false, true), H}}));
}

} // namespace

TEST_CASE("level values must be subgroups") {
    FiniteGroup G = s3();
    CHECK_THROWS_AS(constant_subgroup(G, ElemSet{}), EmptyLevelValue);
    ElemSet not_subgroup = elemset_of({G.identity(), 1, 2});
    if (!is_subgroup(G, not_subgroup))
        CHECK_THROWS_AS(constant_subgroup(G, not_subgroup), NotFuzzySubgroup);
    CHECK(is_gradual_subgroup(G, two_level(G, alternating(G), half).as_subset()));
    GradualSubset plain = constant_subset(G.ground(), elemset_of({1}));
    if (!is_subgroup(G, elemset_of({1}))) CHECK_FALSE(is_gradual_subgroup(G, plain));
}

TEST_CASE("generation from graded elements") {
    FiniteGroup G = s3();
    const int t = members(some_order2(G), 6)[1]; // a transposition
    TotalGradualElement e{
        G.ground(), make_step_map<int>({{IntervalPiece::make(Rational(0), half, false, true), t},
                                        {IntervalPiece::make(half, Rational(1), false, true),
                                         G.identity()}})};
    GradualSubgroup sg = generated_by(G, {e});
    CHECK(sg.at(Rational(1, 4)) == subgroup_generated(G, elemset_of({t})));
    CHECK(sg.at(Rational(1)) == elemset_of({G.identity()}));
    CHECK(element_belongs(e, sg.as_subset()));
}

TEST_CASE("closure and interior stay subgroup-valued") {
    FiniteGroup G = s3();
    // a map whose plain closure values are not subgroups: two different
    // order-2 subgroups on adjacent pieces
    std::vector<ElemSet> order2;
    for (const auto& H : all_subgroups(G))
        if (H.count() == 2) order2.push_back(H);
    REQUIRE(order2.size() == 3);
    GradualSubgroup sg = make_gradual_subgroup(
        G, make_step_map<ElemSet>({{IntervalPiece::make(Rational(0), half, false, true), order2[0]},
                                   {IntervalPiece::make(half, Rational(1), false, true), order2[1]}}));
    GradualSubgroup c = closure_c_group(sg);
    CHECK(c.at(Rational(1, 4)) == subgroup_generated(G, order2[0] | order2[1]));
    CHECK(c.at(Rational(1)) == order2[1]);
    CHECK(is_decreasing_group(c));
    CHECK(closure_c_group(c) == c);

    GradualSubgroup d = interior_d_group(c);
    CHECK(is_strict_decreasing_group(d));
    CHECK(interior_d_group(d) == d);
    CHECK(is_subset(d.as_subset(), c.as_subset()));
}

TEST_CASE("products of gradual subgroups") {
    FiniteGroup G = s3();
    GradualSubgroup a = two_level(G, alternating(G), half);      // normal levels
    GradualSubgroup b = two_level(G, some_order2(G), third);
    GradualProduct p = product_gradual(a, b);
    // one factor normal at every level: the setwise product is a subgroup
    CHECK(p.subgroup.has_value());
    CHECK(p.subset.at(Rational(1)) == setwise_product(G, alternating(G), some_order2(G)));
    CHECK(p.subset.at(Rational(1)).count() == 6);

    // the bracketed law holds with no normality at all
    GradualSubgroup h1 = two_level(G, some_order2(G), half);
    CHECK_NOTHROW(langle_product_c(h1, b));
}

TEST_CASE("quotients levelwise and their kernels") {
    FiniteGroup G = s3();
    GradualSubgroup a = two_level(G, alternating(G), half);
    CHECK(is_normal_gradual(a));
    GradualQuotientGroup q = quotient_gradual(a);
    CHECK(q.levels.eval(Rational(1, 4)).group.order() == 1);
    CHECK(q.levels.eval(Rational(1)).group.order() == 2);
    CHECK(kernel_of(q) == a);

    GradualSubgroup bad = two_level(G, some_order2(G), half);
    CHECK_FALSE(is_normal_gradual(bad));
    CHECK_THROWS_AS(quotient_gradual(bad), NotNormal);
}

TEST_CASE("comparison maps between quotients") {
    FiniteGroup G = FiniteGroup::cyclic(12);
    ElemSet four = subgroup_generated(G, elemset_of({4}));  // {0,4,8}
    ElemSet two = subgroup_generated(G, elemset_of({2}));   // even residues
    GradualSubgroup small = two_level(G, four, half);
    GradualSubgroup big = two_level(G, two, half);
    auto homs = comparison_homs(small, big);
    for (const auto& piece : homs.pieces) {
        const ComparisonPiece& cp = piece.value;
        // h is a homomorphism compatible with both projections
        for (int g = 0; g < G.order(); ++g)
            CHECK(cp.h[static_cast<size_t>(cp.q1.projection[static_cast<size_t>(g)])] ==
                  cp.q2.projection[static_cast<size_t>(g)]);
    }
    CHECK(homs.eval(Rational(1)).q1.group.order() == 4);
    CHECK(homs.eval(Rational(1)).q2.group.order() == 2);
    CHECK_THROWS_AS(comparison_homs(big, small), NotIncluded);
}

TEST_CASE("fuzzy subgroup recognition") {
    FiniteGroup G = s3();
    std::vector<Rational> grades(6, third);
    for (int x : members(alternating(G), 6)) grades[static_cast<size_t>(x)] = half;
    grades[static_cast<size_t>(G.identity())] = Rational(1);
    FuzzySubset mu = make_fuzzy_subset(G.ground(), grades);
    CHECK(is_fuzzy_subgroup(G, mu));
    CHECK_FALSE(fuzzy_subgroup_violation(G, mu).has_value());
    CHECK(is_normal_fuzzy(G, mu)); // grades constant on conjugacy classes here

    // grade above the identity on a non-closed set breaks the inequality
    std::vector<Rational> badg(6, Rational(0));
    badg[static_cast<size_t>(members(some_order2(G), 6)[1])] = Rational(1);
    FuzzySubset bad = make_fuzzy_subset(G.ground(), badg);
    auto v = fuzzy_subgroup_violation(G, bad);
    REQUIRE(v.has_value());
    CHECK_FALSE(is_fuzzy_subgroup(G, bad));
    CHECK_THROWS_AS(normalize_mu1(G, bad), NotFuzzySubgroup);

    // constant zero is excluded
    CHECK_FALSE(is_fuzzy_subgroup(G, make_fuzzy_subset(G.ground(), std::vector<Rational>(6, Rational(0)))));
}

TEST_CASE("classes and their products") {
    FiniteGroup G = s3();
    std::vector<Rational> g1(6, Rational(0)), g2(6, Rational(0));
    for (int x : members(alternating(G), 6)) g1[static_cast<size_t>(x)] = half;
    g1[static_cast<size_t>(G.identity())] = Rational(3, 4);
    for (int x : members(some_order2(G), 6)) g2[static_cast<size_t>(x)] = third;

    FuzzySubgroupClass c1 = normalize_mu1(G, make_fuzzy_subset(G.ground(), g1));
    CHECK(c1.rep.grade(G.identity()) == Rational(1));
    FuzzySubgroupClass c2 = normalize_mu1(G, make_fuzzy_subset(G.ground(), g2));
    CHECK(classes_equal(c1, c1));
    CHECK_FALSE(classes_equal(c1, c2));

    ClassProduct prod = class_product(c1, c2);
    CHECK(prod.product.grade(G.identity()) == Rational(1));
    REQUIRE(prod.as_class.has_value());
    // the convolution is the levelwise product on strong levels
    CHECK(nu_tilde_group(*prod.as_class).as_subset() ==
          product_gradual(nu_tilde_group(c1), nu_tilde_group(c2)).subset);
}

TEST_CASE("subgroup-level correspondences round-trip") {
    FiniteGroup G = s3();
    std::vector<Rational> g1(6, Rational(1, 8));
    for (int x : members(alternating(G), 6)) g1[static_cast<size_t>(x)] = half;
    g1[static_cast<size_t>(G.identity())] = Rational(1);
    FuzzySubgroupClass c = normalize_mu1(G, make_fuzzy_subset(G.ground(), g1));

    GradualSubgroup lv = nu_group(c);
    CHECK(upsilon_group(lv).rep == c.rep);
    GradualSubgroup sv = nu_tilde_group(c);
    CHECK(upsilon_tilde_group(sv).rep == c.rep);
    CHECK(sv.as_subset() == interior_d(lv.as_subset()));

    // normality transfer
    CHECK(is_normal_fuzzy(G, c.rep) == is_normal_gradual(sv));
}

TEST_CASE("fractions and images") {
    FiniteGroup G = s3();
    GradualSubgroup a = two_level(G, alternating(G), half);
    GradualSubgroup b = two_level(G, some_order2(G), third);
    auto fr = fraction(a, b);
    // at the top: A3 * {e,t} = S3, so (A3 B)/A3 is the whole 2-element quotient
    CHECK(fr.eval(Rational(1)).quotient.group.order() == 2);
    CHECK(fr.eval(Rational(1)).value.count() == 2);
    // low levels: both factors are everything, G/G is trivial
    CHECK(fr.eval(Rational(1, 4)).quotient.group.order() == 1);

    FiniteGroup z6 = FiniteGroup::cyclic(6);
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    GroupHom f = make_group_hom(z6, z3, {0, 1, 2, 0, 1, 2});
    GradualSubgroup s = two_level(z6, subgroup_generated(z6, elemset_of({3})), half);
    GradualSubgroup img = image_subgroup(f, s);
    CHECK(img.at(Rational(1)) == elemset_of({0}));
    CHECK(img.at(Rational(1, 4)) == z3.ground().all());
    GradualSubgroup pre = preimage_subgroup(f, img);
    CHECK(pre.at(Rational(1)) == elemset_of({0, 3}));
}
