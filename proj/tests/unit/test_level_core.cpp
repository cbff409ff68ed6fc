#include <doctest.h>

#include "gradual/level_set.hpp"
#include "gradual/step_map.hpp"

using namespace gradual;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(to_string(Rational(7, 18)) == "7/18");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("0.5x"), BadGrade);
    CHECK_THROWS_AS((void)Grade(Rational(3, 2)), BadGrade);
    CHECK_THROWS_AS((void)Level(Rational(0)), BadGrade);
}

TEST_CASE("interval pieces") {
    auto p = IntervalPiece::make(Rational(1, 3), Rational(1, 2), true, false);
    CHECK(p.contains(Rational(1, 3)));
    CHECK(p.contains(Rational(2, 5)));
    CHECK_FALSE(p.contains(Rational(1, 2)));
    CHECK(p.str() == "[1/3,1/2)");
    CHECK(IntervalPiece::singleton(Rational(1)).representative() == 1);
    CHECK(p.representative() == Rational(5, 12));
    CHECK_THROWS_AS(IntervalPiece::make(Rational(1, 2), Rational(1, 3), true, true), BadInterval);
    CHECK_THROWS_AS(IntervalPiece::make(Rational(0), Rational(1), true, true), BadInterval);
    CHECK_THROWS_AS(IntervalPiece::make(Rational(1, 2), Rational(2), true, true), BadInterval);

    auto q = IntervalPiece::make(Rational(2, 5), Rational(1), false, true);
    auto r = intersect_pieces(p, q);
    REQUIRE(r.has_value());
    CHECK(*r == IntervalPiece::make(Rational(2, 5), Rational(1, 2), false, false));
    CHECK_FALSE(intersect_pieces(IntervalPiece::singleton(Rational(1, 4)), q).has_value());
}

TEST_CASE("level sets: construction and validation") {
    // left-closed pieces and singletons are fine
    auto L = make_level_set({IntervalPiece::make(Rational(1, 10), Rational(1, 3), true, true),
                             IntervalPiece::make(Rational(1, 2), Rational(1), true, true)});
    CHECK(L.contains(Rational(1, 10)));
    CHECK_FALSE(L.contains(Rational(2, 5)));
    CHECK(L.contains(Rational(1)));

    // a left-open piece anchored at 0 still attains its clipped minima
    auto M = make_level_set({IntervalPiece::make(Rational(0), Rational(1, 2), false, true),
                             IntervalPiece::singleton(Rational(1))});
    CHECK(M.contains(Rational(1, 4)));

    // left-open elsewhere is rejected: the minimum over [alpha,1] would not exist
    CHECK_THROWS_AS(make_level_set({IntervalPiece::make(Rational(1, 4), Rational(1), false, true)}),
                    NotInfCompact);
    // 1 must belong
    CHECK_THROWS_AS(
        make_level_set({IntervalPiece::make(Rational(1, 4), Rational(1, 2), true, true)}),
        MissingOne);
    // overlaps are rejected
    CHECK_THROWS_AS(
        make_level_set({IntervalPiece::make(Rational(1, 4), Rational(1, 2), true, true),
                        IntervalPiece::make(Rational(1, 3), Rational(1), true, true)}),
        Overlap);
}

TEST_CASE("level sets: minima and clipping") {
    auto L = make_level_set({IntervalPiece::make(Rational(1, 10), Rational(1, 3), true, true),
                             IntervalPiece::make(Rational(1, 2), Rational(1), true, true)});
    CHECK(min_at_or_above(L, Rational(0)) == Rational(1, 10));
    CHECK(min_at_or_above(L, Rational(1, 10)) == Rational(1, 10));
    CHECK(min_at_or_above(L, Rational(1, 5)) == Rational(1, 5));
    CHECK(min_at_or_above(L, Rational(2, 5)) == Rational(1, 2));
    CHECK(min_at_or_above(L, Rational(1)) == Rational(1));

    auto C = clip_at_or_above(L, Rational(1, 4));
    CHECK(C == make_level_set({IntervalPiece::make(Rational(1, 4), Rational(1, 3), true, true),
                               IntervalPiece::make(Rational(1, 2), Rational(1), true, true)}));
    CHECK(clip_at_or_above(L, Rational(0)) == L);

    auto I = intersect_level_sets(
        L, make_level_set({IntervalPiece::make(Rational(1, 4), Rational(1), true, true)}));
    CHECK(I == make_level_set({IntervalPiece::make(Rational(1, 4), Rational(1, 3), true, true),
                               IntervalPiece::make(Rational(1, 2), Rational(1), true, true)}));
}

TEST_CASE("step maps: partition validation and canonical form") {
    using M = StepMap<int>;
    CHECK_THROWS_AS(make_step_map<int>({}), BadPartition);
    CHECK_THROWS_AS(
        make_step_map<int>({{IntervalPiece::make(Rational(0), Rational(1, 2), false, true), 1}}),
        BadPartition);
    CHECK_THROWS_AS(
        make_step_map<int>({{IntervalPiece::make(Rational(0), Rational(1, 2), false, true), 1},
                            {IntervalPiece::make(Rational(2, 3), Rational(1), true, true), 1}}),
        BadPartition);

    // equal adjacent values merge: the representation is canonical
    auto m = make_step_map<int>({{IntervalPiece::make(Rational(0), Rational(1, 2), false, true), 7},
                                 {IntervalPiece::make(Rational(1, 2), Rational(1), false, true), 7}});
    CHECK(m == M::constant(7));
    CHECK(m.pieces.size() == 1);

    auto n = make_step_map<int>({{IntervalPiece::make(Rational(0), Rational(1, 2), false, false), 1},
                                 {IntervalPiece::singleton(Rational(1, 2)), 2},
                                 {IntervalPiece::make(Rational(1, 2), Rational(1), false, true), 1}});
    CHECK(n.eval(Rational(1, 2)) == 2);
    CHECK(n.eval(Rational(1, 4)) == 1);
    CHECK(n.eval(Rational(1)) == 1);
    CHECK(n.pieces.size() == 3);
}

TEST_CASE("refined partitions cover (0,1] and respect the cuts") {
    auto pieces = refined_partition({Rational(1, 3), Rational(1, 2)});
    REQUIRE(pieces.size() == 6);
    CHECK(pieces[0] == IntervalPiece::make(Rational(0), Rational(1, 3), false, false));
    CHECK(pieces[1] == IntervalPiece::singleton(Rational(1, 3)));
    CHECK(pieces[2] == IntervalPiece::make(Rational(1, 3), Rational(1, 2), false, false));
    CHECK(pieces[3] == IntervalPiece::singleton(Rational(1, 2)));
    CHECK(pieces[4] == IntervalPiece::make(Rational(1, 2), Rational(1), false, false));
    CHECK(pieces[5] == IntervalPiece::singleton(Rational(1)));

    CHECK(refined_partition({}).size() == 2);
}

TEST_CASE("zip and transform work on refinements") {
    auto a = make_step_map<int>({{IntervalPiece::make(Rational(0), Rational(1, 3), false, true), 1},
                                 {IntervalPiece::make(Rational(1, 3), Rational(1), false, true), 2}});
    auto b = make_step_map<int>({{IntervalPiece::make(Rational(0), Rational(1, 2), false, true), 10},
                                 {IntervalPiece::make(Rational(1, 2), Rational(1), false, true), 20}});
    auto sum = step_zip(a, b, [](int x, int y) { return x + y; });
    CHECK(sum.eval(Rational(1, 4)) == 11);
    CHECK(sum.eval(Rational(1, 3)) == 11);
    CHECK(sum.eval(Rational(2, 5)) == 12);
    CHECK(sum.eval(Rational(1, 2)) == 12);
    CHECK(sum.eval(Rational(3, 4)) == 22);
    CHECK(sum.pieces.size() == 3);

    auto doubled = step_transform(a, [](int x) { return 2 * x; });
    CHECK(doubled.eval(Rational(1)) == 4);
    CHECK(doubled.eval(Rational(1, 3)) == 2);
}
