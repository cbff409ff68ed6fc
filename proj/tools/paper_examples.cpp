#include "paper_examples.hpp"

#include <sstream>

#include "gradual/fuzzy.hpp"
#include "gradual/gradual_element.hpp"
#include "gradual/gradual_subset.hpp"

namespace examples {

using namespace gradual;

namespace {

std::string int_map_str(const StepMap<int>& m) {
    std::ostringstream out;
    for (size_t i = 0; i < m.pieces.size(); ++i) {
        if (i) out << "; ";
        out << m.pieces[i].iv.str() << " -> " << m.pieces[i].value;
    }
    return out.str();
}

std::string set_str(const ElemSet& s, const GroundSet& g) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int x : members(s, g.size())) {
        if (!first) out << ",";
        out << g.names[static_cast<size_t>(x)];
        first = false;
    }
    out << "}";
    return out.str();
}

struct Checker {
    std::ostringstream table;
    bool ok = true;

    void line(const std::string& what, const std::string& expected, const std::string& got) {
        const bool match = expected == got;
        ok = ok && match;
        table << (match ? "  ok   " : "  FAIL ") << what << ": expected " << expected
              << ", got " << got << "\n";
    }
    void flag(const std::string& what, bool expected, bool got) {
        line(what, expected ? "true" : "false", got ? "true" : "false");
    }
};

StepMap<int> int_map(std::vector<StepMap<int>::Piece> pieces) {
    return make_step_map<int>(std::move(pieces));
}

Block block_integer_extension() {
    Checker c;
    // ground elements are the integers 0..4 by index
    GroundSet X({"0", "1", "2", "3", "4"});
    auto plus = [](int a, int b) { return a + b; };

    const Rational tenth(1, 10), third(1, 3), half(1, 2), two_thirds(2, 3);
    PartialGradualElement e1 = make_partial_element(
        X,
        make_level_set({IntervalPiece::make(tenth, third, true, true),
                        IntervalPiece::make(half, 1, true, true)}),
        {{IntervalPiece::make(tenth, third, true, true), 1},
         {IntervalPiece::make(half, 1, true, true), 2}});
    PartialGradualElement e2 = make_partial_element(
        X, make_level_set({IntervalPiece::make(two_thirds, 1, true, true)}),
        {{IntervalPiece::make(two_thirds, 1, true, true), 2}});

    TotalGradualElement e1bar = extend(e1);
    TotalGradualElement e2bar = extend(e2);
    c.line("extension of the first element",
           int_map_str(int_map({{IntervalPiece::make(0, third, false, true), 1},
                                {IntervalPiece::make(third, 1, false, true), 2}})),
           int_map_str(e1bar.map));
    c.line("extension of the second element", int_map_str(StepMap<int>::constant(2)),
           int_map_str(e2bar.map));

    TotalGradualElement sum_then_extend = extend(pointwise_op_partial(e1, e2, plus));
    c.line("extension of the sum", int_map_str(StepMap<int>::constant(4)),
           int_map_str(sum_then_extend.map));

    TotalGradualElement extend_then_sum = pointwise_op(e1bar, e2bar, plus);
    c.line("sum of the extensions",
           int_map_str(int_map({{IntervalPiece::make(0, third, false, true), 3},
                                {IntervalPiece::make(third, 1, false, true), 4}})),
           int_map_str(extend_then_sum.map));

    c.flag("extension does not commute with +", true, extension_homomorphism_gap(e1, e2, plus));
    return Block{"integer-extension", c.ok, c.table.str()};
}

Block block_two_point_agreement() {
    Checker c;
    GroundSet X({"a", "b"});
    const int a = 0, b = 1;
    const Rational half(1, 2);

    PartialGradualElement e1 = make_partial_element(
        X, make_level_set({IntervalPiece::make(half, 1, true, true)}),
        {{IntervalPiece::make(half, 1, true, false), a}, {IntervalPiece::singleton(1), b}});
    PartialGradualElement e2 = make_partial_element(
        X,
        make_level_set({IntervalPiece::make(0, half, false, true), IntervalPiece::singleton(1)}),
        {{IntervalPiece::make(0, half, false, true), a}, {IntervalPiece::singleton(1), b}});

    for (const Rational& alpha :
         {Rational(0), Rational(1, 10), half, Rational(3, 4), Rational(1)})
        c.flag("agreement of the partial elements above " + to_string(alpha), true,
               r_alpha_equal(e1, e2, alpha));

    TotalGradualElement e1bar = extend(e1);
    TotalGradualElement e2bar = extend(e2);
    c.line("extension of the first element",
           int_map_str(int_map({{IntervalPiece::make(0, 1, false, false), a},
                                {IntervalPiece::singleton(1), b}})),
           int_map_str(e1bar.map));
    c.line("extension of the second element",
           int_map_str(int_map({{IntervalPiece::make(0, half, false, true), a},
                                {IntervalPiece::make(half, 1, false, true), b}})),
           int_map_str(e2bar.map));

    for (const Rational& alpha : {Rational(0), Rational(1, 10), half, Rational(3, 4)})
        c.flag("agreement of the extensions above " + to_string(alpha), false,
               r_alpha_equal(e1bar, e2bar, alpha));
    c.flag("agreement of the extensions above 1", true, r_alpha_equal(e1bar, e2bar, Rational(1)));
    return Block{"two-point-agreement", c.ok, c.table.str()};
}

Block block_ascending_family() {
    Checker c;
    FamilyGapReport rep = counterexample_ascending(6);
    const GroundSet& X = rep.family.ground;
    c.line("level of the limit map at 1/2", "{a,b}", set_str(rep.limit_at_half, X));
    c.line("level of the finite union at 1/2", "{a}", set_str(rep.finite_at_half, X));
    c.flag("finite union strictly below the limit", true, rep.proper);
    c.flag("strong-level union closes the gap", true, rep.dual_side_closes_gap);
    c.line("exact infinite union at 1/2", "{a}",
           set_str(rep.symbolic_combo.at(Rational(1, 2)), X));
    return Block{"ascending-family", c.ok, c.table.str()};
}

Block block_descending_family() {
    Checker c;
    FamilyGapReport rep = counterexample_descending(6);
    const GroundSet& X = rep.family.ground;
    c.line("strong level of the limit map at 1/2", "{a}", set_str(rep.limit_at_half, X));
    c.line("finite intersection at 1/2", "{a,b}", set_str(rep.finite_at_half, X));
    c.flag("limit strictly below the finite intersection", true, rep.proper);
    c.flag("interior of the exact intersection closes the gap", true, rep.dual_side_closes_gap);
    c.line("exact infinite intersection at 1/2", "{a,b}",
           set_str(rep.symbolic_combo.at(Rational(1, 2)), X));
    return Block{"descending-family", c.ok, c.table.str()};
}

} // namespace

std::vector<Block> run_blocks() {
    return {block_integer_extension(), block_two_point_agreement(), block_ascending_family(),
            block_descending_family()};
}

bool all_ok(const std::vector<Block>& blocks) {
    for (const auto& b : blocks)
        if (!b.ok) return false;
    return true;
}

} // namespace examples
