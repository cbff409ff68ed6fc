#ifndef GRADUAL_LEVEL_SET_HPP
#define GRADUAL_LEVEL_SET_HPP

#include <optional>
#include <string>
#include <vector>

#include "gradual/rational.hpp"

namespace gradual {

// One interval inside (0,1], with explicit endpoint openness.
struct IntervalPiece {
    Rational lo{0};
    Rational hi{1};
    bool lo_closed{false};
    bool hi_closed{true};

    bool operator==(const IntervalPiece& o) const {
        return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed && hi_closed == o.hi_closed;
    }

    bool is_singleton() const { return lo == hi; }

    bool contains(const Rational& a) const {
        if (a < lo || a > hi) return false;
        if (a == lo && !lo_closed) return false;
        if (a == hi && !hi_closed) return false;
        return true;
    }

    // A point of the piece at which any step map with no cut strictly inside
    // the piece is constant.
    Rational representative() const {
        if (is_singleton()) return lo;
        return (lo + hi) / 2;
    }

    std::string str() const {
        return std::string(lo_closed ? "[" : "(") + to_string(lo) + "," + to_string(hi) +
               (hi_closed ? "]" : ")");
    }

    static IntervalPiece full() { return IntervalPiece{Rational(0), Rational(1), false, true}; }

    static IntervalPiece singleton(Rational a) { return IntervalPiece{a, a, true, true}; }

    static IntervalPiece make(Rational lo, Rational hi, bool lo_closed, bool hi_closed) {
        IntervalPiece p{std::move(lo), std::move(hi), lo_closed, hi_closed};
        if (p.lo > p.hi || (p.lo == p.hi && !(p.lo_closed && p.hi_closed)))
            throw BadInterval("empty or inverted interval " + p.str());
        if (p.lo < 0 || p.hi > 1 || (p.lo == 0 && p.lo_closed))
            throw BadInterval("interval not inside (0,1]: " + p.str());
        return p;
    }
};

// [max(lo),min(hi)] with the tighter openness; empty intersections yield nullopt.
std::optional<IntervalPiece> intersect_pieces(const IntervalPiece& a, const IntervalPiece& b);

// Canonical inf-compact subset of (0,1] containing 1: a finite union of
// singletons and left-closed intervals, sorted, disjoint, non-adjacent.
struct LevelSet {
    std::vector<IntervalPiece> pieces;

    bool operator==(const LevelSet& o) const { return pieces == o.pieces; }

    bool contains(const Rational& a) const {
        for (const auto& p : pieces)
            if (p.contains(a)) return true;
        return false;
    }

    std::string str() const;
};

LevelSet make_level_set(std::vector<IntervalPiece> pieces);

// Min([alpha,1] ∩ L); total because L is inf-compact and contains 1.
Rational min_at_or_above(const LevelSet& L, const Rational& alpha);

LevelSet intersect_level_sets(const LevelSet& a, const LevelSet& b);

// [alpha,1] ∩ L as a LevelSet (alpha may be 0, meaning no clipping).
LevelSet clip_at_or_above(const LevelSet& L, const Rational& alpha);

} // namespace gradual

#endif
