#include "gradual/level_set.hpp"

#include <algorithm>

namespace gradual {

std::optional<IntervalPiece> intersect_pieces(const IntervalPiece& a, const IntervalPiece& b) {
    IntervalPiece r;
    r.lo = std::max(a.lo, b.lo);
    r.hi = std::min(a.hi, b.hi);
    r.lo_closed = (r.lo > a.lo || a.lo_closed) && (r.lo > b.lo || b.lo_closed);
    r.hi_closed = (r.hi < a.hi || a.hi_closed) && (r.hi < b.hi || b.hi_closed);
    if (r.lo > r.hi || (r.lo == r.hi && !(r.lo_closed && r.hi_closed)))
        return std::nullopt;
    return r;
}

std::string LevelSet::str() const {
    std::string s;
    for (const auto& p : pieces) {
        if (!s.empty()) s += " ∪ ";
        s += p.str();
    }
    return s.empty() ? "∅" : s;
}

LevelSet make_level_set(std::vector<IntervalPiece> pieces) {
    for (const auto& p : pieces) {
        if (p.lo > p.hi || (p.lo == p.hi && !(p.lo_closed && p.hi_closed)) || p.lo < 0 ||
            p.hi > 1 || (p.lo == 0 && p.lo_closed))
            throw BadInterval("bad piece " + p.str());
        // A left-open piece has an unattained infimum unless it opens at 0,
        // where (0,b] still admits Min([alpha,1] ∩ ·) = alpha for alpha <= b.
        if (!p.is_singleton() && !p.lo_closed && p.lo > 0)
            throw NotInfCompact("left-open non-singleton piece " + p.str());
    }
    std::sort(pieces.begin(), pieces.end(), [](const IntervalPiece& a, const IntervalPiece& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    // Check disjointness, then merge touching neighbours such as [a,b) + [b,c].
    std::vector<IntervalPiece> merged;
    for (auto& p : pieces) {
        if (!merged.empty()) {
            IntervalPiece& q = merged.back();
            if (p.lo < q.hi || (p.lo == q.hi && q.hi_closed && p.lo_closed))
                throw Overlap("pieces overlap: " + q.str() + " and " + p.str());
            if (p.lo == q.hi && (q.hi_closed || p.lo_closed)) {
                q.hi = p.hi;
                q.hi_closed = p.hi_closed;
                continue;
            }
        }
        merged.push_back(p);
    }
    LevelSet L{std::move(merged)};
    if (!L.contains(Rational(1)))
        throw MissingOne("level set must contain 1: " + L.str());
    return L;
}

Rational min_at_or_above(const LevelSet& L, const Rational& alpha) {
    for (const auto& p : L.pieces) {
        if (p.hi < alpha || (p.hi == alpha && !p.hi_closed)) continue;
        // p has points >= alpha; its minimum such point is attained because
        // every non-singleton piece is left-closed.
        if (alpha <= p.lo) return p.lo;
        return alpha; // lo < alpha <= hi, and alpha < hi or hi closed, so alpha ∈ p
    }
    throw MissingOne("level set without 1 in min_at_or_above");
}

LevelSet intersect_level_sets(const LevelSet& a, const LevelSet& b) {
    std::vector<IntervalPiece> out;
    for (const auto& p : a.pieces)
        for (const auto& q : b.pieces)
            if (auto r = intersect_pieces(p, q)) out.push_back(*r);
    return make_level_set(std::move(out));
}

LevelSet clip_at_or_above(const LevelSet& L, const Rational& alpha) {
    if (alpha <= 0) return L;
    LevelSet window{{IntervalPiece{alpha, Rational(1), true, true}}};
    return intersect_level_sets(L, window);
}

} // namespace gradual
