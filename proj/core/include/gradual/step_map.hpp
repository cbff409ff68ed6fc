#ifndef GRADUAL_STEP_MAP_HPP
#define GRADUAL_STEP_MAP_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "gradual/level_set.hpp"

namespace gradual {

// Piecewise-constant total map (0,1] -> V, held in canonical form: adjacent
// pieces never carry equal values, so operator== is semantic equality.
template <class V>
struct StepMap {
    struct Piece {
        IntervalPiece iv;
        V value;
        bool operator==(const Piece& o) const { return iv == o.iv && value == o.value; }
    };

    std::vector<Piece> pieces; // ascending partition of (0,1]

    bool operator==(const StepMap& o) const { return pieces == o.pieces; }

    const V& eval(const Rational& alpha) const {
        for (const auto& p : pieces)
            if (p.iv.contains(alpha)) return p.value;
        throw BadPartition("step map does not cover " + to_string(alpha));
    }

    static StepMap constant(V v) {
        StepMap s;
        s.pieces.push_back(Piece{IntervalPiece::full(), std::move(v)});
        return s;
    }
};

namespace detail {

// Two pieces merge when they touch with complementary openness at the shared
// boundary, i.e. their union is again an interval.
inline bool pieces_chain(const IntervalPiece& a, const IntervalPiece& b) {
    return a.hi == b.lo && (a.hi_closed != b.lo_closed);
}

} // namespace detail

template <class V>
void canonicalize_in_place(StepMap<V>& s) {
    std::vector<typename StepMap<V>::Piece> out;
    for (auto& p : s.pieces) {
        if (!out.empty() && out.back().value == p.value && detail::pieces_chain(out.back().iv, p.iv)) {
            out.back().iv.hi = p.iv.hi;
            out.back().iv.hi_closed = p.iv.hi_closed;
        } else {
            out.push_back(std::move(p));
        }
    }
    s.pieces = std::move(out);
}

// Validates that the pieces are an ascending partition of (0,1], then merges.
template <class V>
StepMap<V> make_step_map(std::vector<typename StepMap<V>::Piece> pieces) {
    if (pieces.empty()) throw BadPartition("no pieces");
    if (!(pieces.front().iv.lo == 0) || pieces.front().iv.lo_closed)
        throw BadPartition("partition must start open at 0");
    if (!(pieces.back().iv.hi == 1) || !pieces.back().iv.hi_closed)
        throw BadPartition("partition must end closed at 1");
    for (size_t i = 0; i + 1 < pieces.size(); ++i)
        if (!detail::pieces_chain(pieces[i].iv, pieces[i + 1].iv))
            throw BadPartition("gap or overlap at " + pieces[i].iv.str() + " / " +
                               pieces[i + 1].iv.str());
    StepMap<V> s{std::move(pieces)};
    canonicalize_in_place(s);
    return s;
}

// Interior cut points of a step map: the piece boundaries strictly inside (0,1).
template <class V>
void collect_cuts(const StepMap<V>& s, std::vector<Rational>& out) {
    for (const auto& p : s.pieces) {
        if (p.iv.lo > 0 && p.iv.lo < 1) out.push_back(p.iv.lo);
        if (p.iv.hi < 1) out.push_back(p.iv.hi);
    }
}

inline void sort_unique(std::vector<Rational>& cuts) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
}

// Decomposes (0,1] at the given cuts (sorted, unique, inside (0,1)) into
// alternating open intervals and singletons:
//   (0,c1) [c1] (c1,c2) [c2] ... (ck,1) [1]
// Any step map whose cuts are included is constant on each returned piece.
std::vector<IntervalPiece> refined_partition(const std::vector<Rational>& cuts);

template <class V, class F>
StepMap<V> build_step_map(const std::vector<Rational>& cuts, F&& value_at) {
    std::vector<typename StepMap<V>::Piece> pieces;
    for (const auto& iv : refined_partition(cuts))
        pieces.push_back({iv, value_at(iv.representative())});
    return make_step_map<V>(std::move(pieces));
}

template <class V, class W, class F>
auto step_zip(const StepMap<V>& a, const StepMap<W>& b, F&& f)
    -> StepMap<decltype(f(a.pieces.front().value, b.pieces.front().value))> {
    using U = decltype(f(a.pieces.front().value, b.pieces.front().value));
    std::vector<Rational> cuts;
    collect_cuts(a, cuts);
    collect_cuts(b, cuts);
    sort_unique(cuts);
    return build_step_map<U>(cuts, [&](const Rational& x) { return f(a.eval(x), b.eval(x)); });
}

// Rebuilds a map on a refinement of its own partition; useful for per-piece
// transformations that need exact boundary handling.
template <class V, class F>
auto step_transform(const StepMap<V>& s, F&& f) -> StepMap<decltype(f(s.pieces.front().value))> {
    using U = decltype(f(s.pieces.front().value));
    std::vector<typename StepMap<U>::Piece> pieces;
    for (const auto& p : s.pieces)
        pieces.push_back({p.iv, f(p.value)});
    return make_step_map<U>(std::move(pieces));
}

} // namespace gradual

#endif
