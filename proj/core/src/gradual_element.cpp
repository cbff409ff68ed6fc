#include "gradual/gradual_element.hpp"

#include <algorithm>

namespace gradual {

namespace {

void require_same_ground(const GroundSet& a, const GroundSet& b) {
    if (!(a == b)) throw GroundMismatch("ground sets differ");
}

// Sorted, disjoint pieces whose union (after chaining) must equal the target.
void require_partition_of(const std::vector<std::pair<IntervalPiece, int>>& values,
                          const LevelSet& domain) {
    std::vector<IntervalPiece> covered;
    for (const auto& [iv, v] : values) {
        (void)v;
        if (!covered.empty()) {
            const IntervalPiece& prev = covered.back();
            if (iv.lo < prev.hi || (iv.lo == prev.hi && prev.hi_closed && iv.lo_closed))
                throw Overlap("value pieces overlap at " + iv.str());
            if (detail::pieces_chain(prev, iv)) {
                covered.back().hi = iv.hi;
                covered.back().hi_closed = iv.hi_closed;
                continue;
            }
        }
        covered.push_back(iv);
    }
    if (covered != domain.pieces)
        throw BadPartition("values do not partition the domain");
}

std::vector<Rational> cuts_of_partial(const PartialGradualElement& e) {
    std::vector<Rational> cuts;
    for (const auto& p : e.domain.pieces) {
        if (p.lo > 0 && p.lo < 1) cuts.push_back(p.lo);
        if (p.hi < 1) cuts.push_back(p.hi);
    }
    for (const auto& [iv, v] : e.values) {
        (void)v;
        if (iv.lo > 0 && iv.lo < 1) cuts.push_back(iv.lo);
        if (iv.hi < 1) cuts.push_back(iv.hi);
    }
    sort_unique(cuts);
    return cuts;
}

} // namespace

int PartialGradualElement::value_at(const Rational& alpha) const {
    for (const auto& [iv, v] : values)
        if (iv.contains(alpha)) return v;
    throw BadPartition("level " + to_string(alpha) + " outside the domain");
}

PartialGradualElement make_partial_element(GroundSet ground, LevelSet domain,
                                           std::vector<std::pair<IntervalPiece, int>> values) {
    std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
        return a.first.lo < b.first.lo || (a.first.lo == b.first.lo && a.first.hi < b.first.hi);
    });
    require_partition_of(values, domain);
    for (const auto& [iv, v] : values) {
        (void)iv;
        if (v < 0 || static_cast<size_t>(v) >= ground.size())
            throw GroundMismatch("value index out of range");
    }
    return PartialGradualElement{std::move(ground), std::move(domain), std::move(values)};
}

PartialGradualElement as_partial(const TotalGradualElement& e) {
    LevelSet full{{IntervalPiece::full()}};
    std::vector<std::pair<IntervalPiece, int>> values;
    for (const auto& p : e.map.pieces) values.emplace_back(p.iv, p.value);
    return PartialGradualElement{e.ground, std::move(full), std::move(values)};
}

TotalGradualElement extend(const PartialGradualElement& e) {
    auto cuts = cuts_of_partial(e);
    auto map = build_step_map<int>(cuts, [&](const Rational& alpha) {
        return e.value_at(min_at_or_above(e.domain, alpha));
    });
    return TotalGradualElement{e.ground, std::move(map)};
}

std::vector<IntervalPiece> split_piece(const IntervalPiece& p, const std::vector<Rational>& cuts) {
    std::vector<IntervalPiece> out;
    Rational start = p.lo;
    bool start_closed = p.lo_closed;
    for (const auto& c : cuts) {
        if (!(c > p.lo && c < p.hi)) continue;
        if (start < c) out.push_back(IntervalPiece{start, c, start_closed, false});
        out.push_back(IntervalPiece::singleton(c));
        start = c;
        start_closed = false;
    }
    if (start < p.hi || (start == p.hi && start_closed))
        out.push_back(IntervalPiece{start, p.hi, start_closed, p.hi_closed});
    return out;
}

PartialGradualElement pointwise_op_partial(const PartialGradualElement& a,
                                           const PartialGradualElement& b,
                                           const std::function<int(int, int)>& op) {
    require_same_ground(a.ground, b.ground);
    LevelSet dom = intersect_level_sets(a.domain, b.domain);
    std::vector<Rational> cuts = cuts_of_partial(a);
    auto more = cuts_of_partial(b);
    cuts.insert(cuts.end(), more.begin(), more.end());
    sort_unique(cuts);
    std::vector<std::pair<IntervalPiece, int>> values;
    for (const auto& piece : dom.pieces)
        for (const auto& sub : split_piece(piece, cuts)) {
            const Rational x = sub.representative();
            values.emplace_back(sub, op(a.value_at(x), b.value_at(x)));
        }
    return make_partial_element(a.ground, std::move(dom), std::move(values));
}

TotalGradualElement pointwise_op(const TotalGradualElement& a, const TotalGradualElement& b,
                                 const std::function<int(int, int)>& op) {
    require_same_ground(a.ground, b.ground);
    return TotalGradualElement{a.ground, step_zip(a.map, b.map, op)};
}

bool r_alpha_equal(const PartialGradualElement& a, const PartialGradualElement& b,
                   const Rational& alpha) {
    if (!(a.ground == b.ground)) return false;
    LevelSet dom = clip_at_or_above(intersect_level_sets(a.domain, b.domain), alpha);
    std::vector<Rational> cuts = cuts_of_partial(a);
    auto more = cuts_of_partial(b);
    cuts.insert(cuts.end(), more.begin(), more.end());
    sort_unique(cuts);
    for (const auto& piece : dom.pieces)
        for (const auto& sub : split_piece(piece, cuts)) {
            const Rational x = sub.representative();
            if (a.value_at(x) != b.value_at(x)) return false;
        }
    return true;
}

RestrictedElement restrict_to(const TotalGradualElement& e, const Rational& alpha) {
    IntervalPiece window{alpha, Rational(1), true, true};
    if (alpha == 0) window = IntervalPiece::full();
    RestrictedElement r;
    for (const auto& p : e.map.pieces)
        if (auto iv = intersect_pieces(p.iv, window)) {
            if (!r.pieces.empty() && r.pieces.back().value == p.value &&
                detail::pieces_chain(r.pieces.back().iv, *iv)) {
                r.pieces.back().iv.hi = iv->hi;
                r.pieces.back().iv.hi_closed = iv->hi_closed;
            } else {
                r.pieces.push_back({*iv, p.value});
            }
        }
    return r;
}

bool r_alpha_equal(const TotalGradualElement& a, const TotalGradualElement& b,
                   const Rational& alpha) {
    if (!(a.ground == b.ground)) return false;
    return restrict_to(a, alpha) == restrict_to(b, alpha);
}

bool extension_homomorphism_gap(const PartialGradualElement& a, const PartialGradualElement& b,
                                const std::function<int(int, int)>& op) {
    TotalGradualElement lhs = extend(pointwise_op_partial(a, b, op));
    TotalGradualElement rhs = pointwise_op(extend(a), extend(b), op);
    return !(lhs == rhs);
}

bool in_filtration_subgroup(const TotalGradualElement& e, const Rational& alpha, int identity) {
    IntervalPiece window{alpha, Rational(1), true, true};
    if (alpha == 0) window = IntervalPiece::full();
    for (const auto& p : e.map.pieces)
        if (intersect_pieces(p.iv, window) && p.value != identity) return false;
    return true;
}

} // namespace gradual
