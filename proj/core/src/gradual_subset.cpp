#include "gradual/gradual_subset.hpp"

#include <algorithm>

namespace gradual {

namespace {

void require_same_ground(const GroundSet& a, const GroundSet& b) {
    if (!(a == b)) throw GroundMismatch("ground sets differ");
}

std::vector<Rational> cuts_of(const GradualSubset& s) {
    std::vector<Rational> cuts;
    collect_cuts(s.map, cuts);
    sort_unique(cuts);
    return cuts;
}

// Union of the values of all pieces containing some point > alpha.
ElemSet upper_union(const StepMap<ElemSet>& m, const Rational& alpha) {
    ElemSet u;
    for (const auto& p : m.pieces)
        if (p.iv.hi > alpha) u |= p.value;
    return u;
}

// Union of the values of all pieces containing some point >= alpha.
ElemSet at_or_upper_union(const StepMap<ElemSet>& m, const Rational& alpha) {
    ElemSet u;
    for (const auto& p : m.pieces)
        if (p.iv.hi > alpha || (p.iv.hi == alpha && p.iv.hi_closed)) u |= p.value;
    return u;
}

} // namespace

GradualSubset constant_subset(GroundSet ground, ElemSet value) {
    return GradualSubset{std::move(ground), StepMap<ElemSet>::constant(value)};
}

bool MembershipProfile::covers_all() const {
    return pieces.size() == 1 && pieces.front() == IntervalPiece::full();
}

MembershipProfile membership_profile(const GradualSubset& s, int x) {
    MembershipProfile prof;
    prof.element = x;
    for (const auto& p : s.map.pieces) {
        if (!p.value.test(static_cast<size_t>(x))) continue;
        if (!prof.pieces.empty() && detail::pieces_chain(prof.pieces.back(), p.iv)) {
            prof.pieces.back().hi = p.iv.hi;
            prof.pieces.back().hi_closed = p.iv.hi_closed;
        } else {
            prof.pieces.push_back(p.iv);
        }
    }
    return prof;
}

ElemSet overall_union(const GradualSubset& s) {
    ElemSet u;
    for (const auto& p : s.map.pieces) u |= p.value;
    return u;
}

bool is_subset(const GradualSubset& a, const GradualSubset& b) {
    require_same_ground(a.ground, b.ground);
    std::vector<Rational> cuts = cuts_of(a);
    collect_cuts(b.map, cuts);
    sort_unique(cuts);
    for (const auto& iv : refined_partition(cuts))
        if (!subset_of(a.at(iv.representative()), b.at(iv.representative()))) return false;
    return true;
}

bool is_decreasing(const GradualSubset& s) {
    // Canonical pieces ascend; decreasing means values shrink left to right.
    for (size_t i = 0; i + 1 < s.map.pieces.size(); ++i)
        if (!subset_of(s.map.pieces[i + 1].value, s.map.pieces[i].value)) return false;
    return true;
}

bool is_strict_decreasing(const GradualSubset& s) { return s == interior_d(s); }

GradualSubset closure_c(const GradualSubset& s) {
    auto map = build_step_map<ElemSet>(cuts_of(s), [&](const Rational& alpha) {
        return at_or_upper_union(s.map, alpha);
    });
    return GradualSubset{s.ground, std::move(map)};
}

GradualSubset interior_d(const GradualSubset& s) {
    auto map = build_step_map<ElemSet>(cuts_of(s), [&](const Rational& alpha) {
        if (alpha == 1) return s.at(alpha);
        return upper_union(s.map, alpha);
    });
    return GradualSubset{s.ground, std::move(map)};
}

namespace {

GradualSubset fold_family(const std::vector<GradualSubset>& family, bool take_union) {
    if (family.empty()) throw EmptyFamily();
    for (const auto& s : family) require_same_ground(family.front().ground, s.ground);
    std::vector<Rational> cuts;
    for (const auto& s : family) collect_cuts(s.map, cuts);
    sort_unique(cuts);
    auto map = build_step_map<ElemSet>(cuts, [&](const Rational& alpha) {
        ElemSet acc = family.front().at(alpha);
        for (size_t i = 1; i < family.size(); ++i)
            acc = take_union ? (acc | family[i].at(alpha)) : (acc & family[i].at(alpha));
        return acc;
    });
    return GradualSubset{family.front().ground, std::move(map)};
}

} // namespace

GradualSubset subset_union(const std::vector<GradualSubset>& family) {
    return fold_family(family, true);
}

GradualSubset subset_intersection(const std::vector<GradualSubset>& family) {
    return fold_family(family, false);
}

GradualSubset modified_intersection(const std::vector<GradualSubset>& family) {
    if (family.empty()) throw EmptyFamily();
    for (const auto& s : family)
        if (!is_strict_decreasing(s)) throw NotStrictDecreasing();
    return interior_d(subset_intersection(family));
}

bool has_property_F(const GradualSubset& s) {
    if (!is_decreasing(s)) throw NotDecreasing();
    const ElemSet all = overall_union(s);
    for (size_t x = 0; x < s.ground.size(); ++x) {
        if (!all.test(x)) continue;
        if (!membership_profile(s, static_cast<int>(x)).sup_attained()) return false;
    }
    return true;
}

bool has_property_infF(const GradualSubset& s) {
    if (!is_strict_decreasing(s)) throw NotStrictDecreasing();
    const ElemSet all = overall_union(s);
    for (size_t x = 0; x < s.ground.size(); ++x) {
        if (!all.test(x)) continue;
        MembershipProfile prof = membership_profile(s, static_cast<int>(x));
        // Strictness forces a down-set profile (0,v) or (0,1]; the infimum of
        // the non-membership set is v (resp. 1 by the empty-set convention).
        // A profile (0,1) has infimum 1 with 1 not a membership level: fail.
        if (prof.sup() == 1 && !prof.sup_attained()) return false;
    }
    return true;
}

ElemSet difference_star(const GradualSubset& s, const Rational& alpha) {
    return closure_c(s).at(alpha) & ~interior_d(s).at(alpha);
}

GradualSubset unit_subset(const TotalGradualElement& e) {
    auto map = step_transform(e.map, [](int v) {
        ElemSet s;
        s.set(static_cast<size_t>(v));
        return s;
    });
    return GradualSubset{e.ground, std::move(map)};
}

bool element_belongs(const TotalGradualElement& e, const GradualSubset& s) {
    require_same_ground(e.ground, s.ground);
    std::vector<Rational> cuts;
    collect_cuts(e.map, cuts);
    collect_cuts(s.map, cuts);
    sort_unique(cuts);
    for (const auto& iv : refined_partition(cuts)) {
        const Rational x = iv.representative();
        if (!s.at(x).test(static_cast<size_t>(e.map.eval(x)))) return false;
    }
    return true;
}

bool element_belongs(const PartialGradualElement& e, const GradualSubset& s) {
    require_same_ground(e.ground, s.ground);
    std::vector<Rational> cuts;
    collect_cuts(s.map, cuts);
    for (const auto& [iv, v] : e.values) {
        (void)v;
        if (iv.lo > 0 && iv.lo < 1) cuts.push_back(iv.lo);
        if (iv.hi < 1) cuts.push_back(iv.hi);
    }
    sort_unique(cuts);
    for (const auto& piece : e.domain.pieces)
        for (const auto& sub : split_piece(piece, cuts)) {
            const Rational x = sub.representative();
            if (!s.at(x).test(static_cast<size_t>(e.value_at(x)))) return false;
        }
    return true;
}

GradualSubset direct_image(const std::vector<int>& f, const GroundSet& target,
                           const GradualSubset& s) {
    if (f.size() != s.ground.size()) throw GroundMismatch("map size mismatch");
    auto map = step_transform(s.map, [&](const ElemSet& v) {
        ElemSet out;
        for (size_t i = 0; i < f.size(); ++i)
            if (v.test(i)) out.set(static_cast<size_t>(f[i]));
        return out;
    });
    return GradualSubset{target, std::move(map)};
}

GradualSubset inverse_image(const std::vector<int>& f, const GroundSet& source,
                            const GradualSubset& t) {
    if (f.size() != source.size()) throw GroundMismatch("map size mismatch");
    auto map = step_transform(t.map, [&](const ElemSet& v) {
        ElemSet out;
        for (size_t i = 0; i < f.size(); ++i)
            if (v.test(static_cast<size_t>(f[i]))) out.set(i);
        return out;
    });
    return GradualSubset{source, std::move(map)};
}

GradualSubset extend_partial_subset(GroundSet ground,
                                    std::vector<std::pair<IntervalPiece, ElemSet>> pieces) {
    std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
        return a.first.lo < b.first.lo || (a.first.lo == b.first.lo && a.first.hi < b.first.hi);
    });
    bool has_one = false;
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].first.contains(Rational(1))) has_one = true;
        if (i + 1 < pieces.size()) {
            const auto& a = pieces[i].first;
            const auto& b = pieces[i + 1].first;
            if (b.lo < a.hi || (b.lo == a.hi && a.hi_closed && b.lo_closed))
                throw Overlap("pieces overlap at " + b.str());
        }
    }
    if (!has_one) throw MissingOne("domain must contain 1");
    std::vector<StepMap<ElemSet>::Piece> out;
    Rational at = 0;
    bool at_open_right = false; // true when the gap starts just after a closed end
    for (const auto& [iv, v] : pieces) {
        if (at < iv.lo || (at == iv.lo && at_open_right && !iv.lo_closed)) {
            // fill the gap (at, iv.lo) / (at, iv.lo] with ∅
            out.push_back({IntervalPiece{at, iv.lo, at_open_right, !iv.lo_closed}, ElemSet{}});
        }
        out.push_back({iv, v});
        at = iv.hi;
        at_open_right = !iv.hi_closed;
    }
    if (at < 1) out.push_back({IntervalPiece{at, Rational(1), at_open_right, true}, ElemSet{}});
    return GradualSubset{std::move(ground), make_step_map<ElemSet>(std::move(out))};
}

} // namespace gradual
