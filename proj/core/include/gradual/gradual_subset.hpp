#ifndef GRADUAL_GRADUAL_SUBSET_HPP
#define GRADUAL_GRADUAL_SUBSET_HPP

#include <vector>

#include "gradual/gradual_element.hpp"
#include "gradual/ground.hpp"
#include "gradual/step_map.hpp"

namespace gradual {

// A gradual subset: a piecewise-constant map (0,1] -> P(X). Empty values are
// permitted here (subgroup-valued maps forbid them separately).
struct GradualSubset {
    GroundSet ground;
    StepMap<ElemSet> map;

    bool operator==(const GradualSubset& o) const { return ground == o.ground && map == o.map; }

    ElemSet at(const Rational& alpha) const { return map.eval(alpha); }
};

GradualSubset constant_subset(GroundSet ground, ElemSet value);

// {alpha : x ∈ sigma(alpha)} as a canonical finite union of interval pieces.
struct MembershipProfile {
    int element{-1};
    std::vector<IntervalPiece> pieces; // ascending, disjoint, maximal

    bool empty() const { return pieces.empty(); }
    // Supremum of the profile and whether it is attained (a membership level).
    const Rational& sup() const { return pieces.back().hi; }
    bool sup_attained() const { return pieces.back().hi_closed; }
    bool covers_all() const;
};

MembershipProfile membership_profile(const GradualSubset& s, int x);

// Union of all level values.
ElemSet overall_union(const GradualSubset& s);

bool is_subset(const GradualSubset& a, const GradualSubset& b);
bool is_decreasing(const GradualSubset& s);
bool is_strict_decreasing(const GradualSubset& s);

// sigma^c(alpha) = union of sigma(beta) over beta >= alpha.
GradualSubset closure_c(const GradualSubset& s);

// sigma^d(1) = sigma(1); sigma^d(alpha) = union of sigma(beta) over beta > alpha.
GradualSubset interior_d(const GradualSubset& s);

GradualSubset subset_union(const std::vector<GradualSubset>& family);
GradualSubset subset_intersection(const std::vector<GradualSubset>& family);

// Interior of the plain intersection; inputs must be strict decreasing.
GradualSubset modified_intersection(const std::vector<GradualSubset>& family);

// Every member's profile attains its maximum level. Requires decreasing input.
bool has_property_F(const GradualSubset& s);

// For strict decreasing maps the infimum of each member's non-membership set
// is Sup of its profile; the infimum is a membership level "in the limit"
// whenever it is below 1, so the only obstruction is a profile filling (0,1)
// without containing 1. Equivalently: the map is a strong-level image.
bool has_property_infF(const GradualSubset& s);

// sigma^c(alpha) \ sigma^d(alpha).
ElemSet difference_star(const GradualSubset& s, const Rational& alpha);

// The singleton-valued subset alpha -> {e(alpha)}.
GradualSubset unit_subset(const TotalGradualElement& e);

bool element_belongs(const TotalGradualElement& e, const GradualSubset& s);
bool element_belongs(const PartialGradualElement& e, const GradualSubset& s);

// f maps indices of the source ground set to indices of the target ground set.
GradualSubset direct_image(const std::vector<int>& f, const GroundSet& target,
                           const GradualSubset& s);
GradualSubset inverse_image(const std::vector<int>& f, const GroundSet& source,
                            const GradualSubset& t);

// Fills levels outside the given (arbitrary, 1-containing) piece list with ∅.
GradualSubset extend_partial_subset(GroundSet ground,
                                    std::vector<std::pair<IntervalPiece, ElemSet>> pieces);

} // namespace gradual

#endif
