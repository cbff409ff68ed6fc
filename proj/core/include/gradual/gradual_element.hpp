#ifndef GRADUAL_GRADUAL_ELEMENT_HPP
#define GRADUAL_GRADUAL_ELEMENT_HPP

#include <functional>

#include "gradual/ground.hpp"
#include "gradual/step_map.hpp"

namespace gradual {

// A total gradual element: a piecewise-constant map (0,1] -> X.
struct TotalGradualElement {
    GroundSet ground;
    StepMap<int> map;

    bool operator==(const TotalGradualElement& o) const {
        return ground == o.ground && map == o.map;
    }
};

// A partial gradual element: defined only on an inf-compact domain containing 1,
// constant on finitely many sub-pieces of the domain.
struct PartialGradualElement {
    GroundSet ground;
    LevelSet domain;
    std::vector<std::pair<IntervalPiece, int>> values; // partition the domain, ascending

    int value_at(const Rational& alpha) const; // alpha must lie in the domain
};

PartialGradualElement make_partial_element(GroundSet ground, LevelSet domain,
                                           std::vector<std::pair<IntervalPiece, int>> values);

PartialGradualElement as_partial(const TotalGradualElement& e);

// The canonical extension: result(alpha) = e(Min([alpha,1] ∩ dom)).
TotalGradualElement extend(const PartialGradualElement& e);

// Decomposes p at the cut points lying strictly inside it.
std::vector<IntervalPiece> split_piece(const IntervalPiece& p, const std::vector<Rational>& cuts);

// Pointwise operation; the domain of the result is the intersection of domains.
PartialGradualElement pointwise_op_partial(const PartialGradualElement& a,
                                           const PartialGradualElement& b,
                                           const std::function<int(int, int)>& op);

TotalGradualElement pointwise_op(const TotalGradualElement& a, const TotalGradualElement& b,
                                 const std::function<int(int, int)>& op);

// Agreement on [alpha,1] intersected with both domains; alpha = 0 is allowed
// and means agreement on the full common domain.
bool r_alpha_equal(const PartialGradualElement& a, const PartialGradualElement& b,
                   const Rational& alpha);
bool r_alpha_equal(const TotalGradualElement& a, const TotalGradualElement& b,
                   const Rational& alpha);

// Canonical representative of the R_alpha class of a total element.
struct RestrictedElement {
    std::vector<StepMap<int>::Piece> pieces; // partition of [alpha,1], canonical
    bool operator==(const RestrictedElement& o) const { return pieces == o.pieces; }
};

RestrictedElement restrict_to(const TotalGradualElement& e, const Rational& alpha);

// True iff extension fails to commute with the pointwise operation.
bool extension_homomorphism_gap(const PartialGradualElement& a, const PartialGradualElement& b,
                                const std::function<int(int, int)>& op);

// True iff e(beta) = identity for all beta in [alpha,1] (alpha may be 0).
bool in_filtration_subgroup(const TotalGradualElement& e, const Rational& alpha, int identity);

} // namespace gradual

#endif
