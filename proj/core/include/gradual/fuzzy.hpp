#ifndef GRADUAL_FUZZY_HPP
#define GRADUAL_FUZZY_HPP

#include <vector>

#include "gradual/gradual_subset.hpp"

namespace gradual {

struct FuzzySubset {
    GroundSet ground;
    std::vector<Rational> grades; // one per ground element, each in [0,1]

    bool operator==(const FuzzySubset& o) const {
        return ground == o.ground && grades == o.grades;
    }

    const Rational& grade(int x) const { return grades.at(static_cast<size_t>(x)); }
};

FuzzySubset make_fuzzy_subset(GroundSet ground, std::vector<Rational> grades);

// {x : mu(x) >= alpha}
ElemSet alpha_level(const FuzzySubset& mu, const Rational& alpha);

// {x : mu(x) > alpha} for alpha < 1; {x : mu(x) >= 1} at alpha = 1.
ElemSet strong_alpha_level(const FuzzySubset& mu, const Rational& alpha);

// Level-set map: nu(mu)(alpha) = alpha_level(mu, alpha). Decreasing, attains maxima.
GradualSubset nu(const FuzzySubset& mu);

// Strong-level map: nu_tilde(mu)(alpha) = strong_alpha_level(mu, alpha).
// Strict decreasing; equals interior_d(nu(mu)).
GradualSubset nu_tilde(const FuzzySubset& mu);

// Grade per element = attained Max of the membership profile (0 outside).
FuzzySubset upsilon(const GradualSubset& s);

// Grade per element = Inf of the non-membership set, with the conventions
// Inf ∅ = 1 and Inf (0,1] = 0.
FuzzySubset upsilon_tilde(const GradualSubset& s);

FuzzySubset fuzzy_union(const std::vector<FuzzySubset>& family);
FuzzySubset fuzzy_intersection(const std::vector<FuzzySubset>& family);

// A monotone family mu_n (n >= 2) converging elementwise to exact limit
// grades: grade_n(x) = limit(x) + dir(x) * (1/2)^n with dir in {-1, 0, +1}.
struct SymbolicFamily {
    GroundSet ground;
    std::vector<Rational> limit;
    std::vector<int> dir;

    FuzzySubset member(int n) const; // the n-th family member, n >= 2
    FuzzySubset sup_family() const;  // pointwise Sup over all n
    FuzzySubset inf_family() const;  // pointwise Inf over all n

    // Exact infinite union of the level-set maps nu(mu_n).
    GradualSubset infinite_union_nu() const;
    // Exact infinite intersection of the strong-level maps nu_tilde(mu_n).
    GradualSubset infinite_intersection_nu_tilde() const;
};

// Witness data for the proper inclusions of the two monotone-family examples.
struct FamilyGapReport {
    SymbolicFamily family;
    GradualSubset limit_map;     // nu(sup) resp. nu_tilde(inf)
    GradualSubset finite_combo;  // union of nu(mu_n) resp. intersection of nu_tilde(mu_n), n <= N
    GradualSubset symbolic_combo; // the exact infinite union / intersection
    ElemSet limit_at_half;
    ElemSet finite_at_half;
    bool proper; // finite combination misses the limit value at 1/2
    // Sanity on the dual side: the strong-level (resp. modified) combination
    // agrees with the limit where the plain one does not.
    bool dual_side_closes_gap;
};

// Ascending family mu_n(a)=1, mu_n(b)=1/2 - (1/2)^n: nu of the Sup strictly
// contains every finite union of nu(mu_n); witness at level 1/2.
FamilyGapReport counterexample_ascending(int N);

// Descending family mu_n(b)=1/2 + (1/2)^n: nu_tilde of the Inf is strictly
// contained in every finite intersection of nu_tilde(mu_n); witness at 1/2.
FamilyGapReport counterexample_descending(int N);

} // namespace gradual

#endif
