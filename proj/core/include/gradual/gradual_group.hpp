#ifndef GRADUAL_GRADUAL_GROUP_HPP
#define GRADUAL_GRADUAL_GROUP_HPP

#include <optional>
#include <utility>

#include "gradual/finite_group.hpp"
#include "gradual/fuzzy.hpp"
#include "gradual/gradual_subset.hpp"

namespace gradual {

// A gradual subgroup: every level value is a subgroup of G (hence nonempty).
struct GradualSubgroup {
    FiniteGroup group;
    StepMap<ElemSet> map;

    bool operator==(const GradualSubgroup& o) const {
        return group == o.group && map == o.map;
    }

    ElemSet at(const Rational& alpha) const { return map.eval(alpha); }
    GradualSubset as_subset() const { return GradualSubset{group.ground(), map}; }
};

GradualSubgroup make_gradual_subgroup(FiniteGroup G, StepMap<ElemSet> map);
GradualSubgroup constant_subgroup(FiniteGroup G, const Subgroup& S);

// True iff sigma*sigma ⊆ sigma and sigma^{-1} ⊆ sigma per piece; empty level
// values are rejected.
bool is_gradual_subgroup(const FiniteGroup& G, const GradualSubset& s);

// Per-level subgroup generated by the values of the given elements.
GradualSubgroup generated_by(const FiniteGroup& G, const std::vector<TotalGradualElement>& es);

struct GradualProduct {
    GradualSubset subset;                     // per-level setwise product
    std::optional<GradualSubgroup> subgroup;  // present when every level is a subgroup
};

GradualProduct product_gradual(const GradualSubgroup& a, const GradualSubgroup& b);

// Subgroup-generated closure and interior operators.
GradualSubgroup closure_c_group(const GradualSubgroup& s);
GradualSubgroup interior_d_group(const GradualSubgroup& s);

bool is_decreasing_group(const GradualSubgroup& s);
bool is_strict_decreasing_group(const GradualSubgroup& s);

// Computes <sigma1 sigma2>^c and <sigma1^c sigma2^c>, asserts they agree,
// and returns the common value.
GradualSubgroup langle_product_c(const GradualSubgroup& a, const GradualSubgroup& b);

bool is_normal_gradual(const GradualSubgroup& s);

struct QuotientPiece {
    FiniteGroup group;
    std::vector<int> projection;
    bool operator==(const QuotientPiece& o) const {
        return group == o.group && projection == o.projection;
    }
};

struct GradualQuotientGroup {
    FiniteGroup source;
    StepMap<QuotientPiece> levels;
    bool operator==(const GradualQuotientGroup& o) const {
        return source == o.source && levels == o.levels;
    }
};

GradualQuotientGroup quotient_gradual(const GradualSubgroup& s); // s must be normal
GradualSubgroup kernel_of(const GradualQuotientGroup& q);

struct ComparisonPiece {
    QuotientPiece q1;
    QuotientPiece q2;
    std::vector<int> h; // induced map on cosets, p2 = h ∘ p1
    bool operator==(const ComparisonPiece& o) const {
        return q1 == o.q1 && q2 == o.q2 && h == o.h;
    }
};

// For normal sigma1 ⊆ sigma2: the per-level induced maps G/sigma1 -> G/sigma2.
StepMap<ComparisonPiece> comparison_homs(const GradualSubgroup& a, const GradualSubgroup& b);

// ---- fuzzy subgroups ----

// First violating pair (x,y) of mu(x y^{-1}) >= mu(x) ∧ mu(y), if any.
std::optional<std::pair<int, int>> fuzzy_subgroup_violation(const FiniteGroup& G,
                                                            const FuzzySubset& mu);
bool is_fuzzy_subgroup(const FiniteGroup& G, const FuzzySubset& mu);

// A fuzzy subgroup normalized to grade 1 at the identity (the class representative).
struct FuzzySubgroupClass {
    FiniteGroup group;
    FuzzySubset rep; // rep.grade(identity) == 1

    bool operator==(const FuzzySubgroupClass& o) const {
        return group == o.group && rep == o.rep;
    }
};

FuzzySubgroupClass normalize_mu1(const FiniteGroup& G, const FuzzySubset& mu);
bool classes_equal(const FuzzySubgroupClass& a, const FuzzySubgroupClass& b);

// Max-min convolution of the representatives, renormalized at the identity.
struct ClassProduct {
    FuzzySubset product;                       // the mu^1 of the convolution
    std::optional<FuzzySubgroupClass> as_class; // present when it is a fuzzy subgroup
};

ClassProduct class_product(const FuzzySubgroupClass& a, const FuzzySubgroupClass& b);

// Level-set correspondences for subgroup classes.
GradualSubgroup nu_group(const FuzzySubgroupClass& c);
FuzzySubgroupClass upsilon_group(const GradualSubgroup& s); // decreasing + (F)
GradualSubgroup nu_tilde_group(const FuzzySubgroupClass& c);
FuzzySubgroupClass upsilon_tilde_group(const GradualSubgroup& s); // strict + (inf-F)

bool is_normal_fuzzy(const FiniteGroup& G, const FuzzySubset& mu);

struct FractionPiece {
    QuotientPiece quotient; // G / sigma1(alpha)
    ElemSet value;          // (sigma1(alpha) sigma2(alpha)) / sigma1(alpha)
    bool operator==(const FractionPiece& o) const {
        return quotient == o.quotient && value == o.value;
    }
};

// Per-level (sigma1 sigma2)/sigma1 inside G/sigma1; sigma1 must be normal.
StepMap<FractionPiece> fraction(const GradualSubgroup& a, const GradualSubgroup& b);

GradualSubgroup image_subgroup(const GroupHom& f, const GradualSubgroup& s);
GradualSubgroup preimage_subgroup(const GroupHom& f, const GradualSubgroup& t);

} // namespace gradual

#endif
