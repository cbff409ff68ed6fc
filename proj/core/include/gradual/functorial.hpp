#ifndef GRADUAL_FUNCTORIAL_HPP
#define GRADUAL_FUNCTORIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "gradual/finite_group.hpp"
#include "gradual/gradual_subset.hpp"

namespace gradual {

// A finite grid of levels in (0,1], strictly increasing, ending at 1.
struct LevelGrid {
    std::vector<Rational> levels;

    size_t size() const { return levels.size(); }
    bool operator==(const LevelGrid& o) const { return levels == o.levels; }
};

LevelGrid make_level_grid(std::vector<Rational> levels);

// A system of finite carriers indexed by grid levels with one transition map
// per ordered pair: t[i][j] maps the carrier at levels[j] into the carrier at
// levels[i] for i < j (levels are ordered by decreasing carrier).
struct DirectedSetSystem {
    LevelGrid grid;
    std::vector<int> sizes;                        // carrier size per level
    std::vector<std::vector<std::vector<int>>> t;  // t[i][j] defined for i < j

    const std::vector<int>& map(size_t i, size_t j) const { return t[i][j]; }
    bool operator==(const DirectedSetSystem& o) const {
        return grid == o.grid && sizes == o.sizes && t == o.t;
    }
};

// Shape and range checks only; commutation is reported by find_violation.
DirectedSetSystem make_directed_set_system(LevelGrid grid, std::vector<int> sizes,
                                           std::vector<std::vector<std::vector<int>>> t);

// First failing triangle t[i][j] != t[i][m] ∘ t[m][j] (i < m < j), if any.
struct SystemViolation {
    size_t i, m, j;
    int x; // element of the carrier at levels[j] witnessing the failure
    std::string what;
};

std::optional<SystemViolation> find_violation(const DirectedSetSystem& s);
void validate_system(const DirectedSetSystem& s); // throws InvalidSystem

// Colimit of the system: classes of the disjoint union under x ~ t[i][j](x),
// with the canonical injections inject[i] : carrier(i) -> classes.
struct ColimitSet {
    int size{0};
    std::vector<std::vector<int>> inject;
};

ColimitSet colimit_set(const DirectedSetSystem& s);

// The unique map u with u ∘ inject[i] = cocone[i]; cocone[i] maps carrier(i)
// into a target of target_size. Throws InvalidSystem when no such map exists.
std::vector<int> mediate(const DirectedSetSystem& s, const ColimitSet& c, int target_size,
                         const std::vector<std::vector<int>>& cocone);

// All transitions injective (the system of level sets of a decreasing map).
bool is_decreasing_system(const DirectedSetSystem& s);

// Shift every carrier one grid step up; the top level is fixed.
DirectedSetSystem interior_d_system(const DirectedSetSystem& s);

// In the colimit, the sets inject[i](carrier(i)) \ inject[i](t[i][i+1](carrier(i+1)))
// must partition everything outside the image of the top carrier.
bool has_property_F_system(const DirectedSetSystem& s);

struct NaturalTransformation {
    std::vector<std::vector<int>> components; // components[i] : a.carrier(i) -> b.carrier(i)
};

bool is_natural(const DirectedSetSystem& a, const DirectedSetSystem& b,
                const NaturalTransformation& nt);

// Same shape with group carriers; every transition must be a homomorphism.
struct DirectedGroupSystem {
    LevelGrid grid;
    std::vector<FiniteGroup> groups;
    std::vector<std::vector<std::vector<int>>> t;

    DirectedSetSystem as_set_system() const;
};

DirectedGroupSystem make_directed_group_system(LevelGrid grid, std::vector<FiniteGroup> groups,
                                               std::vector<std::vector<std::vector<int>>> t);

// The bottom-level group receives every carrier, so it is the colimit.
struct ColimitGroup {
    FiniteGroup group;
    std::vector<std::vector<int>> inject;
};

ColimitGroup colimit_group(const DirectedGroupSystem& s);

// A gradual subset sampled on a grid, keeping the ground index of each
// carrier element so the subset can be rebuilt.
struct SampledSubsetSystem {
    GroundSet ground;
    DirectedSetSystem system;
    std::vector<std::vector<int>> elements; // elements[i][x] = ground index
};

// Requires a grid point inside every canonical piece (else GridTooCoarse) and
// nested values along the grid (else NotDecreasing).
SampledSubsetSystem subset_to_system(const GradualSubset& s, const LevelGrid& grid);

// Rebuilds the right-closed form: value elements[i] on (levels[i-1], levels[i]].
GradualSubset system_to_subset(const SampledSubsetSystem& s);

// A subset whose level at the single point 1/2 is nonempty while nearby levels
// are empty: no transition into the empty carrier can exist.
struct RepresentabilityWitness {
    GradualSubset original;
    LevelGrid grid;
    bool representable;
    std::string reason;
};

RepresentabilityWitness non_representable_witness();

} // namespace gradual

#endif
