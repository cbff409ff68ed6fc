#ifndef GRADUAL_FINITE_GROUP_HPP
#define GRADUAL_FINITE_GROUP_HPP

#include <string>
#include <vector>

#include "gradual/ground.hpp"

namespace gradual {

// A finite group given by its Cayley table; validated on construction.
class FiniteGroup {
public:
    static FiniteGroup from_cayley(std::vector<std::vector<int>> table,
                                   std::vector<std::string> names = {});
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n); // n <= 5
    static FiniteGroup dihedral(int n);  // order 2n
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return n_; }
    int op(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inv_[static_cast<size_t>(a)]; }
    int identity() const { return identity_; }
    const std::vector<std::string>& names() const { return names_; }
    GroundSet ground() const { return GroundSet(names_); }

    bool operator==(const FiniteGroup& o) const {
        return n_ == o.n_ && table_ == o.table_ && names_ == o.names_;
    }

private:
    FiniteGroup() = default;
    int n_{0};
    std::vector<int> table_; // row-major n*n
    int identity_{0};
    std::vector<int> inv_;
    std::vector<std::string> names_;
};

// Subgroups and subsets of a group are plain element bitmasks.
using Subgroup = ElemSet;

bool is_subgroup(const FiniteGroup& G, const ElemSet& S);
bool is_normal(const FiniteGroup& G, const ElemSet& S);

// Closure of S ∪ {e} under product and inverse; empty S yields {e}.
Subgroup subgroup_generated(const FiniteGroup& G, const ElemSet& S);

ElemSet setwise_product(const FiniteGroup& G, const ElemSet& a, const ElemSet& b);
ElemSet setwise_inverse(const FiniteGroup& G, const ElemSet& s);

// All subgroups, ascending by mask value; intended for small groups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);

struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> images;

    bool operator==(const GroupHom& o) const {
        return source == o.source && target == o.target && images == o.images;
    }
};

GroupHom make_group_hom(FiniteGroup source, FiniteGroup target, std::vector<int> images);
GroupHom identity_hom(const FiniteGroup& G);

struct Quotient {
    FiniteGroup group;
    std::vector<int> projection; // element of G -> coset index
};

Quotient quotient(const FiniteGroup& G, const Subgroup& N); // N must be normal

Subgroup kernel(const GroupHom& f);
ElemSet hom_image(const GroupHom& f, const ElemSet& s);
ElemSet hom_preimage(const GroupHom& f, const ElemSet& s);

} // namespace gradual

#endif
