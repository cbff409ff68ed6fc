#ifndef GRADUAL_GROUND_HPP
#define GRADUAL_GROUND_HPP

#include <bitset>
#include <string>
#include <vector>

#include "gradual/errors.hpp"

namespace gradual {

// Subsets of a ground set as bitmasks.
constexpr size_t kMaxGround = 128;
using ElemSet = std::bitset<kMaxGround>;

struct GroundSet {
    std::vector<std::string> names;

    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> ns) : names(std::move(ns)) {
        if (names.empty() || names.size() > kMaxGround)
            throw GroundMismatch("ground set size out of range");
        for (size_t i = 0; i < names.size(); ++i)
            for (size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j]) throw GroundMismatch("duplicate element " + names[i]);
    }

    size_t size() const { return names.size(); }

    int index(const std::string& name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        throw GroundMismatch("unknown element " + name);
    }

    bool operator==(const GroundSet& o) const { return names == o.names; }

    ElemSet all() const {
        ElemSet s;
        for (size_t i = 0; i < names.size(); ++i) s.set(i);
        return s;
    }
};

inline ElemSet elemset_of(std::initializer_list<int> idxs) {
    ElemSet s;
    for (int i : idxs) s.set(static_cast<size_t>(i));
    return s;
}

inline std::vector<int> members(const ElemSet& s, size_t n) {
    std::vector<int> out;
    for (size_t i = 0; i < n; ++i)
        if (s.test(i)) out.push_back(static_cast<int>(i));
    return out;
}

inline bool subset_of(const ElemSet& a, const ElemSet& b) { return (a & ~b).none(); }

} // namespace gradual

#endif
