#include "gradual/functorial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gradual {

LevelGrid make_level_grid(std::vector<Rational> levels) {
    if (levels.empty()) throw EmptyFamily("grid needs at least one level");
    std::sort(levels.begin(), levels.end());
    for (size_t i = 0; i + 1 < levels.size(); ++i)
        if (levels[i] == levels[i + 1]) throw BadPartition("duplicate grid level");
    if (levels.front() <= 0 || levels.back() != 1)
        throw BadPartition("grid levels must lie in (0,1] and include 1");
    return LevelGrid{std::move(levels)};
}

DirectedSetSystem make_directed_set_system(LevelGrid grid, std::vector<int> sizes,
                                           std::vector<std::vector<std::vector<int>>> t) {
    const size_t k = grid.size();
    if (sizes.size() != k || t.size() != k)
        throw InvalidSystem("one carrier and one transition row per level required");
    for (int n : sizes)
        if (n < 0) throw InvalidSystem("negative carrier size");
    for (size_t i = 0; i < k; ++i) {
        if (t[i].size() != k) throw InvalidSystem("transition table must be square");
        for (size_t j = i + 1; j < k; ++j) {
            if (t[i][j].size() != static_cast<size_t>(sizes[j]))
                throw InvalidSystem("transition domain size mismatch");
            for (int v : t[i][j])
                if (v < 0 || v >= sizes[i]) throw InvalidSystem("transition value out of range");
        }
    }
    return DirectedSetSystem{std::move(grid), std::move(sizes), std::move(t)};
}

std::optional<SystemViolation> find_violation(const DirectedSetSystem& s) {
    const size_t k = s.grid.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t m = i + 1; m < k; ++m)
            for (size_t j = m + 1; j < k; ++j)
                for (int x = 0; x < s.sizes[j]; ++x) {
                    const int direct = s.map(i, j)[static_cast<size_t>(x)];
                    const int via = s.map(i, m)[static_cast<size_t>(s.map(m, j)[static_cast<size_t>(x)])];
                    if (direct != via)
                        return SystemViolation{i, m, j, x, "transition triangle does not commute"};
                }
    return std::nullopt;
}

void validate_system(const DirectedSetSystem& s) {
    if (auto v = find_violation(s))
        throw InvalidSystem(v->what + " at levels (" + to_string(s.grid.levels[v->i]) + ", " +
                            to_string(s.grid.levels[v->m]) + ", " + to_string(s.grid.levels[v->j]) +
                            ")");
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

} // namespace

ColimitSet colimit_set(const DirectedSetSystem& s) {
    validate_system(s);
    const size_t k = s.grid.size();
    std::vector<int> offset(k, 0);
    int total = 0;
    for (size_t i = 0; i < k; ++i) {
        offset[i] = total;
        total += s.sizes[i];
    }
    UnionFind uf(total);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            for (int x = 0; x < s.sizes[j]; ++x)
                uf.unite(offset[j] + x, offset[i] + s.map(i, j)[static_cast<size_t>(x)]);
    std::vector<int> label(static_cast<size_t>(total), -1);
    int classes = 0;
    ColimitSet out;
    out.inject.resize(k);
    for (size_t i = 0; i < k; ++i) {
        out.inject[i].resize(static_cast<size_t>(s.sizes[i]));
        for (int x = 0; x < s.sizes[i]; ++x) {
            const int root = uf.find(offset[i] + x);
            if (label[static_cast<size_t>(root)] < 0) label[static_cast<size_t>(root)] = classes++;
            out.inject[i][static_cast<size_t>(x)] = label[static_cast<size_t>(root)];
        }
    }
    out.size = classes;
    return out;
}

std::vector<int> mediate(const DirectedSetSystem& s, const ColimitSet& c, int target_size,
                         const std::vector<std::vector<int>>& cocone) {
    if (cocone.size() != s.grid.size()) throw InvalidSystem("one cocone leg per level required");
    std::vector<int> u(static_cast<size_t>(c.size), -1);
    for (size_t i = 0; i < cocone.size(); ++i) {
        if (cocone[i].size() != static_cast<size_t>(s.sizes[i]))
            throw InvalidSystem("cocone leg domain size mismatch");
        for (int x = 0; x < s.sizes[i]; ++x) {
            const int y = cocone[i][static_cast<size_t>(x)];
            if (y < 0 || y >= target_size) throw InvalidSystem("cocone value out of range");
            int& slot = u[static_cast<size_t>(c.inject[i][static_cast<size_t>(x)])];
            if (slot < 0)
                slot = y;
            else if (slot != y)
                throw InvalidSystem("cocone legs disagree on a colimit class");
        }
    }
    for (int v : u)
        if (v < 0) throw InvalidSystem("cocone does not cover the colimit");
    return u;
}

bool is_decreasing_system(const DirectedSetSystem& s) {
    for (size_t i = 0; i < s.grid.size(); ++i)
        for (size_t j = i + 1; j < s.grid.size(); ++j) {
            std::set<int> seen(s.map(i, j).begin(), s.map(i, j).end());
            if (seen.size() != s.map(i, j).size()) return false;
        }
    return true;
}

DirectedSetSystem interior_d_system(const DirectedSetSystem& s) {
    const size_t k = s.grid.size();
    auto shift = [&](size_t i) { return std::min(i + 1, k - 1); };
    std::vector<int> sizes(k);
    for (size_t i = 0; i < k; ++i) sizes[i] = s.sizes[shift(i)];
    std::vector<std::vector<std::vector<int>>> t(k, std::vector<std::vector<int>>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            const size_t si = shift(i), sj = shift(j);
            if (si == sj) { // identity on the fixed top carrier
                t[i][j].resize(static_cast<size_t>(sizes[j]));
                std::iota(t[i][j].begin(), t[i][j].end(), 0);
            } else {
                t[i][j] = s.map(si, sj);
            }
        }
    return make_directed_set_system(s.grid, std::move(sizes), std::move(t));
}

bool has_property_F_system(const DirectedSetSystem& s) {
    const ColimitSet c = colimit_set(s);
    const size_t k = s.grid.size();
    std::vector<int> owner(static_cast<size_t>(c.size), -1); // -1 free, -2 top image
    for (int cls : c.inject[k - 1]) owner[static_cast<size_t>(cls)] = -2;
    for (size_t i = 0; i + 1 < k; ++i) {
        std::set<int> from_above;
        for (int x : s.map(i, i + 1))
            from_above.insert(c.inject[i][static_cast<size_t>(x)]);
        std::set<int> fresh;
        for (int cls : c.inject[i])
            if (!from_above.count(cls)) fresh.insert(cls);
        for (int cls : fresh) {
            auto& slot = owner[static_cast<size_t>(cls)];
            if (slot != -1) return false; // already claimed by another level or the top
            slot = static_cast<int>(i);
        }
    }
    for (int slot : owner)
        if (slot == -1) return false; // a colimit class claimed by no level
    return true;
}

bool is_natural(const DirectedSetSystem& a, const DirectedSetSystem& b,
                const NaturalTransformation& nt) {
    if (!(a.grid == b.grid) || nt.components.size() != a.grid.size()) return false;
    const size_t k = a.grid.size();
    for (size_t i = 0; i < k; ++i) {
        if (nt.components[i].size() != static_cast<size_t>(a.sizes[i])) return false;
        for (int v : nt.components[i])
            if (v < 0 || v >= b.sizes[i]) return false;
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            for (int x = 0; x < a.sizes[j]; ++x) {
                const int down_then_over =
                    nt.components[i][static_cast<size_t>(a.map(i, j)[static_cast<size_t>(x)])];
                const int over_then_down =
                    b.map(i, j)[static_cast<size_t>(nt.components[j][static_cast<size_t>(x)])];
                if (down_then_over != over_then_down) return false;
            }
    return true;
}

DirectedSetSystem DirectedGroupSystem::as_set_system() const {
    std::vector<int> sizes;
    sizes.reserve(groups.size());
    for (const auto& g : groups) sizes.push_back(g.order());
    return make_directed_set_system(grid, std::move(sizes), t);
}

DirectedGroupSystem make_directed_group_system(LevelGrid grid, std::vector<FiniteGroup> groups,
                                               std::vector<std::vector<std::vector<int>>> t) {
    DirectedGroupSystem out{std::move(grid), std::move(groups), std::move(t)};
    DirectedSetSystem sets = out.as_set_system(); // shape and range checks
    validate_system(sets);
    for (size_t i = 0; i < out.groups.size(); ++i)
        for (size_t j = i + 1; j < out.groups.size(); ++j)
            make_group_hom(out.groups[j], out.groups[i], out.t[i][j]); // hom check
    return out;
}

ColimitGroup colimit_group(const DirectedGroupSystem& s) {
    DirectedSetSystem sets = s.as_set_system();
    validate_system(sets);
    ColimitGroup out{s.groups.front(), {}};
    const size_t k = s.grid.size();
    out.inject.resize(k);
    out.inject[0].resize(static_cast<size_t>(s.groups[0].order()));
    std::iota(out.inject[0].begin(), out.inject[0].end(), 0);
    for (size_t i = 1; i < k; ++i) out.inject[i] = s.t[0][i];
    return out;
}

SampledSubsetSystem subset_to_system(const GradualSubset& s, const LevelGrid& grid) {
    for (const auto& p : s.map.pieces) {
        bool hit = false;
        for (const auto& lv : grid.levels)
            if (p.iv.contains(lv)) {
                hit = true;
                break;
            }
        if (!hit) throw GridTooCoarse("no grid level inside " + p.iv.str());
    }
    const size_t k = grid.size();
    SampledSubsetSystem out{s.ground, {}, {}};
    std::vector<int> sizes(k);
    out.elements.resize(k);
    std::vector<std::vector<int>> pos(k, std::vector<int>(s.ground.size(), -1));
    for (size_t i = 0; i < k; ++i) {
        const ElemSet v = s.at(grid.levels[i]);
        for (size_t x = 0; x < s.ground.size(); ++x)
            if (v.test(x)) {
                pos[i][x] = static_cast<int>(out.elements[i].size());
                out.elements[i].push_back(static_cast<int>(x));
            }
        sizes[i] = static_cast<int>(out.elements[i].size());
    }
    std::vector<std::vector<std::vector<int>>> t(k, std::vector<std::vector<int>>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            t[i][j].reserve(out.elements[j].size());
            for (int x : out.elements[j]) {
                const int p = pos[i][static_cast<size_t>(x)];
                if (p < 0)
                    throw NotDecreasing("level values are not nested along the grid");
                t[i][j].push_back(p);
            }
        }
    out.system = make_directed_set_system(grid, std::move(sizes), std::move(t));
    return out;
}

GradualSubset system_to_subset(const SampledSubsetSystem& s) {
    std::vector<Rational> cuts;
    for (const auto& lv : s.system.grid.levels)
        if (lv < 1) cuts.push_back(lv);
    auto map = build_step_map<ElemSet>(cuts, [&](const Rational& alpha) {
        // value on (levels[i-1], levels[i]] is the carrier at levels[i]
        size_t i = 0;
        while (s.system.grid.levels[i] < alpha) ++i;
        ElemSet v;
        for (int x : s.elements[i]) v.set(static_cast<size_t>(x));
        return v;
    });
    return GradualSubset{s.ground, std::move(map)};
}

RepresentabilityWitness non_representable_witness() {
    GroundSet ground({"a"});
    const Rational half(1, 2);
    StepMap<ElemSet> map = make_step_map<ElemSet>(
        {{IntervalPiece::make(0, half, false, false), ElemSet{}},
         {IntervalPiece::singleton(half), elemset_of({0})},
         {IntervalPiece::make(half, 1, false, true), ElemSet{}}});
    RepresentabilityWitness w{GradualSubset{ground, std::move(map)},
                              make_level_grid({Rational(1, 4), half, Rational(1)}), true, ""};
    try {
        (void)subset_to_system(w.original, w.grid);
    } catch (const NotDecreasing&) {
        w.representable = false;
        w.reason = "no transition exists from the one-element carrier at 1/2 "
                   "into the empty carrier at 1/4";
    }
    return w;
}

} // namespace gradual
