#include "gradual/gradual_group.hpp"

#include <algorithm>

namespace gradual {

namespace {

void require_same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (!(a == b)) throw GroundMismatch("groups differ");
}

} // namespace

GradualSubgroup make_gradual_subgroup(FiniteGroup G, StepMap<ElemSet> map) {
    canonicalize_in_place(map);
    for (const auto& p : map.pieces) {
        if (p.value.none()) throw EmptyLevelValue("empty level value at " + p.iv.str());
        if (!is_subgroup(G, p.value))
            throw NotFuzzySubgroup("level value at " + p.iv.str() + " is not a subgroup");
    }
    return GradualSubgroup{std::move(G), std::move(map)};
}

GradualSubgroup constant_subgroup(FiniteGroup G, const Subgroup& S) {
    return make_gradual_subgroup(std::move(G), StepMap<ElemSet>::constant(S));
}

bool is_gradual_subgroup(const FiniteGroup& G, const GradualSubset& s) {
    for (const auto& p : s.map.pieces) {
        if (p.value.none()) throw EmptyLevelValue("empty level value at " + p.iv.str());
        if (!subset_of(setwise_product(G, p.value, p.value), p.value)) return false;
        if (!subset_of(setwise_inverse(G, p.value), p.value)) return false;
    }
    return true;
}

GradualSubgroup generated_by(const FiniteGroup& G, const std::vector<TotalGradualElement>& es) {
    if (es.empty()) throw EmptyFamily();
    std::vector<Rational> cuts;
    for (const auto& e : es) collect_cuts(e.map, cuts);
    sort_unique(cuts);
    auto map = build_step_map<ElemSet>(cuts, [&](const Rational& alpha) {
        ElemSet gens;
        for (const auto& e : es) gens.set(static_cast<size_t>(e.map.eval(alpha)));
        return subgroup_generated(G, gens);
    });
    return GradualSubgroup{G, std::move(map)};
}

GradualProduct product_gradual(const GradualSubgroup& a, const GradualSubgroup& b) {
    require_same_group(a.group, b.group);
    auto map = step_zip(a.map, b.map, [&](const ElemSet& x, const ElemSet& y) {
        return setwise_product(a.group, x, y);
    });
    GradualProduct out{GradualSubset{a.group.ground(), map}, std::nullopt};
    bool all_subgroups_flag = true;
    for (const auto& p : map.pieces)
        if (!is_subgroup(a.group, p.value)) {
            all_subgroups_flag = false;
            break;
        }
    if (all_subgroups_flag) out.subgroup = GradualSubgroup{a.group, std::move(map)};
    return out;
}

GradualSubgroup closure_c_group(const GradualSubgroup& s) {
    GradualSubset closed = closure_c(s.as_subset());
    auto map = step_transform(closed.map,
                              [&](const ElemSet& v) { return subgroup_generated(s.group, v); });
    return GradualSubgroup{s.group, std::move(map)};
}

GradualSubgroup interior_d_group(const GradualSubgroup& s) {
    GradualSubset open = interior_d(s.as_subset());
    auto map = step_transform(open.map,
                              [&](const ElemSet& v) { return subgroup_generated(s.group, v); });
    return GradualSubgroup{s.group, std::move(map)};
}

bool is_decreasing_group(const GradualSubgroup& s) { return is_decreasing(s.as_subset()); }

bool is_strict_decreasing_group(const GradualSubgroup& s) { return s == interior_d_group(s); }

GradualSubgroup langle_product_c(const GradualSubgroup& a, const GradualSubgroup& b) {
    require_same_group(a.group, b.group);
    auto gen_product = [&](const ElemSet& x, const ElemSet& y) {
        return subgroup_generated(a.group, setwise_product(a.group, x, y));
    };
    GradualSubgroup lhs =
        closure_c_group(GradualSubgroup{a.group, step_zip(a.map, b.map, gen_product)});
    GradualSubgroup rhs{a.group, step_zip(closure_c_group(a).map, closure_c_group(b).map,
                                          gen_product)};
    if (!(lhs == rhs)) throw Error("closure/product exchange law violated");
    return lhs;
}

bool is_normal_gradual(const GradualSubgroup& s) {
    for (const auto& p : s.map.pieces)
        if (!is_normal(s.group, p.value)) return false;
    return true;
}

GradualQuotientGroup quotient_gradual(const GradualSubgroup& s) {
    if (!is_normal_gradual(s)) throw NotNormal();
    auto levels = step_transform(s.map, [&](const ElemSet& v) {
        Quotient q = quotient(s.group, v);
        return QuotientPiece{std::move(q.group), std::move(q.projection)};
    });
    return GradualQuotientGroup{s.group, std::move(levels)};
}

GradualSubgroup kernel_of(const GradualQuotientGroup& q) {
    auto map = step_transform(q.levels, [&](const QuotientPiece& p) {
        const int e_coset = p.projection[static_cast<size_t>(q.source.identity())];
        ElemSet k;
        for (int g = 0; g < q.source.order(); ++g)
            if (p.projection[static_cast<size_t>(g)] == e_coset) k.set(static_cast<size_t>(g));
        return k;
    });
    return make_gradual_subgroup(q.source, std::move(map));
}

StepMap<ComparisonPiece> comparison_homs(const GradualSubgroup& a, const GradualSubgroup& b) {
    require_same_group(a.group, b.group);
    if (!is_subset(a.as_subset(), b.as_subset())) throw NotIncluded();
    if (!is_normal_gradual(a) || !is_normal_gradual(b)) throw NotNormal();
    return step_zip(a.map, b.map, [&](const ElemSet& s1, const ElemSet& s2) {
        Quotient q1 = quotient(a.group, s1);
        Quotient q2 = quotient(a.group, s2);
        std::vector<int> h(static_cast<size_t>(q1.group.order()), -1);
        for (int g = 0; g < a.group.order(); ++g)
            h[static_cast<size_t>(q1.projection[static_cast<size_t>(g)])] =
                q2.projection[static_cast<size_t>(g)];
        return ComparisonPiece{QuotientPiece{std::move(q1.group), std::move(q1.projection)},
                               QuotientPiece{std::move(q2.group), std::move(q2.projection)},
                               std::move(h)};
    });
}

std::optional<std::pair<int, int>> fuzzy_subgroup_violation(const FiniteGroup& G,
                                                            const FuzzySubset& mu) {
    if (!(mu.ground == G.ground())) throw GroundMismatch("fuzzy subset not over the group");
    for (int x = 0; x < G.order(); ++x)
        for (int y = 0; y < G.order(); ++y) {
            const Rational& lhs = mu.grade(G.op(x, G.inverse(y)));
            if (lhs < std::min(mu.grade(x), mu.grade(y))) return std::make_pair(x, y);
        }
    return std::nullopt;
}

bool is_fuzzy_subgroup(const FiniteGroup& G, const FuzzySubset& mu) {
    bool nonzero = false;
    for (const auto& g : mu.grades)
        if (g > 0) nonzero = true;
    return nonzero && !fuzzy_subgroup_violation(G, mu);
}

FuzzySubgroupClass normalize_mu1(const FiniteGroup& G, const FuzzySubset& mu) {
    if (!is_fuzzy_subgroup(G, mu)) throw NotFuzzySubgroup();
    FuzzySubset rep = mu;
    rep.grades[static_cast<size_t>(G.identity())] = 1;
    return FuzzySubgroupClass{G, std::move(rep)};
}

bool classes_equal(const FuzzySubgroupClass& a, const FuzzySubgroupClass& b) {
    if (!(a.group == b.group)) return false;
    return a.rep == b.rep; // representatives already agree at the identity
}

ClassProduct class_product(const FuzzySubgroupClass& a, const FuzzySubgroupClass& b) {
    require_same_group(a.group, b.group);
    const FiniteGroup& G = a.group;
    std::vector<Rational> grades(static_cast<size_t>(G.order()), Rational(0));
    for (int y = 0; y < G.order(); ++y)
        for (int z = 0; z < G.order(); ++z) {
            const Rational m = std::min(a.rep.grade(y), b.rep.grade(z));
            auto& g = grades[static_cast<size_t>(G.op(y, z))];
            if (m > g) g = m;
        }
    grades[static_cast<size_t>(G.identity())] = 1;
    FuzzySubset product = make_fuzzy_subset(G.ground(), std::move(grades));
    ClassProduct out{product, std::nullopt};
    if (is_fuzzy_subgroup(G, product)) out.as_class = FuzzySubgroupClass{G, std::move(product)};
    return out;
}

GradualSubgroup nu_group(const FuzzySubgroupClass& c) {
    return make_gradual_subgroup(c.group, nu(c.rep).map);
}

FuzzySubgroupClass upsilon_group(const GradualSubgroup& s) {
    if (!has_property_F(s.as_subset())) throw PropertyFViolated();
    FuzzySubset mu = upsilon(s.as_subset());
    if (!is_fuzzy_subgroup(s.group, mu)) throw NotFuzzySubgroup();
    return FuzzySubgroupClass{s.group, std::move(mu)};
}

GradualSubgroup nu_tilde_group(const FuzzySubgroupClass& c) {
    return make_gradual_subgroup(c.group, nu_tilde(c.rep).map);
}

FuzzySubgroupClass upsilon_tilde_group(const GradualSubgroup& s) {
    if (!has_property_infF(s.as_subset())) throw PropertyInfFViolated();
    FuzzySubset mu = upsilon_tilde(s.as_subset());
    if (!is_fuzzy_subgroup(s.group, mu)) throw NotFuzzySubgroup();
    return FuzzySubgroupClass{s.group, std::move(mu)};
}

bool is_normal_fuzzy(const FiniteGroup& G, const FuzzySubset& mu) {
    if (!is_fuzzy_subgroup(G, mu)) throw NotFuzzySubgroup();
    for (int x = 0; x < G.order(); ++x)
        for (int y = 0; y < G.order(); ++y)
            if (mu.grade(G.op(x, y)) != mu.grade(G.op(y, x))) return false;
    return true;
}

StepMap<FractionPiece> fraction(const GradualSubgroup& a, const GradualSubgroup& b) {
    require_same_group(a.group, b.group);
    if (!is_normal_gradual(a)) throw NotNormal();
    return step_zip(a.map, b.map, [&](const ElemSet& s1, const ElemSet& s2) {
        Quotient q = quotient(a.group, s1);
        ElemSet value;
        for (int g : members(setwise_product(a.group, s1, s2),
                             static_cast<size_t>(a.group.order())))
            value.set(static_cast<size_t>(q.projection[static_cast<size_t>(g)]));
        return FractionPiece{QuotientPiece{std::move(q.group), std::move(q.projection)}, value};
    });
}

GradualSubgroup image_subgroup(const GroupHom& f, const GradualSubgroup& s) {
    require_same_group(f.source, s.group);
    auto map = step_transform(s.map, [&](const ElemSet& v) { return hom_image(f, v); });
    return make_gradual_subgroup(f.target, std::move(map));
}

GradualSubgroup preimage_subgroup(const GroupHom& f, const GradualSubgroup& t) {
    require_same_group(f.target, t.group);
    auto map = step_transform(t.map, [&](const ElemSet& v) { return hom_preimage(f, v); });
    return make_gradual_subgroup(f.source, std::move(map));
}

} // namespace gradual
