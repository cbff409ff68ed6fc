#include "gradual/fuzzy.hpp"

#include <algorithm>

namespace gradual {

namespace {

Rational half_pow(int n) {
    return Rational(boost::multiprecision::cpp_int(1), boost::multiprecision::cpp_int(1) << n);
}

} // namespace

FuzzySubset make_fuzzy_subset(GroundSet ground, std::vector<Rational> grades) {
    if (grades.size() != ground.size()) throw GroundMismatch("one grade per element required");
    for (const auto& g : grades)
        if (g < 0 || g > 1) throw BadGrade("grade out of [0,1]: " + to_string(g));
    return FuzzySubset{std::move(ground), std::move(grades)};
}

ElemSet alpha_level(const FuzzySubset& mu, const Rational& alpha) {
    ElemSet s;
    for (size_t x = 0; x < mu.grades.size(); ++x)
        if (mu.grades[x] >= alpha) s.set(x);
    return s;
}

ElemSet strong_alpha_level(const FuzzySubset& mu, const Rational& alpha) {
    ElemSet s;
    for (size_t x = 0; x < mu.grades.size(); ++x)
        if (alpha == 1 ? mu.grades[x] >= 1 : mu.grades[x] > alpha) s.set(x);
    return s;
}

namespace {

std::vector<Rational> grade_cuts(const FuzzySubset& mu) {
    std::vector<Rational> cuts;
    for (const auto& g : mu.grades)
        if (g > 0 && g < 1) cuts.push_back(g);
    sort_unique(cuts);
    return cuts;
}

} // namespace

GradualSubset nu(const FuzzySubset& mu) {
    auto map = build_step_map<ElemSet>(grade_cuts(mu),
                                       [&](const Rational& a) { return alpha_level(mu, a); });
    return GradualSubset{mu.ground, std::move(map)};
}

GradualSubset nu_tilde(const FuzzySubset& mu) {
    auto map = build_step_map<ElemSet>(grade_cuts(mu),
                                       [&](const Rational& a) { return strong_alpha_level(mu, a); });
    return GradualSubset{mu.ground, std::move(map)};
}

FuzzySubset upsilon(const GradualSubset& s) {
    if (!has_property_F(s)) throw PropertyFViolated();
    std::vector<Rational> grades(s.ground.size(), Rational(0));
    for (size_t x = 0; x < s.ground.size(); ++x) {
        MembershipProfile prof = membership_profile(s, static_cast<int>(x));
        if (!prof.empty()) grades[x] = prof.sup();
    }
    return FuzzySubset{s.ground, std::move(grades)};
}

FuzzySubset upsilon_tilde(const GradualSubset& s) {
    if (!has_property_infF(s)) throw PropertyInfFViolated();
    std::vector<Rational> grades(s.ground.size(), Rational(0));
    for (size_t x = 0; x < s.ground.size(); ++x) {
        MembershipProfile prof = membership_profile(s, static_cast<int>(x));
        if (prof.empty()) continue;                    // Inf over all of (0,1] -> 0
        grades[x] = prof.covers_all() ? 1 : prof.sup(); // Inf ∅ -> 1; else Inf [v,1] = v
    }
    return FuzzySubset{s.ground, std::move(grades)};
}

namespace {

FuzzySubset fold_fuzzy(const std::vector<FuzzySubset>& family, bool take_max) {
    if (family.empty()) throw EmptyFamily();
    FuzzySubset acc = family.front();
    for (size_t i = 1; i < family.size(); ++i) {
        if (!(family[i].ground == acc.ground)) throw GroundMismatch("ground sets differ");
        for (size_t x = 0; x < acc.grades.size(); ++x)
            acc.grades[x] = take_max ? std::max(acc.grades[x], family[i].grades[x])
                                     : std::min(acc.grades[x], family[i].grades[x]);
    }
    return acc;
}

} // namespace

FuzzySubset fuzzy_union(const std::vector<FuzzySubset>& family) { return fold_fuzzy(family, true); }

FuzzySubset fuzzy_intersection(const std::vector<FuzzySubset>& family) {
    return fold_fuzzy(family, false);
}

FuzzySubset SymbolicFamily::member(int n) const {
    std::vector<Rational> grades(limit.size());
    for (size_t x = 0; x < limit.size(); ++x)
        grades[x] = limit[x] + Rational(dir[x]) * half_pow(n);
    return make_fuzzy_subset(ground, std::move(grades));
}

FuzzySubset SymbolicFamily::sup_family() const {
    std::vector<Rational> grades(limit.size());
    for (size_t x = 0; x < limit.size(); ++x)
        grades[x] = dir[x] > 0 ? Rational(limit[x] + half_pow(2)) : limit[x];
    return make_fuzzy_subset(ground, std::move(grades));
}

FuzzySubset SymbolicFamily::inf_family() const {
    std::vector<Rational> grades(limit.size());
    for (size_t x = 0; x < limit.size(); ++x)
        grades[x] = dir[x] < 0 ? Rational(limit[x] - half_pow(2)) : limit[x];
    return make_fuzzy_subset(ground, std::move(grades));
}

GradualSubset SymbolicFamily::infinite_union_nu() const {
    std::vector<Rational> cuts;
    for (size_t x = 0; x < limit.size(); ++x) {
        Rational edge = dir[x] > 0 ? Rational(limit[x] + half_pow(2)) : limit[x];
        if (edge > 0 && edge < 1) cuts.push_back(edge);
    }
    sort_unique(cuts);
    auto map = build_step_map<ElemSet>(cuts, [&](const Rational& a) {
        ElemSet s;
        for (size_t x = 0; x < limit.size(); ++x) {
            // x belongs iff some member grade reaches a
            bool in = dir[x] < 0   ? a < limit[x]
                      : dir[x] > 0 ? a <= limit[x] + half_pow(2)
                                   : a <= limit[x];
            if (in) s.set(x);
        }
        return s;
    });
    return GradualSubset{ground, std::move(map)};
}

GradualSubset SymbolicFamily::infinite_intersection_nu_tilde() const {
    std::vector<Rational> cuts;
    for (size_t x = 0; x < limit.size(); ++x) {
        Rational edge = dir[x] < 0 ? Rational(limit[x] - half_pow(2)) : limit[x];
        if (edge > 0 && edge < 1) cuts.push_back(edge);
    }
    sort_unique(cuts);
    auto map = build_step_map<ElemSet>(cuts, [&](const Rational& a) {
        ElemSet s;
        for (size_t x = 0; x < limit.size(); ++x) {
            bool in;
            if (a == 1) {
                in = dir[x] == 0 && limit[x] == 1; // all member grades equal 1
            } else {
                // x belongs iff every member grade exceeds a
                in = dir[x] > 0   ? a <= limit[x]
                     : dir[x] < 0 ? a < limit[x] - half_pow(2)
                                  : a < limit[x];
            }
            if (in) s.set(x);
        }
        return s;
    });
    return GradualSubset{ground, std::move(map)};
}

namespace {

SymbolicFamily two_point_family(int dir_b) {
    SymbolicFamily fam;
    fam.ground = GroundSet({"a", "b"});
    fam.limit = {Rational(1), Rational(1, 2)};
    fam.dir = {0, dir_b};
    return fam;
}

} // namespace

FamilyGapReport counterexample_ascending(int N) {
    if (N < 2) throw EmptyFamily("need N >= 2");
    FamilyGapReport rep;
    rep.family = two_point_family(-1);
    rep.limit_map = nu(rep.family.sup_family());
    std::vector<GradualSubset> finite, finite_strong;
    for (int n = 2; n <= N; ++n) {
        finite.push_back(nu(rep.family.member(n)));
        finite_strong.push_back(nu_tilde(rep.family.member(n)));
    }
    rep.finite_combo = subset_union(finite);
    rep.symbolic_combo = rep.family.infinite_union_nu();
    const Rational half(1, 2);
    rep.limit_at_half = rep.limit_map.at(half);
    rep.finite_at_half = rep.finite_combo.at(half);
    rep.proper = subset_of(rep.finite_at_half, rep.limit_at_half) &&
                 rep.finite_at_half != rep.limit_at_half;
    // The strong-level maps show no gap at the witness level.
    rep.dual_side_closes_gap =
        subset_union(finite_strong).at(half) == nu_tilde(rep.family.sup_family()).at(half);
    return rep;
}

FamilyGapReport counterexample_descending(int N) {
    if (N < 2) throw EmptyFamily("need N >= 2");
    FamilyGapReport rep;
    rep.family = two_point_family(+1);
    rep.limit_map = nu_tilde(rep.family.inf_family());
    std::vector<GradualSubset> finite;
    for (int n = 2; n <= N; ++n) finite.push_back(nu_tilde(rep.family.member(n)));
    rep.finite_combo = subset_intersection(finite);
    rep.symbolic_combo = rep.family.infinite_intersection_nu_tilde();
    const Rational half(1, 2);
    rep.limit_at_half = rep.limit_map.at(half);
    rep.finite_at_half = rep.finite_combo.at(half);
    rep.proper = subset_of(rep.limit_at_half, rep.finite_at_half) &&
                 rep.finite_at_half != rep.limit_at_half;
    // Taking the interior of the exact infinite intersection recovers the limit.
    rep.dual_side_closes_gap = interior_d(rep.symbolic_combo) == rep.limit_map;
    return rep;
}

} // namespace gradual
