#include "doc.hpp"

#include <fstream>

namespace doc {

using namespace gradual;

namespace {

Rational rat_field(const json& j) {
    if (!j.is_string()) throw BadDocument("rationals must be \"p/q\" strings");
    return parse_rational(j.get<std::string>());
}

json rat_json(const Rational& r) { return to_string(r); }

ElemSet elems_from_json(const json& j, const GroundSet& ground) {
    ElemSet s;
    for (const auto& name : j) s.set(static_cast<size_t>(ground.index(name.get<std::string>())));
    return s;
}

json elems_to_json(const ElemSet& s, const GroundSet& ground) {
    json out = json::array();
    for (int x : members(s, ground.size())) out.push_back(ground.names[static_cast<size_t>(x)]);
    return out;
}

void require_kind(const json& j, const std::string& kind) {
    if (kind_of(j) != kind) throw BadDocument("expected a " + kind + " document, got " + kind_of(j));
}

} // namespace

std::string kind_of(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw BadDocument("document has no kind tag");
    return j["kind"].get<std::string>();
}

json to_json(const GroundSet& g) {
    json out = json::array();
    for (const auto& n : g.names) out.push_back(n);
    return out;
}

GroundSet ground_from_json(const json& j) {
    if (!j.is_array()) throw BadDocument("ground must be an array of names");
    std::vector<std::string> names;
    for (const auto& n : j) names.push_back(n.get<std::string>());
    return GroundSet(names);
}

json to_json(const FuzzySubset& mu) {
    json grades = json::array();
    for (const auto& g : mu.grades) grades.push_back(rat_json(g));
    return json{{"kind", "fuzzy-subset"}, {"ground", to_json(mu.ground)}, {"grades", grades}};
}

FuzzySubset fuzzy_from_json(const json& j) {
    require_kind(j, "fuzzy-subset");
    GroundSet ground = ground_from_json(j.at("ground"));
    std::vector<Rational> grades;
    for (const auto& g : j.at("grades")) grades.push_back(rat_field(g));
    return make_fuzzy_subset(std::move(ground), std::move(grades));
}

json to_json(const GradualSubset& s) {
    json pieces = json::array();
    for (const auto& p : s.map.pieces)
        pieces.push_back(json{{"lo", rat_json(p.iv.lo)},
                              {"hi", rat_json(p.iv.hi)},
                              {"lo_closed", p.iv.lo_closed},
                              {"hi_closed", p.iv.hi_closed},
                              {"value", elems_to_json(p.value, s.ground)}});
    return json{{"kind", "gradual-subset"}, {"ground", to_json(s.ground)}, {"pieces", pieces}};
}

GradualSubset subset_from_json(const json& j) {
    require_kind(j, "gradual-subset");
    GroundSet ground = ground_from_json(j.at("ground"));
    std::vector<StepMap<ElemSet>::Piece> pieces;
    for (const auto& p : j.at("pieces"))
        pieces.push_back({IntervalPiece::make(rat_field(p.at("lo")), rat_field(p.at("hi")),
                                              p.at("lo_closed").get<bool>(),
                                              p.at("hi_closed").get<bool>()),
                          elems_from_json(p.at("value"), ground)});
    return GradualSubset{std::move(ground), make_step_map<ElemSet>(std::move(pieces))};
}

json to_json(const FiniteGroup& g) {
    json table = json::array();
    for (int a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.op(a, b));
        table.push_back(row);
    }
    json names = json::array();
    for (const auto& n : g.names()) names.push_back(n);
    return json{{"kind", "group"}, {"names", names}, {"table", table}};
}

FiniteGroup group_from_json(const json& j) {
    require_kind(j, "group");
    std::vector<std::string> names;
    for (const auto& n : j.at("names")) names.push_back(n.get<std::string>());
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
    return FiniteGroup::from_cayley(std::move(table), std::move(names));
}

json fuzzy_subgroup_to_json(const FiniteGroup& g, const FuzzySubset& mu) {
    json group = to_json(g);
    group.erase("kind");
    json grades = json::array();
    for (const auto& v : mu.grades) grades.push_back(rat_json(v));
    return json{{"kind", "fuzzy-subgroup"}, {"group", group}, {"grades", grades}};
}

std::pair<FiniteGroup, FuzzySubset> fuzzy_subgroup_from_json(const json& j) {
    require_kind(j, "fuzzy-subgroup");
    json group = j.at("group");
    group["kind"] = "group";
    FiniteGroup g = group_from_json(group);
    std::vector<Rational> grades;
    for (const auto& v : j.at("grades")) grades.push_back(rat_field(v));
    FuzzySubset mu = make_fuzzy_subset(g.ground(), std::move(grades));
    return {std::move(g), std::move(mu)};
}

json to_json(const SampledSubsetSystem& s) {
    json levels = json::array();
    for (const auto& lv : s.system.grid.levels) levels.push_back(rat_json(lv));
    json elements = json::array();
    for (const auto& carrier : s.elements) {
        ElemSet v;
        for (int x : carrier) v.set(static_cast<size_t>(x));
        elements.push_back(elems_to_json(v, s.ground));
    }
    return json{{"kind", "system"},
                {"ground", to_json(s.ground)},
                {"levels", levels},
                {"elements", elements}};
}

SampledSubsetSystem system_from_json(const json& j) {
    require_kind(j, "system");
    GroundSet ground = ground_from_json(j.at("ground"));
    std::vector<Rational> levels;
    for (const auto& lv : j.at("levels")) levels.push_back(rat_field(lv));
    LevelGrid grid = make_level_grid(levels);
    if (j.at("elements").size() != grid.size())
        throw BadDocument("one element list per level required");
    // rebuild through the subset so transitions are the canonical inclusions
    std::vector<StepMap<ElemSet>::Piece> pieces;
    Rational prev(0);
    for (size_t i = 0; i < grid.size(); ++i) {
        pieces.push_back({IntervalPiece::make(prev, grid.levels[i], false, true),
                          elems_from_json(j.at("elements")[i], ground)});
        prev = grid.levels[i];
    }
    GradualSubset s{ground, make_step_map<ElemSet>(std::move(pieces))};
    return subset_to_system(s, grid);
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadDocument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw BadDocument(std::string("invalid document: ") + e.what());
    }
    return j;
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw BadDocument("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace doc
