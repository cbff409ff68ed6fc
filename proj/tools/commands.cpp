#include "commands.hpp"

#include <iostream>
#include <sstream>

#include "doc.hpp"
#include "paper_examples.hpp"
#include "zint.hpp"

namespace commands {

using namespace gradual;
using doc::json;

namespace {

void emit(const Options& opt, const json& j) {
    if (opt.output.empty())
        std::cout << j.dump(2) << "\n";
    else
        doc::save_file(opt.output, j);
}

json load_one(const Options& opt) {
    if (opt.inputs.size() != 1) throw doc::BadDocument("exactly one --input required");
    return doc::load_file(opt.inputs.front());
}

std::string set_str(const ElemSet& s, const GroundSet& g) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int x : members(s, g.size())) {
        if (!first) out << ",";
        out << g.names[static_cast<size_t>(x)];
        first = false;
    }
    out << "}";
    return out.str();
}

// Name the first element whose profile breaks the requested property.
std::string offending_element(const GradualSubset& s, bool strict) {
    for (size_t x = 0; x < s.ground.size(); ++x) {
        MembershipProfile prof = membership_profile(s, static_cast<int>(x));
        if (prof.empty()) continue;
        if (!strict && !prof.sup_attained()) return s.ground.names[x];
        if (strict && prof.sup() == 1 && !prof.sup_attained() && !prof.covers_all())
            return s.ground.names[x];
    }
    return "?";
}

int convert_to_fuzzy(const Options& opt, const GradualSubset& s, bool strict) {
    try {
        FuzzySubset mu = strict ? upsilon_tilde(s) : upsilon(s);
        emit(opt, doc::to_json(mu));
        return kOk;
    } catch (const PropertyFViolated&) {
        std::cerr << "property (F) violated: element '" << offending_element(s, false)
                  << "' never attains its top membership level\n";
    } catch (const PropertyInfFViolated&) {
        std::cerr << "property (inf-F) violated: element '" << offending_element(s, true)
                  << "' fills (0,1) without a membership level at 1\n";
    } catch (const NotDecreasing&) {
        std::cerr << "property (F) requires a decreasing map\n";
    } catch (const NotStrictDecreasing&) {
        std::cerr << "property (inf-F) requires a strict decreasing map\n";
    }
    return kBadInput;
}

} // namespace

int cmd_convert(const Options& opt) {
    const json j = load_one(opt);
    const std::string kind = doc::kind_of(j);
    if (opt.direction == "to-gradual" || opt.direction == "to-gradual-strict") {
        if (kind != "fuzzy-subset") throw doc::BadDocument("convert to-gradual needs a fuzzy-subset");
        FuzzySubset mu = doc::fuzzy_from_json(j);
        emit(opt, doc::to_json(opt.direction == "to-gradual" ? nu(mu) : nu_tilde(mu)));
        return kOk;
    }
    if (opt.direction == "to-fuzzy" || opt.direction == "to-fuzzy-strict") {
        if (kind != "gradual-subset") throw doc::BadDocument("convert to-fuzzy needs a gradual-subset");
        return convert_to_fuzzy(opt, doc::subset_from_json(j), opt.direction == "to-fuzzy-strict");
    }
    std::cerr << "unknown direction '" << opt.direction << "'\n";
    return kUsage;
}

int cmd_operator(const Options& opt) {
    if (opt.inputs.empty()) throw doc::BadDocument("at least one --input required");
    std::vector<GradualSubset> inputs;
    for (const auto& path : opt.inputs) inputs.push_back(doc::subset_from_json(doc::load_file(path)));

    GradualSubset result = inputs.front();
    if (opt.op == "closure" || opt.op == "interior") {
        if (inputs.size() != 1) throw doc::BadDocument(opt.op + " needs exactly one input");
        result = opt.op == "closure" ? closure_c(inputs.front()) : interior_d(inputs.front());
    } else if (opt.op == "union") {
        result = subset_union(inputs);
    } else if (opt.op == "intersection") {
        result = subset_intersection(inputs);
    } else if (opt.op == "modified-intersection") {
        result = modified_intersection(inputs);
    } else {
        std::cerr << "unknown operator '" << opt.op << "'\n";
        return kUsage;
    }
    if (!opt.alpha.empty()) {
        const Rational alpha = parse_rational(opt.alpha);
        std::cout << "value at " << to_string(alpha) << ": " << set_str(result.at(alpha), result.ground)
                  << "\n";
    }
    emit(opt, doc::to_json(result));
    return kOk;
}

int cmd_group(const Options& opt) {
    if (opt.inputs.empty()) throw doc::BadDocument("at least one --input required");
    std::vector<std::pair<FiniteGroup, FuzzySubset>> ins;
    for (const auto& path : opt.inputs)
        ins.push_back(doc::fuzzy_subgroup_from_json(doc::load_file(path)));
    const FiniteGroup& G = ins.front().first;

    if (opt.op == "check-fuzzy-subgroup") {
        auto violation = fuzzy_subgroup_violation(G, ins.front().second);
        if (violation) {
            std::cerr << "not a fuzzy subgroup: violated at (x,y) = ("
                      << G.names()[static_cast<size_t>(violation->first)] << ", "
                      << G.names()[static_cast<size_t>(violation->second)] << ")\n";
            return kBadInput;
        }
        std::cout << "fuzzy subgroup: yes\n";
        std::cout << "normal: " << (is_normal_fuzzy(G, ins.front().second) ? "yes" : "no") << "\n";
        return kOk;
    }
    if (opt.op == "to-gradual") {
        FuzzySubgroupClass cls = normalize_mu1(G, ins.front().second);
        emit(opt, doc::to_json(nu_tilde_group(cls).as_subset()));
        return kOk;
    }
    if (opt.op == "product") {
        if (ins.size() != 2) throw doc::BadDocument("product needs two fuzzy-subgroup inputs");
        if (!(ins[1].first == G)) throw GroundMismatch("inputs are over different groups");
        FuzzySubgroupClass c1 = normalize_mu1(G, ins[0].second);
        FuzzySubgroupClass c2 = normalize_mu1(G, ins[1].second);
        ClassProduct prod = class_product(c1, c2);
        if (!prod.as_class) {
            std::cerr << "the class product is not a fuzzy subgroup\n";
            return kBadInput;
        }
        GradualSubset lhs = nu_tilde_group(*prod.as_class).as_subset();
        GradualSubset rhs = product_gradual(nu_tilde_group(c1), nu_tilde_group(c2)).subset;
        std::cout << "strong levels of the product class:\n" << doc::to_json(lhs).dump(2) << "\n";
        std::cout << "levelwise product of strong levels:\n" << doc::to_json(rhs).dump(2) << "\n";
        if (!(lhs == rhs)) {
            std::cerr << "MISMATCH: the two maps differ\n";
            return kMismatch;
        }
        std::cout << "equal\n";
        return kOk;
    }
    if (opt.op == "normality") {
        FuzzySubgroupClass cls = normalize_mu1(G, ins.front().second);
        const bool fuzzy_normal = is_normal_fuzzy(G, cls.rep);
        const bool levelwise = is_normal_gradual(nu_tilde_group(cls));
        std::cout << "normal as a fuzzy subgroup: " << (fuzzy_normal ? "yes" : "no") << "\n";
        std::cout << "all strong levels normal:   " << (levelwise ? "yes" : "no") << "\n";
        if (fuzzy_normal != levelwise) {
            std::cerr << "MISMATCH: normality transfer failed\n";
            return kMismatch;
        }
        return kOk;
    }
    if (opt.op == "quotient") {
        FuzzySubgroupClass cls = normalize_mu1(G, ins.front().second);
        GradualSubgroup sg = nu_tilde_group(cls);
        if (!is_normal_gradual(sg)) {
            std::cerr << "some strong level is not normal; no quotient\n";
            return kBadInput;
        }
        GradualQuotientGroup q = quotient_gradual(sg);
        for (const auto& p : q.levels.pieces) {
            std::cout << p.iv.str() << " -> quotient of order " << p.value.group.order() << " {";
            for (size_t i = 0; i < p.value.group.names().size(); ++i)
                std::cout << (i ? "," : "") << p.value.group.names()[i];
            std::cout << "}\n";
        }
        return kOk;
    }
    std::cerr << "unknown group op '" << opt.op << "'\n";
    return kUsage;
}

int cmd_demo_zint(const Options& opt) {
    if (opt.window < 1 || opt.t_max < 1) {
        std::cerr << "--window and --t-max must be positive\n";
        return kUsage;
    }
    zint::Report r = zint::demo(opt.x, opt.window, opt.t_max);
    std::cout << "convolution of the two graded maps at x = " << r.x << ", window |y| <= "
              << r.window << "\n";
    std::cout << "running max = " << to_string(r.running_max) << " at y = " << r.argmax << "\n";
    std::cout << "bound 1/2 " << (r.all_below_half ? "never attained in the window"
                                                   : "attained in the window")
              << "\n";
    for (const auto& w : r.witnesses) {
        std::cout << "t = " << w.t << ": bound " << to_string(w.bound);
        if (w.found)
            std::cout << " reached at y = " << w.y << " with value " << to_string(w.value) << "\n";
        else
            std::cout << " not reached for |y| <= " << r.witness_window << "\n";
    }
    std::cout << "1/2-level sum is 4Z; x = " << r.x
              << (r.x_in_level_sum ? " belongs to it\n" : " is outside it\n");
    return kOk;
}

int cmd_paper_examples(const Options&) {
    auto blocks = examples::run_blocks();
    int bad = 0;
    for (const auto& b : blocks) {
        std::cout << "[" << (b.ok ? "PASS" : "FAIL") << "] " << b.name << "\n" << b.report;
        if (!b.ok) {
            std::cerr << "block '" << b.name << "' failed\n";
            ++bad;
        }
    }
    return bad == 0 ? kOk : kMismatch;
}

} // namespace commands
