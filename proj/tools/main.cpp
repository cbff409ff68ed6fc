#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "doc.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact rational toolkit for graded elements, subsets, and subgroups"};
    app.require_subcommand(0, 1);
    commands::Options opt;

    auto* convert = app.add_subcommand("convert", "Convert between fuzzy and gradual documents");
    convert->add_option("-i,--input", opt.inputs, "Input document")->required();
    convert->add_option("-o,--output", opt.output, "Output file (default: stdout)");
    convert->add_option("--to", opt.direction, "to-gradual | to-gradual-strict | to-fuzzy | to-fuzzy-strict")
        ->required();

    auto* oper = app.add_subcommand("operator", "Apply a level-map operator");
    oper->add_option("-i,--input", opt.inputs, "Input gradual-subset document(s)")->required();
    oper->add_option("-o,--output", opt.output, "Output file (default: stdout)");
    oper->add_option("--op", opt.op, "closure | interior | union | intersection | modified-intersection")
        ->required();
    oper->add_option("--alpha", opt.alpha, "Also print the level value at this rational");

    auto* group = app.add_subcommand("group", "Fuzzy subgroup operations");
    group->add_option("-i,--input", opt.inputs, "Input fuzzy-subgroup document(s)")->required();
    group->add_option("-o,--output", opt.output, "Output file (default: stdout)");
    group->add_option("--op", opt.op,
                      "check-fuzzy-subgroup | to-gradual | product | normality | quotient")
        ->required();

    auto* demo = app.add_subcommand("demo-zint", "Bounded-window convolution demo over the integers");
    demo->add_option("--x", opt.x, "Target integer (default 2)");
    demo->add_option("--window", opt.window, "Scan |y| <= window");
    demo->add_option("--t-max", opt.t_max, "Largest exponent for witness bounds");

    auto* paper = app.add_subcommand("paper-examples", "Run the worked-example regression blocks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return commands::kUsage;
    }

    try {
        if (convert->parsed()) return commands::cmd_convert(opt);
        if (oper->parsed()) return commands::cmd_operator(opt);
        if (group->parsed()) return commands::cmd_group(opt);
        if (demo->parsed()) return commands::cmd_demo_zint(opt);
        if (paper->parsed()) return commands::cmd_paper_examples(opt);
    } catch (const gradual::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return commands::kBadInput;
    }
    std::cout << app.help();
    return commands::kUsage;
}
