#ifndef TOOLS_COMMANDS_HPP
#define TOOLS_COMMANDS_HPP

#include <string>
#include <vector>

namespace commands {

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kMismatch = 1;  // regression/assertion mismatch
constexpr int kBadInput = 2;  // input or property violation
constexpr int kUsage = 64;

struct Options {
    std::vector<std::string> inputs;
    std::string output;
    std::string direction; // convert
    std::string op;        // operator, group
    std::string alpha;     // rational string
    long long x = 2;       // demo-zint
    long long window = 200;
    int t_max = 6;
};

int cmd_convert(const Options& opt);
int cmd_operator(const Options& opt);
int cmd_group(const Options& opt);
int cmd_demo_zint(const Options& opt);
int cmd_paper_examples(const Options& opt);

} // namespace commands

#endif
