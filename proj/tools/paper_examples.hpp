#ifndef TOOLS_PAPER_EXAMPLES_HPP
#define TOOLS_PAPER_EXAMPLES_HPP

#include <string>
#include <vector>

// Worked-example regression blocks: each recomputes a known small scenario
// and compares against frozen expected values, reporting a text table.
namespace examples {

struct Block {
    std::string name;
    bool ok;
    std::string report; // expected-vs-computed table
};

std::vector<Block> run_blocks();
bool all_ok(const std::vector<Block>& blocks);

} // namespace examples

#endif
