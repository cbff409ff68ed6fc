#include "gradual/step_map.hpp"

namespace gradual {

std::vector<IntervalPiece> refined_partition(const std::vector<Rational>& cuts) {
    std::vector<IntervalPiece> out;
    Rational prev(0);
    for (const auto& c : cuts) {
        out.push_back(IntervalPiece{prev, c, false, false});
        out.push_back(IntervalPiece::singleton(c));
        prev = c;
    }
    if (prev < 1) out.push_back(IntervalPiece{prev, Rational(1), false, false});
    out.push_back(IntervalPiece::singleton(Rational(1)));
    return out;
}

} // namespace gradual
