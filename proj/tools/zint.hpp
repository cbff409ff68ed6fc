#ifndef TOOLS_ZINT_HPP
#define TOOLS_ZINT_HPP

#include <vector>

#include "gradual/rational.hpp"

// Two formula-backed fuzzy subgroups of the integers:
//   mu1(0)=1, mu1(x)=0 off 2Z, 1-(2/3)^t when 2^t exactly divides x;
//   mu2(0)=1, mu2(x)=0 off 3Z, 1/2-(1/3)^t when 3^t exactly divides x.
// The max-min convolution (mu1 mu2)(x) approaches 1/2 without attaining it;
// everything here is evaluated on demand, bounded by window and t_max.
namespace zint {

gradual::Rational mu1(long long x);
gradual::Rational mu2(long long x);

struct TWitness {
    int t;
    long long y;               // argument with min(mu1(y), mu2(x-y)) >= bound
    gradual::Rational value;
    gradual::Rational bound;   // 1/2 - (1/3)^t
    bool found;
};

struct Report {
    long long x{0};
    long long window{0};
    int t_max{0};
    gradual::Rational running_max; // max of min(mu1(y), mu2(x-y)) over |y| <= window
    long long argmax{0};
    bool all_below_half{false};
    std::vector<TWitness> witnesses;   // searched over |y| <= witness_window
    long long witness_window{10000};
    bool x_in_level_sum{false};        // x ∈ (mu1)_{1/2} + (mu2)_{1/2} = 4Z
};

Report demo(long long x, long long window, int t_max);

} // namespace zint

#endif
