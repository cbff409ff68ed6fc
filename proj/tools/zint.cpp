#include "zint.hpp"

#include <cstdlib>

namespace zint {

using gradual::Rational;
using boost::multiprecision::cpp_int;

namespace {

Rational pow_frac(long long num, long long den, int t) {
    cpp_int n = 1, d = 1;
    for (int i = 0; i < t; ++i) {
        n *= num;
        d *= den;
    }
    return Rational(n, d);
}

int exact_valuation(long long x, long long p) {
    int t = 0;
    while (x % p == 0) {
        x /= p;
        ++t;
    }
    return t;
}

} // namespace

Rational mu1(long long x) {
    if (x == 0) return Rational(1);
    if (x % 2 != 0) return Rational(0);
    const int t = exact_valuation(std::llabs(x), 2);
    return Rational(1) - pow_frac(2, 3, t);
}

Rational mu2(long long x) {
    if (x == 0) return Rational(1);
    if (x % 3 != 0) return Rational(0);
    const int t = exact_valuation(std::llabs(x), 3);
    return Rational(1, 2) - pow_frac(1, 3, t);
}

Report demo(long long x, long long window, int t_max) {
    Report r;
    r.x = x;
    r.window = window;
    r.t_max = t_max;
    r.running_max = Rational(0);
    for (long long y = -window; y <= window; ++y) {
        const Rational v = std::min(mu1(y), mu2(x - y));
        if (v > r.running_max) {
            r.running_max = v;
            r.argmax = y;
        }
    }
    r.all_below_half = r.running_max < Rational(1, 2);
    for (int t = 1; t <= t_max; ++t) {
        TWitness w{t, 0, Rational(0), Rational(Rational(1, 2) - pow_frac(1, 3, t)), false};
        for (long long y = 0; y <= r.witness_window && !w.found; ++y)
            for (long long s : {y, -y}) {
                const Rational v = std::min(mu1(s), mu2(x - s));
                if (v >= w.bound) {
                    w.y = s;
                    w.value = v;
                    w.found = true;
                    break;
                }
            }
        r.witnesses.push_back(w);
    }
    // (mu1)_{1/2} = 4Z and (mu2)_{1/2} = {0}, so the level sum is 4Z.
    r.x_in_level_sum = (x % 4 == 0);
    return r;
}

} // namespace zint
