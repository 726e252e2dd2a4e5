#include "oracle/brute_density.hpp"

namespace hyperopic::oracle {

std::optional<std::pair<long long, long long>> brute_balance(const Rational& target, int i, int j,
                                                             long long cap) {
    long long a = target.num();
    long long b = target.den();
    for (long long x = 0; x <= cap; x += 2) {
        long long half = (i + x) / 2 + 1;
        for (long long y = 0; y <= cap; ++y) {
            if (half * b == a * (i + j + x + y)) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

} // namespace hyperopic::oracle
