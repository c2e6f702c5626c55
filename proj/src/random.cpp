#include "macd/random.hpp"

namespace macd {

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t draw) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(draw >> 32)};
    return std::mt19937_64(seq);
}

Rational draw_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    while (true) {
        int a = num(rng);
        int b = den(rng);
        if (a == 0 || a == b || a == -b) continue;
        Rational r(a, b);
        r.canonicalize();
        return r;
    }
}

bool multiplicatively_dependent(const Rational& q, const Rational& t, int bound) {
    for (int i = -bound; i <= bound; ++i)
        for (int j = -bound; j <= bound; ++j) {
            if (i == 0 && j == 0) continue;
            if (qpow(q, i) * qpow(t, j) == 1) return true;
        }
    return false;
}

QtPoint draw_qt_point(std::mt19937_64& rng) {
    QtPoint pt;
    do {
        pt.q = draw_rational(rng);
        pt.t = draw_rational(rng);
    } while (multiplicatively_dependent(pt.q, pt.t));
    return pt;
}

}  // namespace macd
