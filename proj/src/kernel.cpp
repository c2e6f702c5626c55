#include "macd/kernel.hpp"

#include <omp.h>

namespace macd {

bool geq(const MultiIndex& m, const MultiIndex& k) {
    if (m.size() != k.size()) throw std::invalid_argument("multi-index length mismatch");
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] < k[i]) return false;
    return true;
}

int total(const MultiIndex& m) {
    int s = 0;
    for (int x : m) s += x;
    return s;
}

std::vector<MultiIndex> box(const MultiIndex& lo, const MultiIndex& hi) {
    std::vector<MultiIndex> out;
    if (!geq(hi, lo)) return out;
    MultiIndex k = lo;
    int n = static_cast<int>(lo.size());
    while (true) {
        out.push_back(k);
        int i = n - 1;
        while (i >= 0 && k[i] == hi[i]) {
            k[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++k[i];
    }
    return out;
}

namespace {

void compose(int n, int left, bool exact, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (static_cast<int>(cur.size()) == n) {
        if (!exact || left == 0) out.push_back(cur);
        return;
    }
    for (int a = 0; a <= left; ++a) {
        cur.push_back(a);
        compose(n, left - a, exact, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> compositions_upto(int n, int max_total, bool exact) {
    std::vector<MultiIndex> out;
    if (max_total < 0) return out;
    MultiIndex cur;
    compose(n, max_total, exact, cur, out);
    return out;
}

Rational region_sum_serial(const MultiIndex& lo, const MultiIndex& hi, const RegionTerm& term) {
    Rational s = 0;
    for (const auto& k : box(lo, hi)) s += term(k);
    return s;
}

Rational region_sum_parallel(const MultiIndex& lo, const MultiIndex& hi, const RegionTerm& term) {
    auto pts = box(lo, hi);
    long n = static_cast<long>(pts.size());
    int nt = omp_get_max_threads();
    std::vector<Rational> partial(nt, Rational(0));
    std::vector<std::exception_ptr> errors(nt);
#pragma omp parallel num_threads(nt)
    {
        int id = omp_get_thread_num();
#pragma omp for schedule(static)
        for (long i = 0; i < n; ++i) {
            if (errors[id]) continue;
            try {
                partial[id] += term(pts[i]);
            } catch (...) {
                errors[id] = std::current_exception();
            }
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Rational s = 0;
    for (const auto& p : partial) s += p;
    return s;
}

}  // namespace macd
