#include "macd/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace macd {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!is_partition(parts_)) throw std::invalid_argument("not a partition: " + str());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

bool Partition::is_partition(const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
    }
    return true;
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (item.empty()) continue;
        size_t pos;
        int x = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad partition: " + s);
        v.push_back(x);
    }
    return Partition(v);
}

int Partition::size() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
}

std::vector<int> Partition::padded(int n) const {
    std::vector<int> v(parts_);
    if (static_cast<int>(v.size()) > n) throw LengthError("partition longer than " + std::to_string(n));
    v.resize(n, 0);
    return v;
}

int Partition::multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition conjugate(const Partition& p) {
    std::vector<int> c;
    for (int k = 1; k <= (p.length() ? p[0] : 0); ++k) {
        int cnt = 0;
        for (int x : p.parts())
            if (x >= k) ++cnt;
        c.push_back(cnt);
    }
    return Partition(c);
}

Rational z_lambda(const Partition& p) {
    mpz_class r = 1;
    int top = p.length() ? p[0] : 0;
    for (int i = 1; i <= top; ++i) {
        int m = p.multiplicity(i);
        for (int j = 0; j < m; ++j) r *= i;
        for (int j = 2; j <= m; ++j) r *= j;
    }
    return Rational(r);
}

namespace {

void gen(int n, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen(n - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, max_part < 0 ? n : max_part, max_length < 0 ? n + 1 : max_length, cur, out);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return sa == sb;
}

Rational b_lambda(const Partition& p, const QtPoint& pt, int n) {
    if (n < p.length()) throw LengthError("b_lambda needs n >= l(lambda)");
    const Rational &q = pt.q, &t = pt.t;
    Rational r = 1;
    for (int i = 1; i <= n; ++i) r *= poch_int(qpow(t, n + 1 - i), q, p[i - 1]) / poch_int(q * qpow(t, n - i), q, p[i - 1]);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int k = p[i - 1] - p[j - 1];
            Rational num = poch_int(q * qpow(t, j - i), q, k) * poch_int(qpow(t, j - i), q, k);
            Rational den = poch_int(qpow(t, j - i + 1), q, k) * poch_int(q * qpow(t, j - i - 1), q, k);
            if (den == 0) throw PoleError("b_lambda denominator");
            r *= num / den;
        }
    return r;
}

Rational b_lambda_first(const Partition& p, const QtPoint& pt) {
    const Rational &q = pt.q, &t = pt.t;
    Rational r = 1;
    int l = p.length();
    for (int i = 1; i <= l; ++i)
        for (int j = i; j <= l; ++j) {
            int k = p[j - 1] - p[j];
            int e = p[i - 1] - p[j - 1];
            Rational den = poch_int(qpow(q, e + 1) * qpow(t, j - i), q, k);
            if (den == 0) throw PoleError("b_lambda denominator");
            r *= poch_int(qpow(q, e) * qpow(t, j - i + 1), q, k) / den;
        }
    return r;
}

Rational b_lambda_second(const Partition& p, const QtPoint& pt) {
    const Rational &q = pt.q, &t = pt.t;
    Rational r = 1;
    int l = p.length();
    for (int i = 1; i <= l; ++i)
        for (int j = i; j <= l; ++j) {
            int a = p[i - 1] - p[j - 1], b = p[i - 1] - p[j];
            Rational num = poch_int(q * qpow(t, j - i), q, a) * poch_int(qpow(t, j - i + 1), q, b);
            Rational den = poch_int(qpow(t, j - i + 1), q, a) * poch_int(q * qpow(t, j - i), q, b);
            if (den == 0) throw PoleError("b_lambda denominator");
            r *= num / den;
        }
    return r;
}

}  // namespace macd
