#include "macd/linalg.hpp"

namespace macd {

Rational det_cofactor(const Matrix& a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    Rational s = 0;
    for (int c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        Matrix m;
        for (int r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (int k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            m.push_back(std::move(row));
        }
        Rational term = a[0][c] * det_cofactor(m);
        if (c % 2) s -= term;
        else s += term;
    }
    return s;
}

Rational det_bareiss(Matrix a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    int sign = 1;
    Rational prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Rational(-a[n - 1][n - 1]);
}

Rational det(const Matrix& a) {
    return a.size() <= 4 ? det_cofactor(a) : det_bareiss(a);
}

std::vector<Rational> solve(Matrix a, std::vector<Rational> b) {
    int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) { p = r; break; }
        if (p < 0) throw SingularError("singular linear system");
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

Matrix identity_matrix(int n) {
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix inverse(const Matrix& a) {
    int n = static_cast<int>(a.size());
    Matrix inv(n, std::vector<Rational>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        auto col = solve(a, e);
        for (int i = 0; i < n; ++i) inv[i][j] = col[i];
    }
    return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    Matrix c(n, std::vector<Rational>(m, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

}  // namespace macd
