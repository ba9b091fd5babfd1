#include "toricfan/linalg.hpp"

#include <stdexcept>

namespace toricfan::linalg {

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[r], m[p]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k)
            m[r][k] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(m[r][k]) != 0)
                    m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RationalMatrix& rows, std::size_t cols) {
    RationalMatrix m = rows;
    return rref(m, cols).size();
}

std::size_t rank(const IntMatrix& rows) {
    if (rows.empty())
        return 0;
    return rank(to_rational(rows), rows.front().size());
}

RationalMatrix nullspace(const RationalMatrix& rows, std::size_t cols) {
    RationalMatrix m = rows;
    const auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    RationalMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        RationalVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix row_basis(const RationalMatrix& rows, std::size_t cols) {
    RationalMatrix m = rows;
    const auto pivots = rref(m, cols);
    m.resize(pivots.size());
    return m;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b,
                                    std::size_t cols) {
    if (m.size() != b.size())
        throw std::invalid_argument("solve: row count mismatch");
    RationalMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i)
        aug[i].push_back(b[i]);
    const auto pivots = rref(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    RationalVector x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug[i][cols];
    return x;
}

RationalMatrix transpose(const RationalMatrix& m, std::size_t cols) {
    RationalMatrix t(cols, RationalVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            t[j][i] = m[i][j];
    return t;
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out;
    out.reserve(m.size());
    for (const auto& row : m)
        out.push_back(toricfan::to_rational(row));
    return out;
}

RationalVector mul(const RationalMatrix& m, const RationalVector& x) {
    RationalVector y;
    y.reserve(m.size());
    for (const auto& row : m)
        y.push_back(dot(row, x));
    return y;
}

mpz_class determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            throw std::invalid_argument("determinant: matrix not square");
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long>(m[i][j]);
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace toricfan::linalg
