#include "toricfan/gale.hpp"

#include "toricfan/geometry.hpp"
#include "toricfan/linalg.hpp"

#include <algorithm>
#include <limits>

namespace toricfan {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("integer entry exceeds 64 bits");
    return z.get_si();
}

ZMatrix to_z(const IntMatrix& m) {
    ZMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto x : m[i])
            out[i].emplace_back(static_cast<long>(x));
    return out;
}

IntMatrix from_z(const ZMatrix& m) {
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i])
            out[i].push_back(to_int64(x));
    return out;
}

// Row Hermite form: pivots positive, entries above pivots reduced into [0, pivot).
ZMatrix hermite(ZMatrix m) {
    if (m.empty())
        return m;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        while (true) {
            std::size_t best = m.size();
            for (std::size_t i = row; i < m.size(); ++i)
                if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c])))
                    best = i;
            if (best == m.size())
                break;
            std::swap(m[row], m[best]);
            bool clean = true;
            for (std::size_t i = row + 1; i < m.size(); ++i) {
                if (m[i][c] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[row][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j)
                    m[i][j] -= q * m[row][j];
                if (m[i][c] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (row < m.size() && m[row][c] != 0) {
            if (m[row][c] < 0)
                for (auto& x : m[row])
                    x = -x;
            for (std::size_t i = 0; i < row; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[row][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j)
                    m[i][j] -= q * m[row][j];
            }
            ++row;
        }
    }
    m.resize(row);
    return m;
}

} // namespace

std::string coordinate_label(std::size_t i) {
    if (i < 26)
        return std::string(1, static_cast<char>('a' + i));
    return "x" + std::to_string(i + 1);
}

std::string RaySystem::label(std::size_t i) const { return coordinate_label(i); }

RationalVector WeightSystem::beta(std::size_t i) const {
    RationalVector b(r);
    for (std::size_t k = 0; k < r; ++k)
        b[k] = static_cast<long>(rows[k][i]);
    return b;
}

RaySystem validate_rays(const std::vector<IntVector>& rays) {
    if (rays.empty())
        throw NotSpanning("validate_rays: no rays");
    RaySystem rs;
    rs.n = rays.front().size();
    rs.s = rays.size();
    if (rs.n == 0 || rs.n > rs.s)
        throw NotSpanning("validate_rays: need 1 <= n <= s");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].size() != rs.n)
            throw RaySystemError("validate_rays: ray " + std::to_string(i + 1) +
                                 " has the wrong length");
        if (std::all_of(rays[i].begin(), rays[i].end(), [](auto x) { return x == 0; }))
            throw NotSpanning("validate_rays: zero ray");
        IntVector p = primitive(rays[i]);
        if (p != rays[i])
            rs.warnings.push_back("ray " + coordinate_label(i) + " " + to_string(rays[i]) +
                                  " normalized to " + to_string(p));
        rs.rays.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < rs.s; ++i)
        for (std::size_t j = i + 1; j < rs.s; ++j)
            if (rs.rays[i] == rs.rays[j])
                throw DuplicateRay("validate_rays: rays " + coordinate_label(i) + " and " +
                                   coordinate_label(j) + " coincide");
    RationalMatrix pts;
    for (const auto& r : rs.rays)
        pts.push_back(to_rational(r));
    if (!positively_spans(pts, rs.n))
        throw NotSpanning("validate_rays: rays do not positively span R^" +
                          std::to_string(rs.n));
    return rs;
}

WeightSystem gale_dual(const RaySystem& rs) {
    // Column reduction of A tracking the unimodular transform U; the columns
    // of U past the pivots span the integer kernel.
    const std::size_t n = rs.n, s = rs.s;
    ZMatrix a(n, std::vector<mpz_class>(s));
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < n; ++i)
            a[i][j] = static_cast<long>(rs.rays[j][i]);
    ZMatrix u(s, std::vector<mpz_class>(s));
    for (std::size_t i = 0; i < s; ++i)
        u[i][i] = 1;
    auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t i = 0; i < n; ++i)
            a[i][dst] -= q * a[i][src];
        for (std::size_t i = 0; i < s; ++i)
            u[i][dst] -= q * u[i][src];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < n; ++i)
            std::swap(a[i][x], a[i][y]);
        for (std::size_t i = 0; i < s; ++i)
            std::swap(u[i][x], u[i][y]);
    };
    std::size_t c = 0;
    for (std::size_t i = 0; i < n && c < s; ++i) {
        while (true) {
            std::size_t best = s;
            for (std::size_t j = c; j < s; ++j)
                if (a[i][j] != 0 && (best == s || abs(a[i][j]) < abs(a[i][best])))
                    best = j;
            if (best == s)
                break;
            col_swap(c, best);
            bool clean = true;
            for (std::size_t j = c + 1; j < s; ++j) {
                if (a[i][j] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[i][c].get_mpz_t());
                col_op(j, c, q);
                if (a[i][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a[i][c] != 0)
            ++c;
    }
    ZMatrix kernel;
    for (std::size_t j = c; j < s; ++j) {
        std::vector<mpz_class> row(s);
        for (std::size_t i = 0; i < s; ++i)
            row[i] = u[i][j];
        kernel.push_back(std::move(row));
    }
    WeightSystem ws;
    ws.s = s;
    ws.rows = from_z(hermite(std::move(kernel)));
    ws.r = ws.rows.size();
    return ws;
}

IntMatrix hermite_rows(const IntMatrix& m) { return from_z(hermite(to_z(m))); }

mpz_class saturation_index(const IntMatrix& w) {
    const std::size_t r = w.size();
    if (r == 0)
        return 1;
    const std::size_t s = w.front().size();
    if (r > s)
        return 0;
    mpz_class g = 0;
    std::vector<bool> pick(s, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
    do {
        IntMatrix minor(r);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < s; ++j)
                if (pick[j])
                    minor[k].push_back(w[k][j]);
        mpz_class d = linalg::determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return g;
}

bool gale_roundtrip_check(const RaySystem& rs, const WeightSystem& ws) {
    if (ws.s != rs.s || ws.rows.size() != ws.r)
        return false;
    for (const auto& row : ws.rows) {
        if (row.size() != rs.s)
            return false;
        for (std::size_t i = 0; i < rs.n; ++i) {
            mpz_class acc = 0;
            for (std::size_t j = 0; j < rs.s; ++j)
                acc += mpz_class(static_cast<long>(rs.rays[j][i])) * static_cast<long>(row[j]);
            if (acc != 0)
                return false;
        }
    }
    IntMatrix a(rs.n, IntVector(rs.s));
    for (std::size_t j = 0; j < rs.s; ++j)
        for (std::size_t i = 0; i < rs.n; ++i)
            a[i][j] = rs.rays[j][i];
    if (linalg::rank(a) + linalg::rank(ws.rows) != rs.s)
        return false;
    return saturation_index(ws.rows) == 1;
}

} // namespace toricfan
