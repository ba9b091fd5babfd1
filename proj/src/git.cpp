#include "toricfan/git.hpp"

#include "toricfan/linalg.hpp"
#include "toricfan/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace toricfan {

namespace {

ConeRecord subset_cone(const WeightSystem& ws, Support j) {
    RationalMatrix g;
    for (std::size_t i = 0; i < ws.s; ++i)
        if (j >> i & 1U)
            g.push_back(ws.beta(i));
    if (g.empty())
        g.push_back(RationalVector(ws.r, Rational(0)));
    return cone_from_generators(g, ws.r);
}

} // namespace

std::vector<IntVector> secondary_rays(const WeightSystem& ws) {
    const Support full = static_cast<Support>((std::size_t{1} << ws.s) - 1);
    std::set<IntVector> rays;
    const ConeRecord big = subset_cone(ws, full);
    rays.insert(big.extremal_rays.begin(), big.extremal_rays.end());
    // Lower-dimensional subset cones, closed under pairwise intersection.
    std::map<std::vector<IntVector>, ConeRecord> family;
    for (Support j = 1; j <= full; ++j) {
        ConeRecord c = subset_cone(ws, j);
        if (c.dim < ws.r && c.dim > 0 && c.strictly_convex()) {
            auto key = c.extremal_rays;
            family.emplace(std::move(key), std::move(c));
        }
    }
    std::vector<ConeRecord> layer;
    for (auto& [k, c] : family)
        layer.push_back(c);
    while (!layer.empty()) {
        std::vector<ConeRecord> fresh;
        std::vector<ConeRecord> members;
        for (auto& [k, c] : family)
            members.push_back(c);
        for (const auto& a : layer)
            for (const auto& b : members) {
                ConeRecord x = intersect_cones(a, b);
                if (x.dim == 0 || family.count(x.extremal_rays))
                    continue;
                auto key = x.extremal_rays;
                family.emplace(std::move(key), x);
                fresh.push_back(std::move(x));
            }
        layer = std::move(fresh);
    }
    for (auto& [k, c] : family)
        if (c.dim == 1)
            rays.insert(c.extremal_rays.begin(), c.extremal_rays.end());
    return {rays.begin(), rays.end()};
}

std::vector<IntVector> chamber_samples(const std::vector<IntVector>& rays, std::size_t r,
                                       int depth) {
    std::set<IntVector> out(rays.begin(), rays.end());
    const std::size_t m = rays.size();
    if (m == 0)
        return {};
    const std::size_t n = rays.front().size();
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
        if (pick.size() >= 2) {
            std::vector<int> coef(pick.size(), 1);
            while (true) {
                IntVector v(n, 0);
                for (std::size_t k = 0; k < pick.size(); ++k)
                    for (std::size_t d = 0; d < n; ++d)
                        v[d] += coef[k] * rays[pick[k]][d];
                if (std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; }))
                    out.insert(primitive(v));
                std::size_t k = 0;
                while (k < coef.size() && coef[k] == depth)
                    coef[k++] = 1;
                if (k == coef.size())
                    break;
                ++coef[k];
            }
        }
        if (pick.size() == r)
            return;
        for (std::size_t i = start; i < m; ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return {out.begin(), out.end()};
}

SemistableOracle::SemistableOracle(const WeightSystem& ws, const PolytopeCatalog& cat)
    : cat_(&cat) {
    for (const auto& p : cat.polys)
        cones_.push_back(subset_cone(ws, p.members));
}

Collection SemistableOracle::collection(const RationalVector& chi) const {
    Collection c(cat_->size());
    for (std::size_t p = 0; p < cones_.size(); ++p)
        if (cone_contains(cones_[p], chi))
            c.set(p);
    return c;
}

Collection semistable_collection(const WeightSystem& ws, const PolytopeCatalog& cat,
                                 const RationalVector& chi) {
    return SemistableOracle(ws, cat).collection(chi);
}

IntVector lift_character(const WeightSystem& ws, const IntVector& chi) {
    if (chi.size() != ws.r)
        throw LiftFailure("lift_character: character has the wrong length");
    // Column-reduce W to lower triangular form W U = [L | 0], then solve L y = chi
    // by forward substitution over the integers; a = U (y, 0).
    const std::size_t r = ws.r, s = ws.s;
    std::vector<std::vector<mpz_class>> w(r, std::vector<mpz_class>(s));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j)
            w[i][j] = static_cast<long>(ws.rows[i][j]);
    std::vector<std::vector<mpz_class>> u(s, std::vector<mpz_class>(s));
    for (std::size_t i = 0; i < s; ++i)
        u[i][i] = 1;
    auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t i = 0; i < r; ++i)
            w[i][dst] -= q * w[i][src];
        for (std::size_t i = 0; i < s; ++i)
            u[i][dst] -= q * u[i][src];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < r; ++i)
            std::swap(w[i][x], w[i][y]);
        for (std::size_t i = 0; i < s; ++i)
            std::swap(u[i][x], u[i][y]);
    };
    std::vector<mpz_class> y;
    std::size_t c = 0;
    for (std::size_t i = 0; i < r; ++i) {
        while (true) {
            std::size_t best = s;
            for (std::size_t j = c; j < s; ++j)
                if (w[i][j] != 0 && (best == s || abs(w[i][j]) < abs(w[i][best])))
                    best = j;
            if (best == s)
                throw LiftFailure("lift_character: weight matrix rows are dependent");
            col_swap(c, best);
            bool clean = true;
            for (std::size_t j = c + 1; j < s; ++j) {
                if (w[i][j] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w[i][j].get_mpz_t(), w[i][c].get_mpz_t());
                col_op(j, c, q);
                if (w[i][j] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        mpz_class rhs = static_cast<long>(chi[i]);
        for (std::size_t k = 0; k < i; ++k)
            rhs -= w[i][k] * y[k];
        if (rhs % w[i][c] != 0)
            throw LiftFailure("lift_character: character is not in the weight lattice");
        y.push_back(rhs / w[i][c]);
        ++c;
    }
    IntVector a(s, 0);
    for (std::size_t i = 0; i < s; ++i) {
        mpz_class acc = 0;
        for (std::size_t k = 0; k < r; ++k)
            acc += u[i][k] * y[k];
        if (!acc.fits_slong_p())
            throw LiftFailure("lift_character: lift exceeds 64 bits");
        a[i] = acc.get_si();
    }
    return a;
}

GitPolyhedron git_polyhedron(const RaySystem& rs, const WeightSystem& ws, const IntVector& chi) {
    GitPolyhedron g;
    g.lift = lift_character(ws, chi);
    // Homogenized: <m, nu_i> + a_i t >= 0, t >= 0.
    RationalMatrix ineq;
    for (std::size_t i = 0; i < rs.s; ++i) {
        RationalVector row = to_rational(rs.rays[i]);
        row.emplace_back(static_cast<long>(g.lift[i]));
        ineq.push_back(std::move(row));
    }
    RationalVector t(rs.n + 1, Rational(0));
    t.back() = 1;
    ineq.push_back(t);
    const ConeRecord hom = cone_from_inequalities(ineq, {}, rs.n + 1);
    if (hom.dim == 0 || !hom.strictly_convex())
        throw EmptyPolyhedron("git_polyhedron: empty polyhedron");
    bool any = false;
    for (const auto& r : hom.extremal_rays)
        any = any || r.back() > 0;
    if (!any)
        throw EmptyPolyhedron("git_polyhedron: empty polyhedron");
    g.polytope = polytope_from_homogeneous(hom);
    for (const auto& v : g.polytope.vertices) {
        Support tight = 0;
        for (std::size_t i = 0; i < rs.s; ++i)
            if (dot(v, to_rational(rs.rays[i])) == Rational(-g.lift[i]))
                tight |= Support{1} << i;
        g.tight.push_back(tight);
    }
    const Support full = static_cast<Support>((std::size_t{1} << rs.s) - 1);
    std::set<Support> irr;
    for (Support t2 : g.tight)
        irr.insert(full & ~t2);
    for (Support a : irr) {
        bool minimal = true;
        for (Support b : irr)
            if (b != a && (b & ~a) == 0)
                minimal = false;
        if (minimal)
            g.irrelevant.push_back(a);
    }
    sort_zero_sets(g.irrelevant);
    return g;
}

Collection collection_from_irrelevant(const PolytopeCatalog& cat,
                                      const std::vector<Support>& irrelevant) {
    Collection c(cat.size());
    const Support full = static_cast<Support>((std::size_t{1} << cat.s) - 1);
    for (Support j = 0; j <= full; ++j)
        for (Support b : irrelevant)
            if ((b & ~j) == 0) {
                c.set(static_cast<std::size_t>(cat.index_of(j)));
                break;
            }
    return c;
}

bool is_degenerate_character(const RaySystem& rs, const WeightSystem& ws,
                             const PolytopeCatalog& cat, const RationalVector& chi) {
    const Collection c = semistable_collection(ws, cat, chi);
    if (c.none())
        return true;
    return std::holds_alternative<Degenerate>(fan_from_collection(rs, cat, c));
}

WeightSystem product_weights(const WeightSystem& a, const WeightSystem& b) {
    WeightSystem w;
    w.r = a.r + b.r;
    w.s = a.s + b.s;
    for (const auto& row : a.rows) {
        IntVector x = row;
        x.resize(w.s, 0);
        w.rows.push_back(std::move(x));
    }
    for (const auto& row : b.rows) {
        IntVector x(a.s, 0);
        x.insert(x.end(), row.begin(), row.end());
        w.rows.push_back(std::move(x));
    }
    return w;
}

SecondaryScan git_scan(const WeightSystem& ws, const PolytopeCatalog& cat, int depth,
                       unsigned jobs) {
    SecondaryScan scan;
    scan.rays = secondary_rays(ws);
    scan.samples = chamber_samples(scan.rays, ws.r, depth);
    const SemistableOracle oracle(ws, cat);
    std::vector<Collection> per(scan.samples.size());
    parallel_for(scan.samples.size(), jobs,
                 [&](std::size_t k) { per[k] = oracle.collection(to_rational(scan.samples[k])); });
    std::set<Collection> distinct(per.begin(), per.end());
    scan.collections.assign(distinct.begin(), distinct.end());
    for (const auto& c : per)
        scan.sample_class.push_back(static_cast<std::size_t>(
            std::lower_bound(scan.collections.begin(), scan.collections.end(), c) -
            scan.collections.begin()));
    return scan;
}

} // namespace toricfan
