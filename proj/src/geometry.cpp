#include "toricfan/geometry.hpp"

#include "toricfan/linalg.hpp"

#include <algorithm>
#include <map>

namespace toricfan {

namespace {

RationalVector scaled_integral(const RationalVector& v) { return to_rational(primitive(v)); }

std::vector<IntVector> canonical_subspace(const RationalMatrix& basis, std::size_t dim) {
    RationalMatrix m = basis;
    linalg::rref(m, dim);
    std::vector<IntVector> out;
    for (const auto& row : m)
        if (!is_zero(row))
            out.push_back(primitive(row));
    return out;
}

bool adjacent(const std::vector<bool>& za, const std::vector<bool>& zb, const RationalMatrix& rows,
              std::size_t k) {
    RationalMatrix common;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (za[i] && zb[i])
            common.push_back(rows[i]);
    if (k >= 2 && common.size() < k - 2)
        return false;
    return linalg::rank(common, k) + 2 == k;
}

} // namespace

DoubleDescription double_description(const RationalMatrix& inequalities,
                                     const RationalMatrix& equalities, std::size_t dim) {
    RationalMatrix all = equalities;
    all.insert(all.end(), inequalities.begin(), inequalities.end());
    DoubleDescription out;
    out.lineality = linalg::nullspace(all, dim);

    RationalMatrix restrict_rows = equalities;
    restrict_rows.insert(restrict_rows.end(), out.lineality.begin(), out.lineality.end());
    const RationalMatrix basis = linalg::nullspace(restrict_rows, dim);
    const std::size_t k = basis.size();
    if (k == 0)
        return out;

    // Constraints in the coordinates of the pointed subspace.
    RationalMatrix rows;
    for (const auto& a : inequalities) {
        RationalVector c(k);
        for (std::size_t i = 0; i < k; ++i)
            c[i] = dot(a, basis[i]);
        if (!is_zero(c))
            rows.push_back(scaled_integral(c));
    }

    // Initial simplicial cone from k independent constraints.
    std::vector<std::size_t> order;
    RationalMatrix chosen;
    std::vector<bool> used(rows.size(), false);
    for (std::size_t i = 0; i < rows.size() && chosen.size() < k; ++i) {
        RationalMatrix trial = chosen;
        trial.push_back(rows[i]);
        if (linalg::rank(trial, k) == trial.size()) {
            chosen = std::move(trial);
            order.push_back(i);
            used[i] = true;
        }
    }
    if (chosen.size() != k)
        throw GeometryError("double_description: restricted cone is not pointed");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!used[i])
            order.push_back(i);

    RationalMatrix processed;
    RationalMatrix rays;
    std::vector<std::vector<bool>> zeros;
    for (std::size_t j = 0; j < k; ++j) {
        RationalVector e(k, Rational(0));
        e[j] = 1;
        auto col = linalg::solve(chosen, e, k);
        rays.push_back(scaled_integral(*col));
    }
    for (std::size_t t = 0; t < k; ++t)
        processed.push_back(rows[order[t]]);
    for (const auto& r : rays) {
        std::vector<bool> z(k);
        for (std::size_t t = 0; t < k; ++t)
            z[t] = sgn(dot(processed[t], r)) == 0;
        zeros.push_back(std::move(z));
    }

    for (std::size_t t = k; t < order.size(); ++t) {
        const RationalVector& c = rows[order[t]];
        std::vector<Rational> vals;
        vals.reserve(rays.size());
        for (const auto& r : rays)
            vals.push_back(dot(c, r));
        RationalMatrix next;
        std::vector<std::vector<bool>> next_zeros;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (sgn(vals[i]) >= 0) {
                next.push_back(rays[i]);
                auto z = zeros[i];
                z.push_back(sgn(vals[i]) == 0);
                next_zeros.push_back(std::move(z));
            }
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (sgn(vals[p]) <= 0)
                continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (sgn(vals[q]) >= 0)
                    continue;
                if (!adjacent(zeros[p], zeros[q], processed, k))
                    continue;
                RationalVector r(k);
                for (std::size_t i = 0; i < k; ++i)
                    r[i] = vals[p] * rays[q][i] - vals[q] * rays[p][i];
                r = scaled_integral(r);
                std::vector<bool> z(zeros[p].size() + 1);
                for (std::size_t i = 0; i < zeros[p].size(); ++i)
                    z[i] = zeros[p][i] && zeros[q][i];
                z.back() = true;
                next.push_back(std::move(r));
                next_zeros.push_back(std::move(z));
            }
        }
        processed.push_back(c);
        rays = std::move(next);
        zeros = std::move(next_zeros);
        if (rays.empty())
            break;
    }

    for (const auto& r : rays) {
        RationalVector x(dim, Rational(0));
        for (std::size_t i = 0; i < k; ++i)
            if (sgn(r[i]) != 0)
                for (std::size_t d = 0; d < dim; ++d)
                    x[d] += r[i] * basis[i][d];
        out.rays.push_back(std::move(x));
    }
    return out;
}

RationalMatrix ConeRecord::point_generators() const {
    RationalMatrix gens;
    for (const auto& r : extremal_rays)
        gens.push_back(to_rational(r));
    for (const auto& l : lineality_basis) {
        gens.push_back(to_rational(l));
        IntVector neg = l;
        for (auto& x : neg)
            x = -x;
        gens.push_back(to_rational(neg));
    }
    return gens;
}

namespace {

// Fills extremal rays / lineality from a primal DD and facets / equations from
// the dual DD of the resulting generators.
ConeRecord finish_cone(const DoubleDescription& primal, std::size_t ambient,
                       RationalMatrix generators) {
    ConeRecord c;
    c.ambient = ambient;
    c.generators = std::move(generators);
    for (const auto& r : primal.rays)
        c.extremal_rays.push_back(primitive(r));
    std::sort(c.extremal_rays.begin(), c.extremal_rays.end());
    c.extremal_rays.erase(std::unique(c.extremal_rays.begin(), c.extremal_rays.end()),
                          c.extremal_rays.end());
    c.lineality_basis = canonical_subspace(primal.lineality, ambient);

    const RationalMatrix gens = c.point_generators();
    const DoubleDescription dual = double_description(gens, {}, ambient);
    c.equations = canonical_subspace(dual.lineality, ambient);
    for (const auto& f : dual.rays)
        c.facet_normals.push_back(primitive(f));
    std::sort(c.facet_normals.begin(), c.facet_normals.end());
    c.facet_normals.erase(std::unique(c.facet_normals.begin(), c.facet_normals.end()),
                          c.facet_normals.end());
    c.dim = ambient - c.equations.size();
    return c;
}

RationalMatrix as_rows(const std::vector<IntVector>& v) {
    RationalMatrix out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(to_rational(x));
    return out;
}

void check_dims(const RationalMatrix& rows, std::size_t ambient, const char* what) {
    for (const auto& r : rows)
        if (r.size() != ambient)
            throw GeometryError(std::string(what) + ": dimension mismatch");
}

} // namespace

ConeRecord cone_from_inequalities(const RationalMatrix& inequalities,
                                  const RationalMatrix& equalities, std::size_t ambient) {
    check_dims(inequalities, ambient, "cone_from_inequalities");
    check_dims(equalities, ambient, "cone_from_inequalities");
    const DoubleDescription primal = double_description(inequalities, equalities, ambient);
    RationalMatrix gens = primal.rays;
    gens.insert(gens.end(), primal.lineality.begin(), primal.lineality.end());
    return finish_cone(primal, ambient, std::move(gens));
}

ConeRecord cone_from_generators(const RationalMatrix& gens, std::size_t ambient) {
    check_dims(gens, ambient, "cone_from_generators");
    const DoubleDescription dual = double_description(gens, {}, ambient);
    const DoubleDescription primal = double_description(dual.rays, dual.lineality, ambient);
    return finish_cone(primal, ambient, gens);
}

ConeRecord cone_from_generators(const std::vector<IntVector>& gens, std::size_t ambient) {
    return cone_from_generators(as_rows(gens), ambient);
}

bool cone_contains(const ConeRecord& c, const RationalVector& x, Membership mode) {
    if (x.size() != c.ambient)
        throw GeometryError("cone_contains: dimension mismatch");
    for (const auto& e : c.equations)
        if (sgn(dot(to_rational(e), x)) != 0)
            return false;
    for (const auto& f : c.facet_normals) {
        const int s = sgn(dot(to_rational(f), x));
        if (s < 0 || (s == 0 && mode == Membership::RelativeInterior))
            return false;
    }
    return true;
}

ConeRecord intersect_cones(const ConeRecord& a, const ConeRecord& b) {
    if (a.ambient != b.ambient)
        throw GeometryError("intersect_cones: dimension mismatch");
    RationalMatrix ineq = as_rows(a.facet_normals);
    for (const auto& f : b.facet_normals)
        ineq.push_back(to_rational(f));
    RationalMatrix eq = as_rows(a.equations);
    for (const auto& e : b.equations)
        eq.push_back(to_rational(e));
    return cone_from_inequalities(ineq, eq, a.ambient);
}

bool same_cone(const ConeRecord& a, const ConeRecord& b) {
    return a.ambient == b.ambient && a.extremal_rays == b.extremal_rays &&
           a.lineality_basis == b.lineality_basis;
}

ConeRecord minimal_face(const ConeRecord& c, const RationalMatrix& points) {
    RationalMatrix eq = as_rows(c.equations);
    RationalMatrix ineq;
    for (const auto& f : c.facet_normals) {
        const RationalVector fr = to_rational(f);
        bool tight = true;
        for (const auto& p : points)
            if (sgn(dot(fr, p)) != 0) {
                tight = false;
                break;
            }
        (tight ? eq : ineq).push_back(fr);
    }
    return cone_from_inequalities(ineq, eq, c.ambient);
}

bool is_face_of(const ConeRecord& f, const ConeRecord& c) {
    if (f.ambient != c.ambient)
        throw GeometryError("is_face_of: dimension mismatch");
    const RationalMatrix gens = f.point_generators();
    for (const auto& g : gens)
        if (!cone_contains(c, g))
            return false;
    return same_cone(minimal_face(c, gens), f);
}

PolytopeRecord polytope_from_homogeneous(const ConeRecord& hom) {
    if (!hom.strictly_convex())
        throw GeometryError("polytope_from_homogeneous: unbounded");
    PolytopeRecord p;
    p.ambient = hom.ambient - 1;
    p.hom = hom;
    for (const auto& r : hom.extremal_rays) {
        if (r.back() <= 0)
            throw GeometryError("polytope_from_homogeneous: unbounded direction");
        RationalVector v(p.ambient);
        for (std::size_t i = 0; i < p.ambient; ++i)
            v[i] = Rational(r[i], r.back());
        for (auto& x : v)
            x.canonicalize();
        p.vertices.push_back(std::move(v));
    }
    std::sort(p.vertices.begin(), p.vertices.end(), lex_less);
    p.dim = static_cast<long>(hom.dim) - 1;
    return p;
}

PolytopeRecord hull_vertices(const RationalMatrix& points) {
    if (points.empty())
        throw GeometryError("hull_vertices: no points");
    const std::size_t n = points.front().size();
    RationalMatrix hom;
    for (const auto& p : points) {
        if (p.size() != n)
            throw GeometryError("hull_vertices: dimension mismatch");
        RationalVector h = p;
        h.emplace_back(1);
        hom.push_back(std::move(h));
    }
    return polytope_from_homogeneous(cone_from_generators(hom, n + 1));
}

PolytopeRecord intersect_polytopes(const PolytopeRecord& a, const PolytopeRecord& b) {
    return polytope_from_homogeneous(intersect_cones(a.hom, b.hom));
}

bool polytope_contains(const PolytopeRecord& p, const RationalVector& x) {
    RationalVector h = x;
    h.emplace_back(1);
    return cone_contains(p.hom, h);
}

bool is_face_of(const PolytopeRecord& f, const PolytopeRecord& p) {
    if (f.empty())
        return true;
    return is_face_of(f.hom, p.hom);
}

namespace {

// Phase-one simplex over exact rationals with Bland's rule.
// Rows: A z = b, z >= 0, b >= 0.
struct PhaseOne {
    RationalMatrix tab; // m x (cols + 1), last column rhs
    std::vector<std::size_t> basis;
    std::vector<Rational> cost;
    std::size_t cols = 0;

    Rational reduced_cost(std::size_t j) const {
        Rational d = cost[j];
        for (std::size_t i = 0; i < tab.size(); ++i)
            if (sgn(tab[i][j]) != 0 && sgn(cost[basis[i]]) != 0)
                d -= cost[basis[i]] * tab[i][j];
        return d;
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = 1 / tab[r][c];
        for (auto& x : tab[r])
            if (sgn(x) != 0)
                x *= inv;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (i == r || sgn(tab[i][c]) == 0)
                continue;
            const Rational f = tab[i][c];
            for (std::size_t j = 0; j <= cols; ++j)
                if (sgn(tab[r][j]) != 0)
                    tab[i][j] -= f * tab[r][j];
        }
        basis[r] = c;
    }

    void run() {
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(reduced_cost(j)) < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols)
                return;
            std::size_t leave = tab.size();
            Rational best;
            for (std::size_t i = 0; i < tab.size(); ++i) {
                if (sgn(tab[i][enter]) <= 0)
                    continue;
                Rational ratio = tab[i][cols] / tab[i][enter];
                if (leave == tab.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == tab.size())
                throw GeometryError("phase one simplex unbounded");
            pivot(leave, enter);
        }
    }

    Rational objective() const {
        Rational v = 0;
        for (std::size_t i = 0; i < tab.size(); ++i)
            v += cost[basis[i]] * tab[i][cols];
        return v;
    }
};

struct Row {
    RationalVector a; // <a, x> - b (>= | =) 0
    Rational b;
    bool equality = false;
};

// Non-strict feasibility in ">= / =" form. Returns witness or multipliers.
std::variant<RationalVector, RationalVector> solve_rows(const std::vector<Row>& rows,
                                                        std::size_t dim) {
    const std::size_t m = rows.size();
    // Column layout: x+ (dim), x- (dim), slacks (one per inequality row), artificials.
    std::vector<std::size_t> slack_col(m, SIZE_MAX);
    std::size_t cols = 2 * dim;
    for (std::size_t i = 0; i < m; ++i)
        if (!rows[i].equality)
            slack_col[i] = cols++;
    std::vector<int> sign(m, 1);
    std::vector<std::size_t> initial(m);
    std::vector<bool> needs_art(m, true);
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(rows[i].b) < 0)
            sign[i] = -1;
        // slack enters as -s; with a negated row it is +s and can start basic
        if (!rows[i].equality && sign[i] < 0)
            needs_art[i] = false;
        if (!rows[i].equality && sgn(rows[i].b) == 0) {
            sign[i] = -1;
            needs_art[i] = false;
        }
    }
    std::vector<std::size_t> art_col(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i)
        if (needs_art[i])
            art_col[i] = cols++;

    PhaseOne lp;
    lp.cols = cols;
    lp.cost.assign(cols, Rational(0));
    lp.tab.assign(m, RationalVector(cols + 1, Rational(0)));
    lp.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Rational s = sign[i];
        for (std::size_t d = 0; d < dim; ++d) {
            lp.tab[i][d] = s * rows[i].a[d];
            lp.tab[i][dim + d] = -s * rows[i].a[d];
        }
        if (slack_col[i] != SIZE_MAX)
            lp.tab[i][slack_col[i]] = -s;
        lp.tab[i][cols] = s * rows[i].b;
        if (needs_art[i]) {
            lp.tab[i][art_col[i]] = 1;
            lp.cost[art_col[i]] = 1;
            initial[i] = art_col[i];
        } else {
            initial[i] = slack_col[i];
        }
        lp.basis[i] = initial[i];
    }
    lp.run();

    if (sgn(lp.objective()) == 0) {
        std::vector<Rational> z(cols, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            z[lp.basis[i]] = lp.tab[i][cols];
        RationalVector x(dim);
        for (std::size_t d = 0; d < dim; ++d)
            x[d] = z[d] - z[dim + d];
        return std::variant<RationalVector, RationalVector>(std::in_place_index<0>, x);
    }
    RationalVector y(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Rational yi = lp.cost[initial[i]] - lp.reduced_cost(initial[i]);
        y[i] = Rational(sign[i]) * yi;
    }
    return std::variant<RationalVector, RationalVector>(std::in_place_index<1>, y);
}

Row to_row(const HalfSpace& h) {
    Row r;
    if (h.sense == Sense::LessEq) {
        r.a = h.normal;
        for (auto& x : r.a)
            x = -x;
        r.b = -h.offset;
    } else {
        r.a = h.normal;
        r.b = h.offset;
    }
    r.equality = h.sense == Sense::Equal;
    return r;
}

} // namespace

bool satisfies(const std::vector<HalfSpace>& constraints, const std::vector<bool>& strict_mask,
               const RationalVector& x) {
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const Row r = to_row(constraints[i]);
        const Rational v = dot(r.a, x) - r.b;
        const bool strict = i < strict_mask.size() && strict_mask[i];
        if (r.equality) {
            if (sgn(v) != 0)
                return false;
        } else if (sgn(v) < 0 || (strict && sgn(v) == 0)) {
            return false;
        }
    }
    return true;
}

bool verifies(const std::vector<HalfSpace>& constraints, const std::vector<bool>& strict_mask,
              const FarkasCertificate& cert) {
    if (cert.multipliers.size() != constraints.size() || constraints.empty())
        return false;
    const std::size_t dim = constraints.front().normal.size();
    RationalVector combo(dim, Rational(0));
    Rational rhs = 0;
    bool strict_positive = false;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const Row r = to_row(constraints[i]);
        const Rational& y = cert.multipliers[i];
        if (!r.equality && sgn(y) < 0)
            return false;
        for (std::size_t d = 0; d < dim; ++d)
            combo[d] += y * r.a[d];
        rhs += y * r.b;
        if (!r.equality && i < strict_mask.size() && strict_mask[i] && sgn(y) > 0)
            strict_positive = true;
    }
    if (!is_zero(combo) || sgn(rhs) < 0)
        return false;
    return sgn(rhs) > 0 || strict_positive;
}

LpResult lp_feasible(const std::vector<HalfSpace>& constraints,
                     const std::vector<bool>& strict_mask, std::size_t dim) {
    for (const auto& h : constraints)
        if (h.normal.size() != dim)
            throw GeometryError("lp_feasible: dimension mismatch");
    bool any_strict = false;
    for (std::size_t i = 0; i < constraints.size(); ++i)
        if (i < strict_mask.size() && strict_mask[i] && constraints[i].sense != Sense::Equal)
            any_strict = true;

    std::vector<Row> rows;
    rows.reserve(constraints.size() + 2);
    if (!any_strict) {
        for (const auto& h : constraints)
            rows.push_back(to_row(h));
        auto res = solve_rows(rows, dim);
        if (res.index() == 0)
            return Feasible{std::get<0>(res)};
        return Infeasible{FarkasCertificate{std::get<1>(res)}};
    }

    // Homogenize: variables (X, t, s); <a,X> - b t (- s if strict) (>= | =) 0,
    // t - s >= 0, s >= 1. Any solution gives x = X / t.
    const std::size_t hd = dim + 2;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const Row r = to_row(constraints[i]);
        Row h;
        h.a = r.a;
        h.a.push_back(-r.b);
        const bool strict = i < strict_mask.size() && strict_mask[i] && !r.equality;
        h.a.emplace_back(strict ? -1 : 0);
        h.b = 0;
        h.equality = r.equality;
        rows.push_back(std::move(h));
    }
    Row t_row;
    t_row.a.assign(hd, Rational(0));
    t_row.a[dim] = 1;
    t_row.a[dim + 1] = -1;
    t_row.b = 0;
    rows.push_back(t_row);
    Row s_row;
    s_row.a.assign(hd, Rational(0));
    s_row.a[dim + 1] = 1;
    s_row.b = 1;
    rows.push_back(s_row);

    auto res = solve_rows(rows, hd);
    if (res.index() == 0) {
        const RationalVector& z = std::get<0>(res);
        RationalVector x(dim);
        for (std::size_t d = 0; d < dim; ++d)
            x[d] = z[d] / z[dim];
        return Feasible{x};
    }
    const RationalVector& y = std::get<1>(res);
    return Infeasible{
        FarkasCertificate{RationalVector(y.begin(), y.begin() + static_cast<long>(constraints.size()))}};
}

Rational support_function(const PolytopeRecord& p, const RationalVector& v) {
    if (p.empty())
        throw GeometryError("support_function: empty polytope");
    Rational best = dot(p.vertices.front(), v);
    for (const auto& x : p.vertices)
        best = std::max(best, dot(x, v));
    return best;
}

bool origin_interior(const RationalMatrix& points) {
    const PolytopeRecord p = hull_vertices(points);
    if (p.dim != static_cast<long>(p.ambient))
        throw NotFullDimensional("origin_interior: hull is not full-dimensional");
    for (const auto& f : p.hom.facet_normals)
        if (f.back() <= 0)
            return false;
    return true;
}

bool positively_spans(const RationalMatrix& points, std::size_t dim) {
    if (points.empty())
        return dim == 0;
    if (linalg::rank(points, dim) != dim)
        return false;
    const std::size_t k = points.size();
    std::vector<HalfSpace> cons;
    for (std::size_t i = 0; i < k; ++i) {
        HalfSpace h;
        h.normal.assign(k, Rational(0));
        h.normal[i] = 1;
        h.offset = 1;
        cons.push_back(std::move(h));
    }
    for (std::size_t d = 0; d < dim; ++d) {
        HalfSpace h;
        h.normal.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            h.normal[i] = points[i][d];
        h.offset = 0;
        h.sense = Sense::Equal;
        cons.push_back(std::move(h));
    }
    return std::holds_alternative<Feasible>(lp_feasible(cons, {}, k));
}

RationalVector separating_functional(const ConeRecord& c) {
    if (!c.strictly_convex())
        throw NotStrictlyConvex("separating_functional: cone has lineality");
    std::vector<HalfSpace> cons;
    for (const auto& r : c.extremal_rays)
        cons.push_back(HalfSpace{to_rational(r), Rational(1), Sense::GreaterEq});
    if (cons.empty())
        return RationalVector(c.ambient, Rational(0));
    auto res = lp_feasible(cons, {}, c.ambient);
    if (!std::holds_alternative<Feasible>(res))
        throw NotStrictlyConvex("separating_functional: no strictly positive functional");
    return std::get<Feasible>(res).witness;
}

RationalSlice rational_slice(const ConeRecord& c, const std::optional<RationalVector>& hint) {
    RationalVector v0;
    if (hint) {
        v0 = *hint;
        for (const auto& r : c.extremal_rays)
            if (sgn(dot(to_rational(r), v0)) <= 0)
                throw GeometryError("rational_slice: hint is not positive on the cone");
    } else {
        v0 = to_rational(primitive(separating_functional(c)));
    }
    // Slice points x / <x, v0>; replacing v0 by v0 / k scales the slice by k.
    mpz_class k = 1;
    RationalMatrix pts;
    for (const auto& r : c.extremal_rays) {
        const RationalVector x = to_rational(r);
        const Rational h = dot(x, v0);
        RationalVector y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            y[i] = x[i] / h;
            k = lcm(k, mpz_class(y[i].get_den()));
        }
        pts.push_back(std::move(y));
    }
    const Rational kq(k);
    RationalSlice out;
    out.normal = v0;
    for (auto& x : out.normal)
        x /= kq;
    for (auto& p : pts)
        for (auto& x : p)
            x *= kq;
    if (pts.empty())
        throw GeometryError("rational_slice: zero cone");
    out.slice = hull_vertices(pts);
    return out;
}

PolytopeRecord dual_polytope(const PolytopeRecord& p) {
    if (p.empty() || p.dim != static_cast<long>(p.ambient))
        throw OriginNotInterior("dual_polytope: polytope is not full-dimensional");
    RationalMatrix pts;
    for (const auto& f : p.hom.facet_normals) {
        if (f.back() <= 0)
            throw OriginNotInterior("dual_polytope: origin is not an interior point");
        RationalVector y(p.ambient);
        for (std::size_t i = 0; i < p.ambient; ++i)
            y[i] = Rational(-f[i], f.back());
        for (auto& x : y)
            x.canonicalize();
        pts.push_back(std::move(y));
    }
    return hull_vertices(pts);
}

} // namespace toricfan
