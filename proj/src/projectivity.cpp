#include "toricfan/projectivity.hpp"

#include <algorithm>
#include <map>

namespace toricfan {

std::vector<std::pair<std::size_t, std::size_t>> adjacent_cones(const Fan& f) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> owners;
    for (std::size_t k = 0; k < f.cones.size(); ++k)
        for (const auto& n : f.cones[k].facet_normals) {
            std::vector<std::size_t> on;
            for (auto i : f.max_cones[k])
                if (dot(n, f.rays[i]) == 0)
                    on.push_back(i);
            owners[on].push_back(k);
        }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [wall, ks] : owners)
        for (std::size_t a = 0; a < ks.size(); ++a)
            for (std::size_t b = a + 1; b < ks.size(); ++b)
                out.emplace_back(std::min(ks[a], ks[b]), std::max(ks[a], ks[b]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct System {
    std::vector<HalfSpace> rows;
    std::vector<WallSlack> walls; // row index of each strict constraint is recorded by order
    std::size_t equalities = 0;
};

// Variables: m_sigma for each maximal cone, n entries each.
System build_system(const Fan& f) {
    const std::size_t n = f.dim, m = f.cones.size(), vars = n * m;
    System sys;
    auto term = [&](std::size_t cone, const IntVector& v, long sign, RationalVector& row) {
        for (std::size_t d = 0; d < n; ++d)
            row[cone * n + d] += Rational(sign * v[d]);
    };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            std::vector<std::size_t> shared;
            std::set_intersection(f.max_cones[a].begin(), f.max_cones[a].end(),
                                  f.max_cones[b].begin(), f.max_cones[b].end(),
                                  std::back_inserter(shared));
            for (auto i : shared) {
                RationalVector row(vars, Rational(0));
                term(a, f.rays[i], 1, row);
                term(b, f.rays[i], -1, row);
                sys.rows.push_back(HalfSpace{row, Rational(0), Sense::Equal});
                ++sys.equalities;
            }
        }
    for (auto [a, b] : adjacent_cones(f))
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
            for (auto i : f.max_cones[y]) {
                if (std::binary_search(f.max_cones[x].begin(), f.max_cones[x].end(), i))
                    continue;
                RationalVector row(vars, Rational(0));
                term(x, f.rays[i], 1, row);
                term(y, f.rays[i], -1, row);
                sys.rows.push_back(HalfSpace{row, Rational(1), Sense::GreaterEq});
                sys.walls.push_back(WallSlack{x, y, i, Rational(0)});
            }
    return sys;
}

} // namespace

ProjectivityResult strictly_convex_support_function(const Fan& f) {
    if (!std::holds_alternative<Complete>(is_complete_exact(f)))
        return NonProjective{"fan is not complete", std::nullopt};
    if (f.cones.size() <= 1) {
        // R^n as a single cone only happens for n = 0.
        SupportFunctionCertificate c;
        c.functionals.assign(f.cones.size(), RationalVector(f.dim, Rational(0)));
        return c;
    }
    const System sys = build_system(f);
    const LpResult res = lp_feasible(sys.rows, {}, f.dim * f.cones.size());
    if (const auto* inf = std::get_if<Infeasible>(&res))
        return NonProjective{"no strictly convex support function", inf->certificate};
    const RationalVector& x = std::get<Feasible>(res).witness;
    SupportFunctionCertificate cert;
    for (std::size_t k = 0; k < f.cones.size(); ++k)
        cert.functionals.emplace_back(x.begin() + static_cast<long>(k * f.dim),
                                      x.begin() + static_cast<long>((k + 1) * f.dim));
    cert.walls = sys.walls;
    for (auto& w : cert.walls) {
        const RationalVector v = to_rational(f.rays[w.ray]);
        w.slack = dot(cert.functionals[w.cone], v) - dot(cert.functionals[w.neighbor], v);
    }
    return cert;
}

bool verify_certificate(const Fan& f, const SupportFunctionCertificate& cert) {
    if (cert.functionals.size() != f.cones.size())
        return false;
    for (std::size_t a = 0; a < f.cones.size(); ++a)
        for (std::size_t b = a + 1; b < f.cones.size(); ++b)
            for (auto i : f.max_cones[a])
                if (std::binary_search(f.max_cones[b].begin(), f.max_cones[b].end(), i)) {
                    const RationalVector v = to_rational(f.rays[i]);
                    if (dot(cert.functionals[a], v) != dot(cert.functionals[b], v))
                        return false;
                }
    for (auto [a, b] : adjacent_cones(f))
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
            for (auto i : f.max_cones[y]) {
                if (std::binary_search(f.max_cones[x].begin(), f.max_cones[x].end(), i))
                    continue;
                const RationalVector v = to_rational(f.rays[i]);
                if (dot(cert.functionals[x], v) - dot(cert.functionals[y], v) < 1)
                    return false;
            }
    return true;
}

Fan face_fan(const PolytopeRecord& p) {
    std::vector<std::vector<IntVector>> gens;
    for (const auto& fn : p.hom.facet_normals) {
        std::vector<IntVector> g;
        for (const auto& v : p.vertices) {
            RationalVector h = v;
            h.emplace_back(1);
            if (sgn(dot(to_rational(fn), h)) == 0)
                g.push_back(primitive(v));
        }
        gens.push_back(std::move(g));
    }
    return make_fan(p.ambient, gens);
}

BigConePolytope big_cone_polytope(const Fan& f) {
    const std::size_t t = f.rays.size();
    for (std::size_t k = 0; k < f.cones.size(); ++k) {
        if (f.max_cones[k].size() + 1 != t)
            continue;
        std::size_t outside = 0;
        while (std::binary_search(f.max_cones[k].begin(), f.max_cones[k].end(), outside))
            ++outside;
        BigConePolytope out;
        out.big_cone = k;
        const RationalSlice sl = rational_slice(f.cones[k]);
        out.slice_normal = sl.normal;
        RationalMatrix pts = sl.slice.vertices;
        pts.push_back(to_rational(f.rays[outside]));
        out.polytope = hull_vertices(pts);
        try {
            out.verified = origin_interior(pts) && same_fan(face_fan(out.polytope), f);
        } catch (const GeometryError&) {
            out.verified = false;
        }
        return out;
    }
    throw HypothesisViolated("big_cone_polytope: no maximal cone on all but one ray");
}

bool d_plus_2_check(const Fan& f) {
    if (f.rays.size() != f.dim + 2)
        throw PreconditionViolated("d_plus_2_check: fan does not have dim + 2 rays");
    if (!std::holds_alternative<Complete>(is_complete_exact(f)))
        throw PreconditionViolated("d_plus_2_check: fan is not complete");
    return std::holds_alternative<SupportFunctionCertificate>(strictly_convex_support_function(f));
}

Fan random_complete_fan(std::size_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(-4, 4);
    std::uniform_int_distribution<int> scale(1, 5);
    while (true) {
        std::vector<IntVector> rays;
        for (std::size_t k = 0; k < d + 2; ++k) {
            IntVector v(d);
            for (auto& x : v)
                x = coord(rng);
            if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }))
                break;
            rays.push_back(primitive(v));
        }
        if (rays.size() != d + 2)
            continue;
        RationalMatrix pts;
        for (const auto& r : rays) {
            RationalVector p = to_rational(r);
            const Rational l(scale(rng));
            for (auto& x : p)
                x *= l;
            pts.push_back(std::move(p));
        }
        if (!positively_spans(pts, d))
            continue;
        const PolytopeRecord p = hull_vertices(pts);
        if (p.vertices.size() != d + 2 || !origin_interior(pts))
            continue;
        // Every facet must avoid the origin's rays doubling up (distinct directions).
        std::vector<IntVector> dirs = rays;
        std::sort(dirs.begin(), dirs.end());
        if (std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end())
            continue;
        return face_fan(p);
    }
}

} // namespace toricfan
