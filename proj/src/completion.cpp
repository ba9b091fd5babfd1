#include "toricfan/completion.hpp"

#include "toricfan/linalg.hpp"
#include "toricfan/projectivity.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricfan {

int orient(const Point2& a, const Point2& b, const Point2& c) {
    return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

Rational signed_area2(const std::vector<Point2>& nodes) {
    Rational s = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Point2& a = nodes[i];
        const Point2& b = nodes[(i + 1) % nodes.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return s;
}

namespace {

// x on the closed segment [a, b], assuming orient(a, b, x) == 0.
bool between(const Point2& a, const Point2& b, const Point2& x) {
    return std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= x.y &&
           x.y <= std::max(a.y, b.y);
}

// x on the open segment (a, b).
bool strictly_between(const Point2& a, const Point2& b, const Point2& x) {
    return orient(a, b, x) == 0 && between(a, b, x) && !(x == a) && !(x == b);
}

Point2 midpoint(const Point2& a, const Point2& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

bool on_segment(const Point2& a, const Point2& b, const Point2& x) {
    return orient(a, b, x) == 0 && between(a, b, x);
}

} // namespace

bool open_segment_avoids(const Point2& p, const Point2& q, const Point2& a, const Point2& b) {
    const int d1 = orient(a, b, p), d2 = orient(a, b, q);
    const int d3 = orient(p, q, a), d4 = orient(p, q, b);
    if (d1 == 0 && d2 == 0) {
        // Collinear: any overlap beyond a single endpoint of [p, q] is a hit.
        if (strictly_between(p, q, a) || strictly_between(p, q, b))
            return false;
        if (strictly_between(a, b, p) || strictly_between(a, b, q))
            return false;
        if ((a == p && b == q) || (a == q && b == p))
            return false;
        return true;
    }
    if (d1 * d2 < 0 && d3 * d4 < 0)
        return false;
    if (d3 == 0 && strictly_between(p, q, a))
        return false;
    if (d4 == 0 && strictly_between(p, q, b))
        return false;
    return true;
}

bool inside_polygon(const std::vector<Point2>& nodes, const Point2& x) {
    const std::size_t n = nodes.size();
    bool in = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = nodes[i];
        const Point2& b = nodes[(i + 1) % n];
        if (on_segment(a, b, x))
            return false;
        if ((a.y > x.y) != (b.y > x.y)) {
            // x-coordinate of the edge at height x.y
            const Rational t = (x.y - a.y) / (b.y - a.y);
            if (x.x < a.x + t * (b.x - a.x))
                in = !in;
        }
    }
    return in;
}

namespace {

std::vector<Point2> gather(const std::vector<Point2>& nodes, const std::vector<std::size_t>& idx) {
    std::vector<Point2> out;
    for (auto i : idx)
        out.push_back(nodes[i]);
    return out;
}

// Diagonal test on the sub-polygon idx (positions i, j).
bool internal(const std::vector<Point2>& nodes, const std::vector<std::size_t>& idx, std::size_t i,
              std::size_t j) {
    const std::size_t n = idx.size();
    if (i == j || (i + 1) % n == j || (j + 1) % n == i)
        return false;
    const Point2& p = nodes[idx[i]];
    const Point2& q = nodes[idx[j]];
    for (std::size_t k = 0; k < n; ++k)
        if (!open_segment_avoids(p, q, nodes[idx[k]], nodes[idx[(k + 1) % n]]))
            return false;
    return inside_polygon(gather(nodes, idx), midpoint(p, q));
}

std::size_t closest_visible(const std::vector<Point2>& nodes, const std::vector<std::size_t>& idx,
                            std::size_t v) {
    const std::size_t n = idx.size();
    const std::size_t prev = (v + n - 1) % n, next = (v + 1) % n;
    if (orient(nodes[idx[prev]], nodes[idx[v]], nodes[idx[next]]) <= 0)
        throw NotConvexNode("closest_visible_node: node is not convex");
    if (n == 3)
        return next;
    std::size_t best = n;
    Rational best_d;
    for (std::size_t w = 0; w < n; ++w) {
        if (!internal(nodes, idx, v, w))
            continue;
        const Rational dx = nodes[idx[w]].x - nodes[idx[v]].x;
        const Rational dy = nodes[idx[w]].y - nodes[idx[v]].y;
        const Rational d = dx * dx + dy * dy;
        if (best == n || d < best_d || (d == best_d && idx[w] < idx[best])) {
            best = w;
            best_d = d;
        }
    }
    // only possible when the ear at v is free
    return best == n ? next : best;
}

void triangulate_rec(const std::vector<Point2>& nodes, std::vector<std::size_t> idx,
                     Triangulation& out) {
    while (idx.size() > 3) {
        const std::size_t n = idx.size();
        std::size_t v = n;
        for (std::size_t k = 0; k < n; ++k)
            if (orient(nodes[idx[(k + n - 1) % n]], nodes[idx[k]], nodes[idx[(k + 1) % n]]) > 0) {
                v = k;
                break;
            }
        if (v == n)
            throw DegenerateInput("triangulate_polygon: no convex node");
        const std::size_t prev = (v + n - 1) % n, next = (v + 1) % n;
        if (internal(nodes, idx, prev, next)) {
            out.triangles.push_back({idx[prev], idx[v], idx[next]});
            idx.erase(idx.begin() + static_cast<long>(v));
            continue;
        }
        const std::size_t w = closest_visible(nodes, idx, v);
        std::vector<std::size_t> a, b;
        for (std::size_t k = v;; k = (k + 1) % n) {
            a.push_back(idx[k]);
            if (k == w)
                break;
        }
        for (std::size_t k = w;; k = (k + 1) % n) {
            b.push_back(idx[k]);
            if (k == v)
                break;
        }
        triangulate_rec(nodes, std::move(a), out);
        idx = std::move(b);
    }
    if (orient(nodes[idx[0]], nodes[idx[1]], nodes[idx[2]]) <= 0)
        throw DegenerateInput("triangulate_polygon: degenerate triangle");
    out.triangles.push_back({idx[0], idx[1], idx[2]});
}

// Counterclockwise order of the node indices of c.
std::vector<std::size_t> ccw_order(const PolyChain& c) {
    const std::size_t n = c.nodes.size();
    if (n < 3)
        throw DegenerateInput("polygon needs at least 3 nodes");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (c.nodes[i] == c.nodes[j])
                throw DegenerateInput("polygon has repeated nodes");
    const Rational a = signed_area2(c.nodes);
    if (sgn(a) == 0)
        throw DegenerateInput("polygon has zero area");
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = sgn(a) > 0 ? i : n - 1 - i;
    return idx;
}

} // namespace

bool is_internal_diagonal(const PolyChain& c, std::size_t i, std::size_t j) {
    const std::vector<std::size_t> idx = ccw_order(c);
    const std::size_t n = idx.size();
    auto pos = [&](std::size_t k) {
        return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), k) - idx.begin());
    };
    if (i >= n || j >= n)
        throw std::out_of_range("is_internal_diagonal: node index");
    return internal(c.nodes, idx, pos(i), pos(j));
}

std::size_t closest_visible_node(const PolyChain& c, std::size_t v) {
    const std::vector<std::size_t> idx = ccw_order(c);
    if (v >= idx.size())
        throw std::out_of_range("closest_visible_node: node index");
    const auto p = static_cast<std::size_t>(std::find(idx.begin(), idx.end(), v) - idx.begin());
    return idx[closest_visible(c.nodes, idx, p)];
}

Triangulation triangulate_polygon(const PolyChain& c) {
    Triangulation t;
    triangulate_rec(c.nodes, ccw_order(c), t);
    return t;
}

Region polygon_region(const std::vector<Point2>& outer, const std::vector<std::vector<Point2>>& holes,
                      const std::vector<std::pair<Point2, Point2>>& slits) {
    Region r;
    auto node = [&](const Point2& p) {
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            if (r.nodes[i] == p)
                return i;
        r.nodes.push_back(p);
        return r.nodes.size() - 1;
    };
    auto cycle = [&](const std::vector<Point2>& poly) {
        for (std::size_t i = 0; i < poly.size(); ++i)
            r.segments.emplace_back(node(poly[i]), node(poly[(i + 1) % poly.size()]));
    };
    cycle(outer);
    for (const auto& h : holes)
        cycle(h);
    for (const auto& [a, b] : slits)
        r.segments.emplace_back(node(a), node(b));
    r.inside = [outer, holes, slits](const Point2& x) {
        if (!inside_polygon(outer, x))
            return false;
        for (const auto& h : holes)
            if (inside_polygon(h, x))
                return false;
        for (const auto& h : holes)
            for (std::size_t i = 0; i < h.size(); ++i)
                if (on_segment(h[i], h[(i + 1) % h.size()], x))
                    return false;
        for (const auto& [a, b] : slits)
            if (on_segment(a, b, x))
                return false;
        return true;
    };
    return r;
}

Triangulation triangulate_region(const Region& region) {
    const auto& nodes = region.nodes;
    const std::size_t n = nodes.size();
    if (!region.inside)
        throw UnboundedRegion("triangulate_region: no membership predicate");
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (auto [a, b] : region.segments) {
        if (a >= n || b >= n || a == b)
            throw DegenerateInput("triangulate_region: bad segment");
        edges.emplace(std::min(a, b), std::max(a, b));
    }
    auto valid = [&](std::size_t i, std::size_t j) {
        for (auto [a, b] : region.segments)
            if (!open_segment_avoids(nodes[i], nodes[j], nodes[a], nodes[b]))
                return false;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i && k != j && strictly_between(nodes[i], nodes[j], nodes[k]))
                return false;
        return region.inside(midpoint(nodes[i], nodes[j]));
    };
    struct Cand {
        Rational len;
        std::size_t i, j;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edges.count({i, j}) || !valid(i, j))
                continue;
            const Rational dx = nodes[i].x - nodes[j].x, dy = nodes[i].y - nodes[j].y;
            cands.push_back({dx * dx + dy * dy, i, j});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.len != b.len)
            return a.len < b.len;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    for (const auto& c : cands) {
        bool ok = true;
        for (auto [a, b] : chosen)
            if (!open_segment_avoids(nodes[c.i], nodes[c.j], nodes[a], nodes[b]) ||
                !open_segment_avoids(nodes[a], nodes[b], nodes[c.i], nodes[c.j])) {
                ok = false;
                break;
            }
        if (ok) {
            chosen.emplace_back(c.i, c.j);
            edges.emplace(c.i, c.j);
        }
    }
    // Faces: empty triangles on the edge graph whose interior lies in the region.
    std::vector<std::set<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    Triangulation t;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b : adj[a]) {
            if (b <= a)
                continue;
            for (std::size_t c : adj[b]) {
                if (c <= b || !adj[a].count(c))
                    continue;
                const int o = orient(nodes[a], nodes[b], nodes[c]);
                if (o == 0)
                    continue;
                bool empty = true;
                for (std::size_t k = 0; k < n && empty; ++k) {
                    if (k == a || k == b || k == c)
                        continue;
                    const int o1 = orient(nodes[a], nodes[b], nodes[k]) * o;
                    const int o2 = orient(nodes[b], nodes[c], nodes[k]) * o;
                    const int o3 = orient(nodes[c], nodes[a], nodes[k]) * o;
                    if (o1 >= 0 && o2 >= 0 && o3 >= 0)
                        empty = false;
                }
                if (!empty)
                    continue;
                const Point2 g{(nodes[a].x + nodes[b].x + nodes[c].x) / 3,
                               (nodes[a].y + nodes[b].y + nodes[c].y) / 3};
                if (!region.inside(g))
                    continue;
                if (o > 0)
                    t.triangles.push_back({a, b, c});
                else
                    t.triangles.push_back({a, c, b});
            }
        }
    return t;
}

Rational triangulation_area(const std::vector<Point2>& nodes, const Triangulation& t) {
    Rational s = 0;
    for (const auto& tr : t.triangles) {
        const Rational a = signed_area2({nodes[tr[0]], nodes[tr[1]], nodes[tr[2]]});
        s += abs(a);
    }
    return s / 2;
}

bool triangles_disjoint(const std::vector<Point2>& nodes, const Triangulation& t) {
    // Two triangles with disjoint interiors are separated by a line through an
    // edge of one of them.
    auto separated = [&](const std::array<std::size_t, 3>& p, const std::array<std::size_t, 3>& q) {
        for (const auto* tri : {&p, &q}) {
            const auto* other = tri == &p ? &q : &p;
            const int o = orient(nodes[(*tri)[0]], nodes[(*tri)[1]], nodes[(*tri)[2]]);
            for (int e = 0; e < 3; ++e) {
                const Point2& a = nodes[(*tri)[e]];
                const Point2& b = nodes[(*tri)[(e + 1) % 3]];
                bool all_out = true;
                for (auto k : *other)
                    if (orient(a, b, nodes[k]) * o > 0)
                        all_out = false;
                if (all_out)
                    return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < t.triangles.size(); ++i)
        for (std::size_t j = i + 1; j < t.triangles.size(); ++j)
            if (!separated(t.triangles[i], t.triangles[j]))
                return false;
    return true;
}

Fan complete_fan_3d(const Fan& f, const RationalVector& v) {
    if (f.dim != 3 || v.size() != 3)
        throw std::invalid_argument("complete_fan_3d: fan must live in R^3");
    if (std::holds_alternative<Complete>(is_complete_exact(f)))
        return f;
    for (const auto& c : f.cones)
        if (!c.full_dimensional())
            throw HypothesisViolated("complete_fan_3d: lower-dimensional maximal cone");
    // Unpaired walls bound the uncovered region.
    std::map<std::vector<std::size_t>, int> count;
    for (std::size_t k = 0; k < f.cones.size(); ++k)
        for (const auto& nrm : f.cones[k].facet_normals) {
            std::vector<std::size_t> on;
            for (auto i : f.max_cones[k])
                if (dot(nrm, f.rays[i]) == 0)
                    on.push_back(i);
            ++count[on];
        }
    std::vector<std::vector<std::size_t>> walls;
    for (const auto& [on, c] : count)
        if (c == 1)
            walls.push_back(on);
    RationalVector neg = v;
    for (auto& x : neg)
        x = -x;
    if (!fan_contains(f, neg))
        throw HypothesisViolated("complete_fan_3d: -v is not covered");
    std::map<std::size_t, std::size_t> node_of;
    for (const auto& w : walls) {
        if (w.size() != 2)
            throw HypothesisViolated("complete_fan_3d: wall is not spanned by two rays");
        for (auto i : w)
            if (sgn(dot(to_rational(f.rays[i]), v)) <= 0)
                throw HypothesisViolated("complete_fan_3d: uncovered region meets <x, v> <= 0");
    }
    // Coordinates on the plane <x, v> = 1: x = a u1 + b u2 + v / |v|^2.
    const RationalMatrix perp = linalg::nullspace({v}, 3);
    const Rational vv = dot(v, v);
    RationalMatrix m(3, RationalVector(3));
    for (std::size_t d = 0; d < 3; ++d) {
        m[d][0] = perp[0][d];
        m[d][1] = perp[1][d];
        m[d][2] = v[d];
    }
    auto to_plane = [&](const IntVector& r) {
        RationalVector x = to_rational(r);
        const Rational h = dot(x, v);
        for (auto& c : x)
            c /= h;
        const auto sol = linalg::solve(m, x, 3);
        return Point2{(*sol)[0], (*sol)[1]};
    };
    auto to_space = [&](const Point2& p) {
        RationalVector x(3);
        for (std::size_t d = 0; d < 3; ++d)
            x[d] = p.x * perp[0][d] + p.y * perp[1][d] + v[d] / vv;
        return x;
    };
    Region region;
    std::vector<std::size_t> ray_of;
    for (const auto& w : walls)
        for (auto i : w)
            if (!node_of.count(i)) {
                node_of[i] = region.nodes.size();
                region.nodes.push_back(to_plane(f.rays[i]));
                ray_of.push_back(i);
            }
    for (const auto& w : walls)
        region.segments.emplace_back(node_of[w[0]], node_of[w[1]]);
    region.inside = [&](const Point2& p) { return !fan_contains(f, to_space(p)); };
    const Triangulation t = triangulate_region(region);
    std::vector<std::vector<IntVector>> gens;
    for (const auto& c : f.cones)
        gens.push_back(c.extremal_rays);
    for (const auto& tr : t.triangles)
        gens.push_back({f.rays[ray_of[tr[0]]], f.rays[ray_of[tr[1]]], f.rays[ray_of[tr[2]]]});
    return make_fan(3, gens);
}

} // namespace toricfan
