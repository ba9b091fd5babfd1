#include "support.hpp"

#include "toricfan/completion.hpp"
#include "toricfan/projectivity.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace toricfan;
using namespace testsupport;

namespace {

Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

bool segments_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    return !open_segment_avoids(a, b, c, d) || !open_segment_avoids(c, d, a, b);
}

bool is_simple(const std::vector<Point2>& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p[i] == p[j])
                return false;
            const std::size_t i2 = (i + 1) % n, j2 = (j + 1) % n;
            if (j == i2 || i == j2)
                continue;
            if (segments_cross(p[i], p[i2], p[j], p[j2]))
                return false;
        }
    for (std::size_t i = 0; i < n; ++i)
        if (orient(p[(i + n - 1) % n], p[i], p[(i + 1) % n]) == 0)
            return false;
    return true;
}

// Star-shaped polygon around the origin with rational nodes.
std::vector<Point2> random_polygon(std::mt19937_64& rng) {
    for (;;) {
        const std::size_t n = 3 + rng() % 10;
        std::vector<std::pair<double, Point2>> pts;
        std::uniform_real_distribution<double> ang(0, 2 * M_PI);
        std::uniform_int_distribution<int> rad(2, 40);
        for (std::size_t i = 0; i < n; ++i) {
            const double a = ang(rng);
            const int r = rad(rng);
            const Rational x(static_cast<long>(std::lround(r * std::cos(a) * 8)), 8 + rng() % 3);
            const Rational y(static_cast<long>(std::lround(r * std::sin(a) * 8)), 8 + rng() % 3);
            pts.push_back({a, {x, y}});
        }
        std::sort(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.first < b.first; });
        std::vector<Point2> out;
        for (auto& [a, p] : pts) {
            p.x.canonicalize();
            p.y.canonicalize();
            out.push_back(p);
        }
        if (is_simple(out) && signed_area2(out) > 0)
            return out;
    }
}

void check_triangulation(const std::vector<Point2>& nodes, const Triangulation& t,
                         const Rational& area2) {
    for (const auto& tri : t.triangles)
        for (auto i : tri)
            CHECK(i < nodes.size());
    CHECK(triangulation_area(nodes, t) * 2 == area2);
    CHECK(triangles_disjoint(nodes, t));
    for (const auto& tri : t.triangles)
        CHECK(orient(nodes[tri[0]], nodes[tri[1]], nodes[tri[2]]) > 0);
}

Fan cube_fan(bool drop_minus_x) {
    std::vector<IntVector> rays;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1})
                rays.push_back({x, y, z});
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t axis = 0; axis < 3; ++axis)
        for (int side : {-1, 1}) {
            if (drop_minus_x && axis == 0 && side == -1)
                continue;
            std::vector<std::size_t> c;
            for (std::size_t i = 0; i < 8; ++i)
                if (rays[i][axis] == side)
                    c.push_back(i);
            cones.push_back(c);
        }
    return make_fan(3, rays, cones);
}

} // namespace

TEST_SUITE("completion") {

TEST_CASE("orientation and segments") {
    CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
    CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
    CHECK(open_segment_avoids(pt(0, 0), pt(2, 0), pt(0, 1), pt(2, 1)));
    CHECK_FALSE(open_segment_avoids(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
    // touching at an endpoint of the open segment does not count
    CHECK(open_segment_avoids(pt(0, 0), pt(2, 0), pt(2, 0), pt(3, 1)));
    // an endpoint of [a, b] inside (p, q) does
    CHECK_FALSE(open_segment_avoids(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 1)));
    const std::vector<Point2> sq{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
    CHECK(signed_area2(sq) == 8);
    CHECK(inside_polygon(sq, pt(1, 1)));
    CHECK_FALSE(inside_polygon(sq, pt(2, 1)));
    CHECK_FALSE(inside_polygon(sq, pt(3, 1)));
}

TEST_CASE("closest visible node") {
    // square with a notch on the top side; from the bottom-left corner the
    // apex of the notch is the nearest visible node
    const PolyChain c{{pt(0, 0), pt(6, 0), pt(6, 6), pt(4, 6), pt(3, 2), pt(2, 6), pt(0, 6)}};
    CHECK(closest_visible_node(c, 0) == 4);
    CHECK(is_internal_diagonal(c, 0, 4));
    const PolyChain tri{{pt(0, 0), pt(1, 0), pt(0, 1)}};
    const auto w = closest_visible_node(tri, 0);
    CHECK((w == 1 || w == 2));
    CHECK_THROWS_AS(closest_visible_node(c, 4), NotConvexNode);
}

TEST_CASE("small polygons") {
    const PolyChain tri{{pt(0, 0), pt(1, 0), pt(0, 1)}};
    CHECK(triangulate_polygon(tri).triangles.size() == 1);
    const PolyChain quad{{pt(0, 0), pt(3, 0), pt(4, 2), pt(0, 5)}};
    const auto q = triangulate_polygon(quad);
    CHECK(q.triangles.size() == 2);
    check_triangulation(quad.nodes, q, signed_area2(quad.nodes));
    const PolyChain ell{{pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 2), pt(2, 4), pt(0, 4)}};
    const auto l = triangulate_polygon(ell);
    CHECK(l.triangles.size() == 4);
    check_triangulation(ell.nodes, l, signed_area2(ell.nodes));
    // clockwise input is accepted
    PolyChain cw = ell;
    std::reverse(cw.nodes.begin(), cw.nodes.end());
    const auto r = triangulate_polygon(cw);
    check_triangulation(cw.nodes, r, signed_area2(ell.nodes));
}

TEST_CASE("random simple polygons") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 1000; ++k) {
        const auto nodes = random_polygon(rng);
        const PolyChain c{nodes};
        const auto t = triangulate_polygon(c);
        CHECK(t.triangles.size() == nodes.size() - 2);
        check_triangulation(nodes, t, signed_area2(nodes));
        const std::size_t n = nodes.size();
        for (std::size_t v = 0; v < n; ++v) {
            if (orient(nodes[(v + n - 1) % n], nodes[v], nodes[(v + 1) % n]) <= 0)
                continue;
            const std::size_t w = closest_visible_node(c, v);
            if (w != (v + 1) % n && w != (v + n - 1) % n) {
                CHECK(is_internal_diagonal(c, v, w));
                for (std::size_t i = 0; i < n; ++i)
                    if (i != v && i != w && (i + 1) % n != v && (i + 1) % n != w)
                        CHECK_FALSE(segments_cross(nodes[v], nodes[w], nodes[i], nodes[(i + 1) % n]));
            }
        }
    }
}

TEST_CASE("regions") {
    const std::vector<Point2> outer{pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6)};
    const std::vector<Point2> hole{pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)};
    const Region annulus = polygon_region(outer, {hole}, {});
    const auto a = triangulate_region(annulus);
    check_triangulation(annulus.nodes, a, Rational(2 * (36 - 4)));
    CHECK(a.triangles.size() == 8);

    const Region plain = polygon_region(outer, {}, {});
    const auto p = triangulate_region(plain);
    CHECK(p.triangles.size() == triangulate_polygon(PolyChain{outer}).triangles.size());
    check_triangulation(plain.nodes, p, Rational(72));

    const Region slit = polygon_region(outer, {}, {{pt(2, 3), pt(4, 3)}});
    const auto s = triangulate_region(slit);
    check_triangulation(slit.nodes, s, Rational(72));
    for (const auto& tri : s.triangles)
        for (int e = 0; e < 3; ++e) {
            const Point2& u = slit.nodes[tri[e]];
            const Point2& v = slit.nodes[tri[(e + 1) % 3]];
            const bool on_slit =
                (u == pt(2, 3) || u == pt(4, 3)) && (v == pt(2, 3) || v == pt(4, 3));
            CHECK((on_slit || open_segment_avoids(u, v, pt(2, 3), pt(4, 3))));
        }
}

TEST_CASE("completing the cube fan") {
    const Fan f = cube_fan(true);
    REQUIRE(std::holds_alternative<Incomplete>(is_complete_exact(f)));
    const Fan g = complete_fan_3d(f, {-1, 0, 0});
    CHECK(std::holds_alternative<Complete>(is_complete_exact(g)));
    CHECK(g.rays == f.rays);
    CHECK(g.cone_count() == f.cone_count() + 2);
    for (const auto& c : f.max_cones)
        CHECK(std::find(g.max_cones.begin(), g.max_cones.end(), c) != g.max_cones.end());
    CHECK_FALSE(fan_axiom_failure(g));

    const Fan whole = cube_fan(false);
    CHECK(same_fan(complete_fan_3d(whole, {1, 0, 0}), whole));
    CHECK_THROWS_AS(complete_fan_3d(f, {1, 0, 0}), HypothesisViolated);

    const Fan sec5 = make_fan(4, fixtures::sec5_rays(), {{0, 1, 2, 6}});
    CHECK_THROWS_AS(complete_fan_3d(sec5, {0, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("completing fans with several missing cones") {
    // face fan of a roofed box, with the four roof cones removed
    RationalMatrix pts;
    for (int x : {-2, 2})
        for (int y : {-2, 2})
            pts.push_back({x, y, -1});
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            pts.push_back({x, y, 1});
    pts.push_back({0, 0, 2});
    const Fan whole = face_fan(hull_vertices(pts));
    const IntVector apex{0, 0, 1};
    std::vector<std::vector<IntVector>> kept;
    for (const auto& c : whole.max_cones) {
        std::vector<IntVector> gens;
        for (auto i : c)
            gens.push_back(whole.rays[i]);
        if (std::find(gens.begin(), gens.end(), apex) == gens.end())
            kept.push_back(gens);
    }
    const Fan f = make_fan(3, kept);
    CHECK(f.cone_count() == whole.cone_count() - 4);
    const Fan g = complete_fan_3d(f, {0, 0, 1});
    CHECK(std::holds_alternative<Complete>(is_complete_exact(g)));
    CHECK_FALSE(fan_axiom_failure(g));
    CHECK(g.rays == f.rays);
    CHECK(g.cone_count() == f.cone_count() + 2);
}

} // TEST_SUITE
