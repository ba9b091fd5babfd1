#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace toricfan;
using namespace testsupport;

namespace {

Fan p2_fan() { return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }
Fan p1_fan() { return make_fan(1, {{1}, {-1}}, {{0}, {1}}); }

Fan cube_fan() {
    std::vector<IntVector> rays;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1})
                rays.push_back({x, y, z});
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t axis = 0; axis < 3; ++axis)
        for (int side : {-1, 1}) {
            std::vector<std::size_t> c;
            for (std::size_t i = 0; i < 8; ++i)
                if (rays[i][axis] == side)
                    c.push_back(i);
            cones.push_back(c);
        }
    return make_fan(3, rays, cones);
}

Fan sec5_fan(bool drop_last = false) {
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& c : fixtures::sec5_cones()) {
        std::vector<std::size_t> idx;
        for (int i : c)
            idx.push_back(static_cast<std::size_t>(i - 1));
        cones.push_back(idx);
    }
    if (drop_last)
        cones.pop_back();
    return make_fan(4, fixtures::sec5_rays(), cones);
}

} // namespace

TEST_SUITE("fan") {

TEST_CASE("two nested open sets share one fan") {
    System& s = dim4();
    const Fan a = fan_of(s, "X \\ (Z(c) ∪ Z(b, d, f) ∪ Z(a, e, g))");
    const Fan b = fan_of(s, "X \\ (Z(c, d) ∪ Z(c, e) ∪ Z(a, e, g) ∪ Z(b, d, f))");
    CHECK(same_fan(a, b));
    CHECK(a.cone_count() == 9);
    CHECK(is_simplicial(a));
    const auto& r = s.rs.rays;
    CHECK(std::find(a.rays.begin(), a.rays.end(), r[2]) == a.rays.end());
    const std::set<IntVector> left{r[1], r[3], r[5]}, right{r[0], r[4], r[6]};
    for (const auto& c : a.max_cones) {
        int l = 0, rr = 0;
        for (auto i : c) {
            l += left.count(a.rays[i]);
            rr += right.count(a.rays[i]);
        }
        CHECK(l == 2);
        CHECK(rr == 2);
    }
    // the fan axioms, pair by pair
    int pairs = 0;
    for (std::size_t i = 0; i < a.cones.size(); ++i)
        for (std::size_t j = i + 1; j < a.cones.size(); ++j) {
            const auto m = intersect_cones(a.cones[i], a.cones[j]);
            CHECK(is_face_of(m, a.cones[i]));
            CHECK(is_face_of(m, a.cones[j]));
            ++pairs;
        }
    CHECK(pairs == 36);
}

TEST_CASE("the whole catalog is degenerate") {
    System& s = dim3();
    Collection all(s.cat.size());
    for (std::size_t p = 0; p < s.cat.size(); ++p)
        all.set(p);
    CHECK(std::holds_alternative<Degenerate>(fan_from_collection(s.rs, s.cat, all)));
}

TEST_CASE("simplicial") {
    CHECK(is_simplicial(p2_fan()));
    CHECK_FALSE(is_simplicial(cube_fan()));
    CHECK_FALSE(is_simplicial(fan_of(dim3(), "X \\ (Z(b, d, f) ∪ Z(a, e, f) ∪ Z(c))")));
}

TEST_CASE("completeness") {
    CHECK(std::holds_alternative<Complete>(is_complete_exact(p2_fan())));
    CHECK(std::holds_alternative<Complete>(is_complete_exact(cube_fan())));
    const auto r = is_complete_exact(sec5_fan());
    REQUIRE(std::holds_alternative<Incomplete>(r));
    CHECK(std::get<Incomplete>(r).witness == RationalVector{0, 0, 0, 1});
    CHECK_FALSE(fan_contains(sec5_fan(), {0, 0, 0, 1}));
    CHECK_FALSE(complete_by_complements(sec5_fan()));
    CHECK(complete_by_complements(cube_fan()));
    // a lower-dimensional cone alone
    const Fan ray = make_fan(2, {{1, 0}}, {{0}});
    const auto w = is_complete_exact(ray);
    REQUIRE(std::holds_alternative<Incomplete>(w));
    CHECK_FALSE(fan_contains(ray, std::get<Incomplete>(w).witness));
}

TEST_CASE("random incomplete witnesses are uncovered") {
    const Fan cube = cube_fan();
    for (std::size_t drop = 0; drop < cube.max_cones.size(); ++drop) {
        auto cones = cube.max_cones;
        cones.erase(cones.begin() + static_cast<long>(drop));
        const Fan f = make_fan(3, cube.rays, cones);
        const auto r = is_complete_exact(f);
        REQUIRE(std::holds_alternative<Incomplete>(r));
        CHECK_FALSE(fan_contains(f, std::get<Incomplete>(r).witness));
        CHECK_FALSE(complete_by_complements(f));
    }
}

TEST_CASE("six-ray census fans: fan axioms and both completeness tests") {
    const auto& fans = dim3_fans();
    CHECK(fans.size() == 87);
    for (const auto& f : fans) {
        CHECK_FALSE(fan_axiom_failure(f));
        const bool wall = std::holds_alternative<Complete>(is_complete_exact(f));
        CHECK(wall);
        CHECK(wall == complete_by_complements(f));
        for (const auto& r : f.rays)
            CHECK(std::find(dim3().rs.rays.begin(), dim3().rs.rays.end(), r) !=
                  dim3().rs.rays.end());
    }
}

TEST_CASE("coverage") {
    const Coverage c = coverage_fraction(p2_fan(), 2000, 1);
    CHECK(c.fraction == 1.0);
    CHECK(c.hits == 2000);
    const Coverage s = coverage_fraction(sec5_fan(), 20000, 0);
    CHECK(s.fraction < 1.0);
    CHECK(s.fraction > 0.5);
    CHECK(coverage_fraction(sec5_fan(), 20000, 0).hits == s.hits);
    Fan empty;
    empty.dim = 3;
    CHECK(coverage_fraction(empty, 100, 0).fraction == 0.0);
}

TEST_CASE("products") {
    const Fan sq = product_fan(p1_fan(), p1_fan());
    CHECK(sq.cone_count() == 4);
    CHECK(sq.rays == std::vector<IntVector>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
    const Fan p = product_fan(p2_fan(), p1_fan());
    CHECK(p.cone_count() == 6);
    CHECK(is_simplicial(p));
    CHECK(same_fan(product_fan(p2_fan(), zero_fan()), p2_fan()));
    CHECK_FALSE(is_simplicial(product_fan(cube_fan(), p1_fan())));
    CHECK(is_simplicial(product_fan(p2_fan(), p2_fan())));
    CHECK(std::holds_alternative<Complete>(is_complete_exact(product_fan(p2_fan(), p1_fan()))));
}

TEST_CASE("maximality") {
    const RaySystem u = validate_rays(fixtures::sec5_rays());
    CHECK(std::holds_alternative<Maximal>(is_maximal_fan(sec5_fan(), u)));
    const auto r = is_maximal_fan(sec5_fan(true), u);
    REQUIRE(std::holds_alternative<Extendable>(r));
    CHECK(std::get<Extendable>(r).generators == std::vector<std::size_t>{1, 3, 5, 6});
    const RaySystem p2 = validate_rays({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(std::holds_alternative<Maximal>(is_maximal_fan(p2_fan(), p2)));
}

TEST_CASE("lifted descriptors") {
    System& s = dim4();
    const Fan f = fan_of(s, "X \\ (Z(c) ∪ Z(b, d, f) ∪ Z(a, e, g))");
    const auto l = lift_fans(f, s.rs);
    CHECK(l.tilde.to_string() == "X \\ (Z(c) ∪ Z(a, e, g) ∪ Z(b, d, f))");
    CHECK(l.hat.to_string() == "X \\ (Z(c, d) ∪ Z(c, e) ∪ Z(a, e, g) ∪ Z(b, d, f))");
    const RaySystem p2 = validate_rays({{1, 0}, {0, 1}, {-1, -1}});
    const auto q = lift_fans(p2_fan(), p2);
    CHECK(q.tilde == q.hat);
    CHECK(q.tilde.to_string() == "X \\ (Z(a, b, c))");
    for (const auto& g : dim3_fans())
        if (is_simplicial(g) && g.rays.size() == 6) {
            const auto m = lift_fans(g, dim3().rs);
            CHECK(m.tilde == m.hat);
        }
}

TEST_CASE("distinct census fans are the maximal fans found by cliques") {
    std::set<std::vector<std::vector<IntVector>>> census, cliques;
    for (const auto& f : dim3_fans())
        census.insert(fan_key(f));
    for (const auto& f : maximal_fans_by_cliques(dim3().rs))
        cliques.insert(fan_key(f));
    CHECK(census.size() == 51);
    CHECK(census == cliques);
}

TEST_CASE("product system") {
    System s(fixtures::p2_times_p1_rays());
    s.enumerate();
    std::set<std::vector<std::vector<IntVector>>> direct;
    for (const auto& c : s.maximal)
        if (auto fr = fan_from_collection(s.rs, s.cat, c); std::holds_alternative<Fan>(fr))
            direct.insert(fan_key(std::get<Fan>(fr)));
    std::set<std::vector<std::vector<IntVector>>> by_clique;
    for (const auto& f : maximal_fans_by_cliques(s.rs))
        by_clique.insert(fan_key(f));
    CHECK(direct == by_clique);
    CHECK(direct == std::set<std::vector<std::vector<IntVector>>>{
                        fan_key(product_fan(p2_fan(), p1_fan()))});
}

} // TEST_SUITE
