#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace toricfan;
using namespace testsupport;

namespace {

Collection single(const PolytopeCatalog& cat, std::size_t p) {
    Collection c(cat.size());
    c.set(p);
    return c;
}

// Conditions checked directly on the geometry: upward closed under
// containment, and P cap Q is a member whenever it sits in a proper face of P
// or of Q.
bool valid_by_geometry(const PolytopeCatalog& cat, const Collection& c) {
    const auto members = c.indices();
    for (auto p : members)
        for (std::size_t q = 0; q < cat.size(); ++q) {
            bool inside = true;
            for (const auto& v : cat.polys[p].geometry.vertices)
                inside = inside && polytope_contains(cat.polys[q].geometry, v);
            if (inside && !c.test(q))
                return false;
        }
    for (auto p : members)
        for (auto q : members) {
            const auto& gp = cat.polys[p].geometry;
            const auto& gq = cat.polys[q].geometry;
            const auto m = intersect_polytopes(gp, gq);
            bool proper = false;
            for (const auto* g : {&gp, &gq})
                if (m.vertices != g->vertices)
                    for (std::size_t f = 0; f < cat.size(); ++f) {
                        const auto& gf = cat.polys[f].geometry;
                        if (gf.vertices != g->vertices && is_face_of(gf, *g)) {
                            bool in = true;
                            for (const auto& v : m.vertices)
                                in = in && polytope_contains(gf, v);
                            proper = proper || in;
                        }
                    }
            if (!proper)
                continue;
            bool found = false;
            for (auto k : members)
                found = found || cat.polys[k].geometry.vertices == m.vertices;
            if (!found)
                return false;
        }
    return true;
}

std::vector<Collection> brute_force(const PolytopeCatalog& cat) {
    const std::size_t n = cat.size();
    REQUIRE(n <= 16);
    std::vector<Collection> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        Collection c(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U)
                c.set(i);
        if (valid_by_geometry(cat, c))
            out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Closure by repeated full passes.
std::optional<Collection> naive_close(const PolytopeCatalog& cat, Collection c) {
    for (bool changed = true; changed;) {
        changed = false;
        const auto members = c.indices();
        for (auto p : members)
            for (auto q : cat.contained_in[p].indices())
                if (!c.test(q)) {
                    c.set(q);
                    changed = true;
                }
        for (auto p : members)
            for (auto q : members) {
                const auto cls = intersection_class(cat, p, q);
                if (cls.kind == IntersectionKind::Incompatible)
                    return std::nullopt;
                if (cls.kind == IntersectionKind::MustContain && !c.test(cls.required)) {
                    c.set(cls.required);
                    changed = true;
                }
            }
    }
    return c;
}

} // namespace

TEST_SUITE("enumerator") {

TEST_CASE("closure examples") {
    System& s = dim3();
    const ClosureOperator& op = *s.op;
    const auto full = single(s.cat, s.cat.full_index());
    CHECK(op.close(full) == full);
    Collection all(s.cat.size());
    for (std::size_t p = 0; p < s.cat.size(); ++p)
        all.set(p);
    CHECK(op.close(all) == all);
    CHECK(open_set_descriptor(s.cat, all).to_string() == "X");
    const auto c3 = single(s.cat, s.cat.index_of(0b000100));
    CHECK(op.close(c3) == naive_close(s.cat, c3));
}

TEST_CASE("closure agrees with repeated passes on random seeds") {
    for (System* s : {&dim3(), &dim4()}) {
        std::mt19937_64 rng(4);
        for (int k = 0; k < 200; ++k) {
            Collection seed(s->cat.size());
            const int m = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < m; ++i)
                seed.set(rng() % s->cat.size());
            CHECK(s->op->close(seed) == naive_close(s->cat, seed));
        }
    }
}

TEST_CASE("closure operator laws") {
    System& s = dim4();
    std::mt19937_64 rng(8);
    for (int k = 0; k < 300; ++k) {
        Collection a(s.cat.size());
        for (int i = 0; i < 2; ++i)
            a.set(rng() % s.cat.size());
        Collection b = a;
        b.set(rng() % s.cat.size());
        const auto ca = s.op->close(a);
        const auto cb = s.op->close(b);
        if (!ca)
            continue;
        CHECK(a.is_subset_of(*ca));
        CHECK(s.op->close(*ca) == ca);
        CHECK(s.op->is_closed(*ca));
        if (cb)
            CHECK(ca->is_subset_of(*cb));
    }
}

TEST_CASE("enumeration equals brute force on small systems") {
    for (const auto& rays : {std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -1}},
                             std::vector<IntVector>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                             std::vector<IntVector>{{1, 0}, {0, 1}, {-1, 1}, {0, -1}},
                             std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -2}, {1, 1}}}) {
        System s(rays);
        if (s.cat.size() > 16)
            continue;
        EnumerationStats st;
        const auto closed = enumerate_closed(*s.op, 1, &st);
        CHECK(closed == brute_force(s.cat));
        CHECK(st.closed == closed.size());
    }
}

TEST_CASE("projective plane weights") {
    const WeightSystem ws{1, 3, {{1, 1, 1}}};
    const PolytopeCatalog cat = build_catalog(ws);
    const ClosureOperator op(cat);
    const auto closed = enumerate_closed(op);
    const auto mx = maximal_collections(op, closed);
    const auto full = single(cat, cat.full_index());
    CHECK(std::find(mx.begin(), mx.end(), full) != mx.end());
    const auto d = open_set_descriptor(cat, full);
    CHECK(d.to_string() == "X \\ (Z(a, b, c))");
}

TEST_CASE("maximality shortcut agrees with the pairwise scan") {
    for (const auto& rays : {std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -1}},
                             std::vector<IntVector>{{1, 0}, {0, 1}, {-1, 1}, {0, -1}},
                             std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -2}, {1, 1}},
                             std::vector<IntVector>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}},
                             std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                                    {-1, -1, 0}, {0, -1, -1}},
                             std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                                    {-1, -1, -1}, {1, 1, 0}, {0, 1, 1}}}) {
        System s(rays);
        const auto closed = enumerate_closed(*s.op);
        auto a = maximal_collections(*s.op, closed);
        auto b = maximal_collections_by_scan(s.cat, closed);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        CHECK(!a.empty());
    }
}

TEST_CASE("deterministic across worker counts") {
    System& s = dim4();
    EnumerationStats a, b;
    const auto one = enumerate_closed(*s.op, 1, &a);
    const auto four = enumerate_closed(*s.op, 4, &b);
    CHECK(one == four);
    CHECK(a.closed == b.closed);
    CHECK(one.size() == 21588);
    auto m1 = maximal_collections(*s.op, one, 1);
    auto m4 = maximal_collections(*s.op, four, 4);
    CHECK(m1 == m4);
}

TEST_CASE("saturation") {
    const WeightSystem ws{1, 3, {{1, 1, 1}}};
    const PolytopeCatalog cat = build_catalog(ws);
    Collection both(cat.size());
    both.set(cat.origin_index());
    both.set(cat.full_index());
    const auto full = single(cat, cat.full_index());
    CHECK(is_saturated_in(cat, both, both));
    CHECK_FALSE(is_saturated_in(cat, full, both));
    const auto w = saturation_witness(cat, full, both);
    REQUIRE(w);
    CHECK(w->first == static_cast<std::size_t>(cat.full_index()));
    CHECK(w->second == static_cast<std::size_t>(cat.origin_index()));
    CHECK_THROWS_AS(is_saturated_in(cat, both, full), NotSubset);
}

TEST_CASE("nested maximal pair") {
    System& s = dim4();
    const auto small = s.collection("X \\ (Z(c) ∪ Z(b, d, f) ∪ Z(a, e, g))");
    const auto large = s.collection("X \\ (Z(c, d) ∪ Z(c, e) ∪ Z(a, e, g) ∪ Z(b, d, f))");
    CHECK(small.is_subset_of(large));
    CHECK(small != large);
    CHECK_FALSE(is_saturated_in(s.cat, small, large));
    CHECK(s.op->is_closed(small));
    CHECK(s.op->is_closed(large));
}

TEST_CASE("the hundred maximal collections of the six-ray system") {
    System& s = dim3();
    CHECK(s.closed.size() == 76100);
    REQUIRE(s.maximal.size() == 100);
    std::set<OpenSetDescriptor> mine, ref;
    for (const auto& c : s.maximal)
        mine.insert(open_set_descriptor(s.cat, c));
    for (const auto& row : fixtures::dim3_census())
        ref.insert(parse_descriptor(row.descriptor, 6));
    CHECK(mine == ref);
}

TEST_CASE("descriptors round trip") {
    System& s = dim3();
    for (const auto& c : s.maximal) {
        const auto d = open_set_descriptor(s.cat, c);
        CHECK(collection_from_descriptor(s.cat, d) == c);
        CHECK(parse_descriptor(d.to_string(), 6) == d);
    }
    const auto d = parse_descriptor("X \\ (Z(d) ∪ Z(a, c, e, f) ∪ Z(b, f))", 6);
    CHECK(d.forbidden == std::vector<Support>{0b001000, 0b100010, 0b110101});
    const auto tex = parse_descriptor("X \\setminus (Z(d) \\cup Z(a, c, e, f) \\cup Z(b, f))", 6);
    CHECK(tex == d);
    CHECK(parse_descriptor("X", 6).forbidden.empty());
    CHECK_THROWS(parse_descriptor("X \\ (Z(h))", 6));
}

TEST_CASE("present supports are upward closed") {
    System& s = dim3();
    for (const auto& c : s.maximal) {
        const auto d = open_set_descriptor(s.cat, c);
        for (Support j = 0; j < 64; ++j)
            if (support_allowed(d, j))
                for (std::size_t i = 0; i < 6; ++i)
                    CHECK(support_allowed(d, j | Support{1} << i));
    }
}

TEST_CASE("descriptor of the smaller nested set") {
    System& s = dim4();
    const auto c = s.collection("X \\ (Z(b, d, f) ∪ Z(a, e, g) ∪ Z(c))");
    const auto d = open_set_descriptor(s.cat, c);
    CHECK(d.forbidden == std::vector<Support>{0b0000100, 0b1010001, 0b0101010});
    CHECK(d.to_string() == "X \\ (Z(c) ∪ Z(a, e, g) ∪ Z(b, d, f))");
}

} // TEST_SUITE
