// One line per acceptance criterion; exit status 1 if any fails.
#include "toricfan/census.hpp"
#include "toricfan/completion.hpp"
#include "toricfan/fixtures.hpp"
#include "toricfan/projectivity.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

using namespace toricfan;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

template <typename F>
void criterion(int k, const std::string& what, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s  %s (%s) [%.1fs]\n", k, o.pass ? "PASS" : "FAIL", what.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
}

std::string n(std::size_t x) { return std::to_string(x); }

Fan cube_minus_one() {
    std::vector<IntVector> rays;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1})
                rays.push_back({x, y, z});
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t axis = 0; axis < 3; ++axis)
        for (int side : {-1, 1}) {
            if (axis == 0 && side == -1)
                continue;
            std::vector<std::size_t> c;
            for (std::size_t i = 0; i < 8; ++i)
                if (rays[i][axis] == side)
                    c.push_back(i);
            cones.push_back(c);
        }
    return make_fan(3, rays, cones);
}

// Random star-shaped simple polygon with rational nodes.
std::vector<Point2> random_polygon(std::mt19937_64& rng) {
    for (;;) {
        const std::size_t m = 3 + rng() % 10;
        std::vector<std::pair<double, Point2>> pts;
        std::uniform_real_distribution<double> ang(0, 6.283185307179586);
        std::uniform_int_distribution<int> rad(2, 40);
        for (std::size_t i = 0; i < m; ++i) {
            const double a = ang(rng);
            const int r = rad(rng);
            Rational x(static_cast<long>(std::lround(r * std::cos(a) * 8)), 8 + rng() % 3);
            Rational y(static_cast<long>(std::lround(r * std::sin(a) * 8)), 8 + rng() % 3);
            x.canonicalize();
            y.canonicalize();
            pts.push_back({a, {x, y}});
        }
        std::sort(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.first < b.first; });
        std::vector<Point2> out;
        for (auto& pr : pts)
            out.push_back(pr.second);
        bool simple = true;
        const std::size_t k = out.size();
        for (std::size_t i = 0; i < k && simple; ++i) {
            simple = orient(out[(i + k - 1) % k], out[i], out[(i + 1) % k]) != 0;
            for (std::size_t j = i + 1; j < k && simple; ++j) {
                simple = !(out[i] == out[j]);
                const std::size_t i2 = (i + 1) % k, j2 = (j + 1) % k;
                if (simple && j != i2 && i != j2)
                    simple = open_segment_avoids(out[i], out[i2], out[j], out[j2]) &&
                             open_segment_avoids(out[j], out[j2], out[i], out[i2]);
            }
        }
        if (simple && signed_area2(out) > 0)
            return out;
    }
}

} // namespace

int main() {
    CensusOptions opt; // 100000 samples, seed 0
    opt.jobs = 1;
    std::optional<CensusReport> dim3, dim4;

    criterion(1, "six rays in dimension 3: 100 open sets, reference table, counts", [&] {
        dim3 = run_census(fixtures::dim3_rays(), opt);
        std::multiset<OpenSetDescriptor> mine, ref;
        for (const auto& row : dim3->rows)
            mine.insert(row.descriptor);
        for (const auto& row : fixtures::dim3_census())
            ref.insert(parse_descriptor(row.descriptor, 6));
        const auto& c = dim3->counts;
        bool all_complete = true;
        for (const auto& row : dim3->rows)
            all_complete = all_complete && (!row.nondegenerate || row.complete);
        const bool ok = mine == ref && c.rows == 100 && c.nondegenerate == 87 &&
                        c.projective == 73 && c.projective_simplicial == 54 &&
                        c.complete_nonprojective == 14 && c.complete_nonprojective_simplicial == 2 &&
                        all_complete;
        return Outcome{ok, counts_line(c)};
    });

    criterion(2, "seven rays in dimension 4: 112 nondegenerate, 85 projective, 27 non-complete", [&] {
        dim4 = run_census(fixtures::dim4_rays(), opt);
        const auto& c = dim4->counts;
        const bool ok = c.nondegenerate == 112 && c.projective == 85 &&
                        c.projective_simplicial == 36 && c.complete_nonprojective == 0 &&
                        c.noncomplete == 27 && c.noncomplete_simplicial == 8;
        return Outcome{ok, counts_line(c)};
    });

    criterion(3, "support-function LP agrees with the chamber scan on every nondegenerate fan", [&] {
        if (!dim3 || !dim4)
            return Outcome{false, "census missing"};
        std::size_t checked = 0, bad = 0;
        for (const auto* rep : {&*dim3, &*dim4})
            for (const auto& row : rep->rows)
                if (row.nondegenerate) {
                    ++checked;
                    bad += row.projective != row.git;
                }
        return Outcome{checked == 87 + 112 && bad == 0,
                       n(checked) + " fans, " + n(bad) + " disagreements"};
    });

    criterion(4, "wall pairing equals the complement test; coverage 1 exactly on complete fans", [&] {
        if (!dim3 || !dim4)
            return Outcome{false, "census missing"};
        std::size_t agree = 0, total = 0, cov_bad = 0;
        for (const auto& row : dim3->rows)
            if (row.nondegenerate) {
                ++total;
                agree += row.complete == complete_by_complements(*row.fan);
            }
        for (const auto* rep : {&*dim3, &*dim4})
            for (const auto& row : rep->rows)
                if (row.nondegenerate) {
                    if (row.coverage.samples != 100000)
                        ++cov_bad;
                    else if (row.complete != (row.coverage.fraction == 1.0))
                        ++cov_bad;
                }
        return Outcome{agree == 87 && total == 87 && cov_bad == 0,
                       n(agree) + "/" + n(total) + " agree, " + n(cov_bad) + " coverage mismatches"};
    });

    criterion(5, "eight-cone fan over u1..u7: incomplete at (0,0,0,1), maximal", [&] {
        std::vector<std::vector<std::size_t>> cones;
        for (const auto& c : fixtures::sec5_cones()) {
            std::vector<std::size_t> idx;
            for (int i : c)
                idx.push_back(static_cast<std::size_t>(i - 1));
            cones.push_back(idx);
        }
        const Fan f = make_fan(4, fixtures::sec5_rays(), cones);
        const auto r = is_complete_exact(f);
        const auto* inc = std::get_if<Incomplete>(&r);
        const bool witness = inc && inc->witness == RationalVector{0, 0, 0, 1};
        const bool maximal = std::holds_alternative<Maximal>(
            is_maximal_fan(f, validate_rays(fixtures::sec5_rays())));
        return Outcome{witness && maximal && !fan_contains(f, {0, 0, 0, 1}),
                       inc ? "witness " + to_string(inc->witness) : "reported complete"};
    });

    auto fixture = [&](const std::string& name) {
        std::ostringstream log;
        const bool ok = verify_fixture(name, log, opt);
        if (!ok)
            std::cout << log.str();
        return ok;
    };

    criterion(6, "two nested maximal open sets with one simplicial fan of 9 cones", [&] {
        return Outcome{fixture("reichstein"), "fan equality, unused ray, lifts, saturation"};
    });

    criterion(7, "products: maximal fans and semistable sets factor", [&] {
        return Outcome{fixture("products"), "P2 x P1"};
    });

    criterion(8, "complete fans with d + 2 rays are projective; a 6-ray counterexample in d = 3", [&] {
        std::mt19937_64 rng(2024);
        std::size_t tried = 0, failed = 0;
        for (std::size_t d : {2, 3, 4})
            for (int k = 0; k < 200; ++k) {
                const Fan f = random_complete_fan(d, rng);
                ++tried;
                const auto r = strictly_convex_support_function(f);
                const auto* c = std::get_if<SupportFunctionCertificate>(&r);
                if (f.rays.size() != d + 2 || !c || !verify_certificate(f, *c))
                    ++failed;
            }
        bool six = false;
        if (dim3)
            for (const auto& row : dim3->rows)
                six = six || (row.nondegenerate && row.complete && !row.projective &&
                              row.fan->rays.size() == 6);
        return Outcome{tried >= 500 && failed == 0 && six,
                       n(tried) + " random fans, " + n(failed) + " failures, 6-ray example " +
                           (six ? "found" : "missing")};
    });

    criterion(9, "triangulations of random polygons; completing the cube fan", [&] {
        std::mt19937_64 rng(99);
        std::size_t bad = 0;
        const int polys = 1000;
        for (int k = 0; k < polys; ++k) {
            const auto nodes = random_polygon(rng);
            const auto t = triangulate_polygon(PolyChain{nodes});
            bool ok = t.triangles.size() == nodes.size() - 2 &&
                      triangulation_area(nodes, t) * 2 == signed_area2(nodes) &&
                      triangles_disjoint(nodes, t);
            for (const auto& tri : t.triangles)
                for (auto i : tri)
                    ok = ok && i < nodes.size();
            bad += !ok;
        }
        const Fan f = cube_minus_one();
        const Fan g = complete_fan_3d(f, {-1, 0, 0});
        const bool cube = std::holds_alternative<Complete>(is_complete_exact(g)) && g.rays == f.rays;
        return Outcome{bad == 0 && cube, n(polys) + " polygons, " + n(bad) + " bad; cube " +
                                             (cube ? "completed without new rays" : "FAILED")};
    });

    criterion(10, "reports are byte-identical for 1 and 4 workers", [&] {
        if (!dim3)
            return Outcome{false, "census missing"};
        CensusOptions four = opt;
        four.jobs = 4;
        const CensusReport again = run_census(fixtures::dim3_rays(), four);
        const bool same = report_json(*dim3) == report_json(again) &&
                          report_markdown(*dim3) == report_markdown(again) &&
                          report_csv(*dim3) == report_csv(again);
        return Outcome{same, "json, markdown and csv compared"};
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
