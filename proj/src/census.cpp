#include "toricfan/census.hpp"

#include "toricfan/fixtures.hpp"
#include "toricfan/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace toricfan {

CensusCounts count_rows(const std::vector<ClassificationRecord>& rows) {
    CensusCounts c;
    c.rows = rows.size();
    for (const auto& r : rows) {
        if (!r.nondegenerate) {
            ++c.degenerate;
            c.degenerate_git += r.git;
            continue;
        }
        ++c.nondegenerate;
        if (r.projective) {
            ++c.projective;
            c.projective_simplicial += r.simplicial;
        } else if (r.complete) {
            ++c.complete_nonprojective;
            c.complete_nonprojective_simplicial += r.simplicial;
        } else {
            ++c.noncomplete;
            c.noncomplete_simplicial += r.simplicial;
        }
    }
    return c;
}

CensusReport run_census(const std::vector<IntVector>& rays, const CensusOptions& opt) {
    CensusReport rep;
    rep.rays = validate_rays(rays);
    rep.weights = gale_dual(rep.rays);
    rep.samples = opt.samples;
    rep.seed = opt.seed;
    const PolytopeCatalog cat = build_catalog(rep.weights, opt.jobs);
    rep.catalog_size = cat.size();
    const ClosureOperator op(cat);
    const std::vector<Collection> closed = enumerate_closed(op, opt.jobs, &rep.enumeration);
    const std::vector<Collection> maximal = maximal_collections(op, closed, opt.jobs);

    rep.rows.resize(maximal.size());
    parallel_for(maximal.size(), opt.jobs, [&](std::size_t k) {
        ClassificationRecord& row = rep.rows[k];
        row.collection = maximal[k];
        row.descriptor = open_set_descriptor(cat, maximal[k]);
        FanResult fr = fan_from_collection(rep.rays, cat, maximal[k]);
        if (auto* f = std::get_if<Fan>(&fr)) {
            row.nondegenerate = true;
            row.simplicial = is_simplicial(*f);
            row.complete = std::holds_alternative<Complete>(is_complete_exact(*f));
            row.projective = std::holds_alternative<SupportFunctionCertificate>(
                strictly_convex_support_function(*f));
            row.coverage = coverage_fraction(*f, opt.samples, opt.seed);
            row.fan = std::move(*f);
        }
    });
    std::sort(rep.rows.begin(), rep.rows.end(),
              [](const ClassificationRecord& a, const ClassificationRecord& b) {
                  return a.descriptor < b.descriptor;
              });

    // Chamber scan, deepened until every LP-projective row is hit.
    std::map<Collection, std::size_t> row_of;
    for (std::size_t k = 0; k < rep.rows.size(); ++k)
        row_of[rep.rows[k].collection] = k;
    for (int depth = opt.git_depth;; ++depth) {
        const SecondaryScan scan = git_scan(rep.weights, cat, depth, opt.jobs);
        rep.git_depth = depth;
        rep.git_characters = scan.samples.size();
        for (auto& row : rep.rows)
            row.git = false;
        for (const auto& c : scan.collections) {
            auto it = row_of.find(c);
            if (it != row_of.end()) {
                rep.rows[it->second].git = true;
            } else if (c.any() &&
                       std::holds_alternative<Fan>(fan_from_collection(rep.rays, cat, c))) {
                throw OracleDisagreement("chamber scan produced a nondegenerate collection " +
                                         open_set_descriptor(cat, c).to_string() +
                                         " that is not maximal");
            }
        }
        bool missing = false;
        for (const auto& row : rep.rows)
            if (row.nondegenerate && row.projective && !row.git)
                missing = true;
        if (!missing || depth >= opt.git_max_depth)
            break;
    }
    for (const auto& row : rep.rows)
        if (row.nondegenerate && row.projective != row.git)
            throw OracleDisagreement("projectivity oracles disagree on " +
                                     row.descriptor.to_string() + ": LP " +
                                     (row.projective ? "projective" : "not projective") +
                                     ", chamber scan " + (row.git ? "hit" : "missed"));
    rep.counts = count_rows(rep.rows);
    return rep;
}

std::string counts_line(const CensusCounts& c) {
    std::ostringstream out;
    out << "rows " << c.rows << ", nondegenerate " << c.nondegenerate << ", projective "
        << c.projective << " (simplicial " << c.projective_simplicial
        << "), complete non-projective " << c.complete_nonprojective << " (simplicial "
        << c.complete_nonprojective_simplicial << "), non-complete " << c.noncomplete
        << " (simplicial " << c.noncomplete_simplicial << "), degenerate " << c.degenerate
        << " (GIT " << c.degenerate_git << ")";
    return out.str();
}

namespace {

std::string fixed6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

const char* yes_no(bool b) { return b ? "Yes" : "No"; }

} // namespace

std::string report_json(const CensusReport& r) {
    nlohmann::ordered_json j;
    auto& h = j["header"];
    h["n"] = r.rays.n;
    h["s"] = r.rays.s;
    h["rays"] = r.rays.rays;
    h["weights"] = r.weights.rows;
    h["samples"] = r.samples;
    h["seed"] = r.seed;
    h["catalog_size"] = r.catalog_size;
    h["closed_collections"] = r.enumeration.closed;
    h["incompatible_pairs"] = r.enumeration.incompatible_pairs;
    h["git_depth"] = r.git_depth;
    h["git_characters"] = r.git_characters;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json o;
        o["descriptor"] = row.descriptor.to_string();
        o["nondegenerate"] = row.nondegenerate;
        o["git"] = row.git;
        if (row.nondegenerate) {
            o["projective"] = row.projective;
            o["simplicial"] = row.simplicial;
            o["complete"] = row.complete;
            o["coverage"] = fixed6(row.coverage.fraction);
            o["coverage_hits"] = row.coverage.hits;
            o["fan"] = {{"dim", row.fan->dim},
                        {"rays", row.fan->rays},
                        {"max_cones", row.fan->max_cones}};
        }
        j["rows"].push_back(std::move(o));
    }
    const CensusCounts& c = r.counts;
    j["counts"] = {{"rows", c.rows},
                   {"nondegenerate", c.nondegenerate},
                   {"projective", c.projective},
                   {"projective_simplicial", c.projective_simplicial},
                   {"complete_nonprojective", c.complete_nonprojective},
                   {"complete_nonprojective_simplicial", c.complete_nonprojective_simplicial},
                   {"noncomplete", c.noncomplete},
                   {"noncomplete_simplicial", c.noncomplete_simplicial},
                   {"degenerate", c.degenerate},
                   {"degenerate_git", c.degenerate_git}};
    return j.dump(2) + "\n";
}

std::string report_markdown(const CensusReport& r) {
    std::ostringstream out;
    out << "# Census: " << r.rays.s << " rays in dimension " << r.rays.n << "\n\n";
    out << "samples: " << r.samples << ", seed: " << r.seed << ", catalog: " << r.catalog_size
        << ", closed collections: " << r.enumeration.closed << ", chamber scan depth "
        << r.git_depth << " (" << r.git_characters << " characters)\n\n";
    out << "| Open set | ND | GIT | S | C | %C |\n|---|---|---|---|---|---|\n";
    for (const auto& row : r.rows) {
        out << "| " << row.descriptor.to_string() << " | " << yes_no(row.nondegenerate) << " | "
            << yes_no(row.git) << " | ";
        if (row.nondegenerate)
            out << yes_no(row.simplicial) << " | " << yes_no(row.complete) << " | "
                << fixed6(100.0 * row.coverage.fraction) << " |\n";
        else
            out << "--- | --- | --- |\n";
    }
    out << "\n" << counts_line(r.counts) << "\n";
    return out.str();
}

std::string report_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "# samples=" << r.samples << " seed=" << r.seed << "\n";
    out << "descriptor,nondegenerate,git,projective,simplicial,complete,coverage\n";
    for (const auto& row : r.rows) {
        out << '"' << row.descriptor.to_string() << "\"," << row.nondegenerate << ',' << row.git;
        if (row.nondegenerate)
            out << ',' << row.projective << ',' << row.simplicial << ',' << row.complete << ','
                << fixed6(row.coverage.fraction) << "\n";
        else
            out << ",,,,\n";
    }
    out << "# " << counts_line(r.counts) << "\n";
    return out.str();
}

namespace {

struct Checker {
    std::ostream& log;
    bool ok = true;
    void operator()(bool cond, const std::string& what) {
        log << (cond ? "  ok    " : "  FAIL  ") << what << "\n";
        ok = ok && cond;
    }
};

std::string num(std::size_t x) { return std::to_string(x); }

bool verify_dim3(std::ostream& log, const CensusOptions& opt) {
    Checker check{log};
    const CensusReport rep = run_census(fixtures::dim3_rays(), opt);
    const auto& ref = fixtures::dim3_census();
    std::map<OpenSetDescriptor, const ClassificationRecord*> mine;
    for (const auto& row : rep.rows)
        mine[row.descriptor] = &row;
    std::set<OpenSetDescriptor> seen;
    std::size_t diffs = 0;
    for (const auto& ref_row : ref) {
        const OpenSetDescriptor d = parse_descriptor(ref_row.descriptor, 6);
        seen.insert(d);
        auto it = mine.find(d);
        if (it == mine.end()) {
            log << "  missing row: " << ref_row.descriptor << "\n";
            ++diffs;
            continue;
        }
        const auto& row = *it->second;
        if (row.nondegenerate != ref_row.nondegenerate || row.git != ref_row.git ||
            (row.nondegenerate && row.simplicial != ref_row.simplicial)) {
            log << "  flag mismatch: " << ref_row.descriptor << "\n";
            ++diffs;
        }
    }
    for (const auto& [d, row] : mine)
        if (!seen.count(d)) {
            log << "  extra row: " << d.to_string() << "\n";
            ++diffs;
        }
    check(diffs == 0, "descriptor table matches the reference (" + num(diffs) + " differences)");
    const CensusCounts& c = rep.counts;
    check(c.rows == 100 && c.nondegenerate == 87, "100 rows, 87 nondegenerate");
    check(c.projective == 73 && c.projective_simplicial == 54, "73 projective, 54 simplicial");
    check(c.complete_nonprojective == 14 && c.complete_nonprojective_simplicial == 2,
          "14 complete non-projective, 2 simplicial");
    check(c.noncomplete == 0, "every nondegenerate fan is complete");
    log << "  " << counts_line(c) << "\n";
    return check.ok;
}

bool verify_dim4(std::ostream& log, const CensusOptions& opt) {
    Checker check{log};
    const CensusReport rep = run_census(fixtures::dim4_rays(), opt);
    const CensusCounts& c = rep.counts;
    check(c.nondegenerate == 112, "112 nondegenerate");
    check(c.projective == 85 && c.projective_simplicial == 36, "85 projective, 36 simplicial");
    check(c.complete_nonprojective == 0, "no complete non-projective fan");
    check(c.noncomplete == 27 && c.noncomplete_simplicial == 8, "27 non-complete, 8 simplicial");
    bool cov = true;
    for (const auto& row : rep.rows)
        if (row.nondegenerate && !row.complete && row.coverage.fraction >= 1.0)
            cov = false;
    check(cov, "every non-complete fan has coverage below 1");
    log << "  " << counts_line(c) << "\n";
    return check.ok;
}

bool verify_sec5(std::ostream& log) {
    Checker check{log};
    const auto rays = fixtures::sec5_rays();
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& c : fixtures::sec5_cones()) {
        std::vector<std::size_t> idx;
        for (int i : c)
            idx.push_back(static_cast<std::size_t>(i - 1));
        cones.push_back(idx);
    }
    const Fan f = make_fan(4, rays, cones);
    check(!fan_axiom_failure(f), "fan axioms hold for the 8 cones");
    const RationalVector w{0, 0, 0, 1};
    const auto res = is_complete_exact(f);
    check(std::holds_alternative<Incomplete>(res), "fan is not complete");
    if (auto* inc = std::get_if<Incomplete>(&res))
        check(inc->witness == w, "witness " + to_string(inc->witness));
    check(!fan_contains(f, w), "(0, 0, 0, 1) lies in no cone");
    const RaySystem rs = validate_rays(rays);
    check(std::holds_alternative<Maximal>(is_maximal_fan(f, rs)), "fan is maximal");
    const Coverage cov = coverage_fraction(f, 20000, 0);
    check(cov.fraction < 1.0, "coverage below 1 (" + std::to_string(cov.fraction) + ")");
    return check.ok;
}

bool verify_nested_pair(std::ostream& log, const CensusOptions& opt) {
    Checker check{log};
    const RaySystem rs = validate_rays(fixtures::dim4_rays());
    const WeightSystem ws = gale_dual(rs);
    const PolytopeCatalog cat = build_catalog(ws);
    const ClosureOperator op(cat);
    const auto d_small = parse_descriptor("X \\ (Z(c) ∪ Z(b, d, f) ∪ Z(a, e, g))", 7);
    const auto d_large = parse_descriptor("X \\ (Z(b, d, f) ∪ Z(c, d) ∪ Z(c, e) ∪ Z(a, e, g))", 7);
    const Collection small = collection_from_descriptor(cat, d_small);
    const Collection large = collection_from_descriptor(cat, d_large);
    check(op.is_closed(small) && op.is_closed(large), "both collections are closed");
    const auto mx = maximal_collections(op, enumerate_closed(op, opt.jobs));
    const bool both_max = std::find(mx.begin(), mx.end(), small) != mx.end() &&
                          std::find(mx.begin(), mx.end(), large) != mx.end();
    check(both_max, "both collections are maximal");
    check(small.is_subset_of(large) && small != large, "the first is a proper subcollection");
    check(!is_saturated_in(cat, small, large), "not saturated in the larger one");
    const FanResult a = fan_from_collection(rs, cat, small);
    const FanResult b = fan_from_collection(rs, cat, large);
    const bool both = std::holds_alternative<Fan>(a) && std::holds_alternative<Fan>(b);
    check(both, "both are nondegenerate");
    if (!both)
        return false;
    const Fan& fa = std::get<Fan>(a);
    const Fan& fb = std::get<Fan>(b);
    check(same_fan(fa, fb), "identical fans");
    check(fa.cone_count() == 9 && is_simplicial(fa), "9 simplicial maximal cones");
    const bool unused =
        std::find(fa.rays.begin(), fa.rays.end(), rs.rays[2]) == fa.rays.end();
    check(unused, "ray c is not a ray of the fan");
    const LiftedDescriptors lifts = lift_fans(fa, rs);
    check(lifts.tilde == d_small, "first lift: " + lifts.tilde.to_string());
    check(lifts.hat == d_large, "second lift: " + lifts.hat.to_string());
    return check.ok;
}

bool verify_products(std::ostream& log, const CensusOptions& opt) {
    Checker check{log};
    CensusOptions o = opt;
    auto nd_fans = [&](const std::vector<IntVector>& rays) {
        const CensusReport rep = run_census(rays, o);
        std::set<std::vector<std::vector<IntVector>>> keys;
        std::vector<Fan> fans;
        for (const auto& row : rep.rows)
            if (row.fan && keys.insert(fan_key(*row.fan)).second)
                fans.push_back(*row.fan);
        return fans;
    };
    const auto f2 = nd_fans(fixtures::p2_rays());
    const auto f1 = nd_fans(fixtures::p1_rays());
    const auto f21 = nd_fans(fixtures::p2_times_p1_rays());
    std::set<std::vector<std::vector<IntVector>>> prod, direct;
    for (const auto& a : f2)
        for (const auto& b : f1)
            prod.insert(fan_key(product_fan(a, b)));
    for (const auto& f : f21)
        direct.insert(fan_key(f));
    check(prod == direct, "maximal fans of the product system are the products (" +
                              num(direct.size()) + " fans)");

    // Semistable supports of the block weight system factor.
    const WeightSystem w2 = gale_dual(validate_rays(fixtures::p2_rays()));
    const WeightSystem w1 = gale_dual(validate_rays(fixtures::p1_rays()));
    const WeightSystem w = product_weights(w2, w1);
    check(gale_roundtrip_check(validate_rays(fixtures::p2_times_p1_rays()), w),
          "block weights are a Gale dual of the product rays");
    bool factor = true;
    const std::vector<RationalVector> chis1{{1}, {2}, {-1}, {0}};
    for (const auto& a : chis1)
        for (const auto& b : chis1) {
            RationalVector chi = a;
            chi.insert(chi.end(), b.begin(), b.end());
            for (Support j = 0; j < (Support{1} << 5); ++j) {
                auto in_cone = [](const WeightSystem& ws, Support sup, const RationalVector& x) {
                    RationalMatrix g{RationalVector(ws.r, Rational(0))};
                    for (std::size_t i = 0; i < ws.s; ++i)
                        if (sup >> i & 1U)
                            g.push_back(ws.beta(i));
                    return cone_contains(cone_from_generators(g, ws.r), x);
                };
                const bool whole = in_cone(w, j, chi);
                const bool parts = in_cone(w2, j & 7U, a) && in_cone(w1, j >> 3, b);
                factor = factor && whole == parts;
            }
        }
    check(factor, "semistable supports factor over the two weight blocks");
    return check.ok;
}

} // namespace

bool verify_fixture(const std::string& name, std::ostream& log, const CensusOptions& opt) {
    log << "fixture " << name << "\n";
    bool ok = false;
    if (name == "dim3")
        ok = verify_dim3(log, opt);
    else if (name == "dim4")
        ok = verify_dim4(log, opt);
    else if (name == "sec5")
        ok = verify_sec5(log);
    else if (name == "reichstein")
        ok = verify_nested_pair(log, opt);
    else if (name == "products")
        ok = verify_products(log, opt);
    else
        throw std::invalid_argument("unknown fixture: " + name);
    log << (ok ? "PASS " : "FAIL ") << name << "\n";
    return ok;
}

} // namespace toricfan
