#include "toricfan/census.hpp"
#include "toricfan/completion.hpp"
#include "toricfan/git.hpp"
#include "toricfan/io.hpp"
#include "toricfan/parallel.hpp"
#include "toricfan/projectivity.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace toricfan;

namespace {

int cmd_gale(const std::string& path) {
    const RaySystem rs = validate_rays(read_rays_file(path));
    for (const auto& w : rs.warnings)
        std::cerr << "warning: " << w << "\n";
    const WeightSystem ws = gale_dual(rs);
    std::cout << "rays (" << rs.n << " x " << rs.s << "):\n";
    for (std::size_t i = 0; i < rs.s; ++i)
        std::cout << "  " << coordinate_label(i) << " " << to_string(rs.rays[i]) << "\n";
    std::cout << "weights (" << ws.r << " x " << ws.s << "):\n";
    for (const auto& row : ws.rows)
        std::cout << "  " << to_string(row) << "\n";
    const bool ok = gale_roundtrip_check(rs, ws);
    std::cout << "roundtrip " << (ok ? "ok" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

int cmd_census(const std::string& path, const CensusOptions& opt, const std::string& out_dir,
               const std::string& format) {
    const CensusReport rep = run_census(read_rays_file(path), opt);
    std::string text, ext;
    if (format == "json") {
        text = report_json(rep);
        ext = "json";
    } else if (format == "md") {
        text = report_markdown(rep);
        ext = "md";
    } else {
        text = report_csv(rep);
        ext = "csv";
    }
    if (out_dir.empty()) {
        std::cout << text;
    } else {
        std::filesystem::create_directories(out_dir);
        const auto file = std::filesystem::path(out_dir) / ("census." + ext);
        std::ofstream(file) << text;
        std::cout << "wrote " << file.string() << "\n" << counts_line(rep.counts) << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& path, std::size_t samples, std::uint64_t seed) {
    const Fan f = read_fan_file(path);
    std::cout << "dim " << f.dim << ", rays " << f.rays.size() << ", maximal cones "
              << f.cone_count() << "\n";
    if (auto bad = fan_axiom_failure(f)) {
        std::cout << "not a fan: " << *bad << "\n";
        return 1;
    }
    std::cout << "simplicial: " << (is_simplicial(f) ? "yes" : "no") << "\n";
    const auto comp = is_complete_exact(f);
    if (auto* inc = std::get_if<Incomplete>(&comp))
        std::cout << "complete: no, uncovered " << to_string(inc->witness) << "\n";
    else
        std::cout << "complete: yes\n";
    const auto proj = strictly_convex_support_function(f);
    if (auto* cert = std::get_if<SupportFunctionCertificate>(&proj)) {
        const bool ok = verify_certificate(f, *cert);
        std::cout << "projective: yes (support function over " << cert->walls.size()
                  << " wall conditions, " << (ok ? "verified" : "VERIFICATION FAILED") << ")\n";
        if (!ok)
            return 1;
    } else {
        std::cout << "projective: no (" << std::get<NonProjective>(proj).reason << ")\n";
    }
    const Coverage cov = coverage_fraction(f, samples, seed);
    std::cout << "coverage: " << cov.hits << "/" << cov.samples << " (seed " << cov.seed << ")\n";
    return 0;
}

int cmd_complete3d(const std::string& path, const std::string& v) {
    const Fan f = read_fan_file(path);
    const Fan g = complete_fan_3d(f, parse_rational_list(v));
    std::cout << fan_to_json(g) << "\n";
    const bool ok = std::holds_alternative<Complete>(is_complete_exact(g)) && g.rays == f.rays;
    std::cerr << (ok ? "complete, no new rays" : "completion check FAILED") << "\n";
    return ok ? 0 : 1;
}

int cmd_git_scan(const std::string& path, int depth, unsigned jobs) {
    const RaySystem rs = validate_rays(read_rays_file(path));
    const WeightSystem ws = gale_dual(rs);
    const PolytopeCatalog cat = build_catalog(ws, jobs);
    const SecondaryScan scan = git_scan(ws, cat, depth, jobs);
    std::cout << "secondary rays: " << scan.rays.size() << "\n";
    for (const auto& r : scan.rays)
        std::cout << "  " << to_string(r) << "\n";
    std::cout << "characters: " << scan.samples.size() << ", distinct collections: "
              << scan.collections.size() << "\n";
    std::vector<std::size_t> first(scan.collections.size(), scan.samples.size());
    for (std::size_t k = scan.samples.size(); k-- > 0;)
        first[scan.sample_class[k]] = k;
    for (std::size_t c = 0; c < scan.collections.size(); ++c) {
        const Collection& col = scan.collections[c];
        if (col.none()) {
            std::cout << "  (outside the weight cone)\n";
            continue;
        }
        const bool nd = std::holds_alternative<Fan>(fan_from_collection(rs, cat, col));
        std::cout << "  " << (nd ? "ND " : "D  ") << open_set_descriptor(cat, col).to_string()
                  << "  chi " << to_string(scan.samples[first[c]]) << "\n";
    }
    return 0;
}

int cmd_coverage(const std::string& path, std::size_t samples, std::uint64_t seed) {
    const Fan f = read_fan_file(path);
    const Coverage cov = coverage_fraction(f, samples, seed);
    std::printf("%.6f (%zu/%zu, seed %llu)\n", cov.fraction, cov.hits, cov.samples,
                static_cast<unsigned long long>(cov.seed));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric quotients: maximal open sets with good quotients and their fans"};
    app.require_subcommand(1);

    std::string path, out_dir, format = "json", v, fixture;
    CensusOptions opt;
    opt.jobs = default_jobs();
    int depth = 3;

    auto* gale = app.add_subcommand("gale", "Gale dual of a ray system");
    gale->add_option("rays", path, "rays file")->required()->check(CLI::ExistingFile);

    auto* census = app.add_subcommand("census", "Classify all maximal open sets");
    census->add_option("rays", path, "rays file")->required()->check(CLI::ExistingFile);
    census->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    census->add_option("--samples", opt.samples, "coverage samples per fan");
    census->add_option("--seed", opt.seed, "coverage seed");
    census->add_option("--out", out_dir, "output directory");
    census->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "md", "csv"}));

    auto* classify = app.add_subcommand("classify-fan", "Fan axioms, completeness, projectivity");
    classify->add_option("fan", path, "fan JSON")->required()->check(CLI::ExistingFile);
    classify->add_option("--samples", opt.samples, "coverage samples");
    classify->add_option("--seed", opt.seed, "coverage seed");

    auto* complete = app.add_subcommand("complete3d", "Complete a 3-dimensional fan");
    complete->add_option("fan", path, "fan JSON")->required()->check(CLI::ExistingFile);
    complete->add_option("--v", v, "direction x,y,z")->required();

    auto* scan = app.add_subcommand("git-scan", "Collections of semistable points per chamber");
    scan->add_option("rays", path, "rays file")->required()->check(CLI::ExistingFile);
    scan->add_option("--depth", depth, "sample depth")->check(CLI::PositiveNumber);
    scan->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run a bundled fixture");
    verify->add_option("--fixture", fixture, "fixture name")
        ->required()
        ->check(CLI::IsMember({"dim3", "dim4", "sec5", "reichstein", "products"}));
    verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--samples", opt.samples, "coverage samples");

    auto* coverage = app.add_subcommand("coverage", "Monte Carlo coverage of a fan");
    coverage->add_option("fan", path, "fan JSON")->required()->check(CLI::ExistingFile);
    coverage->add_option("--samples", opt.samples, "samples");
    coverage->add_option("--seed", opt.seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*gale)
            return cmd_gale(path);
        if (*census)
            return cmd_census(path, opt, out_dir, format);
        if (*classify)
            return cmd_classify(path, opt.samples, opt.seed);
        if (*complete)
            return cmd_complete3d(path, v);
        if (*scan)
            return cmd_git_scan(path, depth, opt.jobs);
        if (*verify)
            return verify_fixture(fixture, std::cout, opt) ? 0 : 1;
        if (*coverage)
            return cmd_coverage(path, opt.samples, opt.seed);
    } catch (const OracleDisagreement& e) {
        std::cerr << "oracle disagreement: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
