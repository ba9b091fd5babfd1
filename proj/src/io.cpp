#include "toricfan/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace toricfan {

std::vector<IntVector> parse_rays(std::istream& in) {
    std::vector<std::int64_t> nums;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                const long long v = std::stoll(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                nums.push_back(v);
            } catch (const std::exception&) {
                throw FormatError("rays file line " + std::to_string(lineno) +
                                  ": not an integer: " + tok);
            }
        }
    }
    if (nums.size() < 2)
        throw FormatError("rays file: missing header \"n s\"");
    const auto n = nums[0], s = nums[1];
    if (n <= 0 || s <= 0)
        throw FormatError("rays file: n and s must be positive");
    if (nums.size() != 2 + static_cast<std::size_t>(n * s))
        throw FormatError("rays file: expected " + std::to_string(n * s) + " entries, found " +
                          std::to_string(nums.size() - 2));
    std::vector<IntVector> rays(static_cast<std::size_t>(s));
    for (std::size_t i = 0; i < rays.size(); ++i)
        rays[i].assign(nums.begin() + 2 + static_cast<long>(i * n),
                       nums.begin() + 2 + static_cast<long>((i + 1) * n));
    return rays;
}

std::vector<IntVector> read_rays_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path);
    return parse_rays(in);
}

std::string format_rays(const std::vector<IntVector>& rays) {
    std::ostringstream out;
    out << (rays.empty() ? 0 : rays.front().size()) << " " << rays.size() << "\n";
    for (const auto& r : rays) {
        for (std::size_t i = 0; i < r.size(); ++i)
            out << (i ? " " : "") << r[i];
        out << "\n";
    }
    return out.str();
}

Fan parse_fan_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("fan json: ") + e.what());
    }
    try {
        const auto dim = j.at("dim").get<std::size_t>();
        const auto rays = j.at("rays").get<std::vector<IntVector>>();
        const auto cones = j.at("max_cones").get<std::vector<std::vector<std::size_t>>>();
        for (const auto& r : rays)
            if (r.size() != dim)
                throw FormatError("fan json: ray of the wrong length");
        for (const auto& c : cones)
            for (auto i : c)
                if (i >= rays.size())
                    throw FormatError("fan json: cone index out of range");
        return make_fan(dim, rays, cones);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("fan json: ") + e.what());
    }
}

Fan read_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fan_json(ss.str());
}

std::string fan_to_json(const Fan& f) {
    nlohmann::json j;
    j["dim"] = f.dim;
    j["rays"] = f.rays;
    j["max_cones"] = f.max_cones;
    return j.dump();
}

RationalVector parse_rational_list(const std::string& text) {
    RationalVector out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        try {
            Rational q(tok);
            if (q.get_den() == 0)
                throw std::invalid_argument(tok);
            q.canonicalize();
            out.push_back(q);
        } catch (const std::exception&) {
            throw FormatError("not a rational number: " + tok);
        }
    }
    return out;
}

} // namespace toricfan
