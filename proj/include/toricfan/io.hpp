#pragma once

#include "toricfan/fan.hpp"

#include <iosfwd>
#include <string>

namespace toricfan {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "n s" then s lines of n integers; '#' starts a comment.
std::vector<IntVector> parse_rays(std::istream& in);
std::vector<IntVector> read_rays_file(const std::string& path);
std::string format_rays(const std::vector<IntVector>& rays);

// {"dim": n, "rays": [[..]], "max_cones": [[idx..]]}
Fan parse_fan_json(const std::string& text);
Fan read_fan_file(const std::string& path);
std::string fan_to_json(const Fan& f);

// Parses "x,y,z" with integers or fractions p/q.
RationalVector parse_rational_list(const std::string& text);

} // namespace toricfan
