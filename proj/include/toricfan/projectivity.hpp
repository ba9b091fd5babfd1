#pragma once

#include "toricfan/fan.hpp"

#include <random>

namespace toricfan {

class HypothesisViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class PreconditionViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WallSlack {
    std::size_t cone = 0;     // sigma
    std::size_t neighbor = 0; // sigma'
    std::size_t ray = 0;      // ray of sigma' off sigma (index into fan rays)
    Rational slack;           // <m_sigma, v> - <m_sigma', v>, at least 1
};

// Piecewise-linear function given by one functional per maximal cone. Across
// every wall, m_sigma exceeds m_sigma' on the rays of sigma' off the wall.
struct SupportFunctionCertificate {
    std::vector<RationalVector> functionals;
    std::vector<WallSlack> walls;
};

struct NonProjective {
    std::string reason;
    std::optional<FarkasCertificate> certificate; // absent for incomplete fans
};

using ProjectivityResult = std::variant<SupportFunctionCertificate, NonProjective>;

ProjectivityResult strictly_convex_support_function(const Fan& f);

bool verify_certificate(const Fan& f, const SupportFunctionCertificate& cert);

// Pairs of maximal cones sharing a facet.
std::vector<std::pair<std::size_t, std::size_t>> adjacent_cones(const Fan& f);

struct BigConePolytope {
    PolytopeRecord polytope;
    RationalVector slice_normal;
    std::size_t big_cone = 0;
    bool verified = false;
};

// For a fan with t rays containing a cone on t-1 of them. Throws HypothesisViolated.
BigConePolytope big_cone_polytope(const Fan& f);

// Face fan: cones over the proper faces of a polytope with 0 in its interior.
Fan face_fan(const PolytopeRecord& p);

// Complete fan with dim + 2 rays: LP feasibility. Throws PreconditionViolated.
bool d_plus_2_check(const Fan& f);

// A random complete fan with d + 2 rays: the face fan of randomly scaled,
// positively spanning integer points.
Fan random_complete_fan(std::size_t d, std::mt19937_64& rng);

} // namespace toricfan
