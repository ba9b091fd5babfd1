#pragma once

#include "toricfan/enumerator.hpp"

#include <cstdint>
#include <variant>

namespace toricfan {

class FanAxiomViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Fan {
    std::size_t dim = 0;
    std::vector<IntVector> rays;                 // primitive, sorted
    std::vector<std::vector<std::size_t>> max_cones; // sorted indices into rays, sorted
    std::vector<ConeRecord> cones;               // one per maximal cone

    std::size_t cone_count() const { return max_cones.size(); }
};

// Builds a fan from maximal cones given by generators. Rays become the union of
// the extremal rays; the cone list is deduplicated and reduced to the
// inclusion-maximal cones. Throws NotStrictlyConvex.
Fan make_fan(std::size_t dim, const std::vector<std::vector<IntVector>>& cone_generators);

// Same, with cones given as index sets into a ray list.
Fan make_fan(std::size_t dim, const std::vector<IntVector>& rays,
             const std::vector<std::vector<std::size_t>>& cones);

// Canonical value for equality: the sorted list of sorted extremal-ray lists.
std::vector<std::vector<IntVector>> fan_key(const Fan& f);
bool same_fan(const Fan& a, const Fan& b);

// Empty if every pairwise intersection of maximal cones is a face of both.
std::optional<std::string> fan_axiom_failure(const Fan& f);

struct Degenerate {};
using FanResult = std::variant<Fan, Degenerate>;

// Cones Cone(nu_I) over the zero-sets I of present supports.
FanResult fan_from_collection(const RaySystem& rs, const PolytopeCatalog& cat,
                              const Collection& pi);

bool is_simplicial(const Fan& f);

struct Complete {};
struct Incomplete {
    RationalVector witness;
};
using CompletenessResult = std::variant<Complete, Incomplete>;

// Wall pairing: all maximal cones full-dimensional and each facet shared by two.
CompletenessResult is_complete_exact(const Fan& f);

// Reference test: the complements of the maximal cones have empty common
// intersection, decided by LP over all choices of a violated facet per cone.
bool complete_by_complements(const Fan& f);

// True iff x lies in some maximal cone.
bool fan_contains(const Fan& f, const RationalVector& x);

struct Coverage {
    double fraction = 0;
    std::size_t hits = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

// Exact membership of seeded Gaussian directions (each coordinate is a dyadic
// rational, so the test is exact).
Coverage coverage_fraction(const Fan& f, std::size_t samples, std::uint64_t seed);

Fan product_fan(const Fan& a, const Fan& b);

// The fan in R^0 with the single cone {0}.
Fan zero_fan();

struct Maximal {};
struct Extendable {
    std::vector<std::size_t> generators; // indices into rs.rays
    ConeRecord cone;
};
using MaximalityResult = std::variant<Maximal, Extendable>;

// Looks for a strictly convex cone on a subset of rs.rays, not in f, that meets
// every maximal cone of f in a common face. Larger subsets are tried first.
MaximalityResult is_maximal_fan(const Fan& f, const RaySystem& rs);

// Index of the ray system coordinate generating each fan ray; throws if a fan
// ray is not among rs.rays.
std::vector<std::size_t> ray_sources(const Fan& f, const RaySystem& rs);

struct LiftedDescriptors {
    OpenSetDescriptor tilde; // cones over e_i for the rays of sigma
    OpenSetDescriptor hat;   // cones over e_i for every nu_i inside sigma
};
LiftedDescriptors lift_fans(const Fan& f, const RaySystem& rs);

// All maximal fans on subsets of rs.rays, as maximal cliques of the
// compatibility graph on strictly convex subset cones.
std::vector<Fan> maximal_fans_by_cliques(const RaySystem& rs);

} // namespace toricfan
