#pragma once

#include "toricfan/fan.hpp"

namespace toricfan {

class LiftFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class EmptyPolyhedron : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rays of the chamber decomposition of Cone(beta): extremal rays of the weight
// cone and every one-dimensional intersection of lower-dimensional subset cones.
std::vector<IntVector> secondary_rays(const WeightSystem& ws);

// Single rays plus sums c_1 x_1 + .. + c_k x_k, c_i in {1..depth}, over all
// subsets of size 2..r; primitive and deduplicated.
std::vector<IntVector> chamber_samples(const std::vector<IntVector>& rays, std::size_t r,
                                       int depth = 3);

// Per-polytope cones Cone(beta_T(P)), built once for repeated queries.
class SemistableOracle {
public:
    SemistableOracle(const WeightSystem& ws, const PolytopeCatalog& cat);
    // {P : chi in Cone(beta_T(P))}; empty outside the weight cone.
    Collection collection(const RationalVector& chi) const;

private:
    const PolytopeCatalog* cat_;
    std::vector<ConeRecord> cones_;
};

Collection semistable_collection(const WeightSystem& ws, const PolytopeCatalog& cat,
                                 const RationalVector& chi);

struct GitPolyhedron {
    IntVector lift;                 // a with W a = chi
    PolytopeRecord polytope;        // {m : <m, nu_i> >= -a_i}
    std::vector<Support> tight;     // per vertex: indices i with <v, nu_i> = -a_i
    std::vector<Support> irrelevant; // per vertex: complement of tight, as an antichain
};

// Integer a with W a = chi. Throws LiftFailure.
IntVector lift_character(const WeightSystem& ws, const IntVector& chi);

GitPolyhedron git_polyhedron(const RaySystem& rs, const WeightSystem& ws, const IntVector& chi);

// Polytopes of supports containing some irrelevant support of the polyhedron.
Collection collection_from_irrelevant(const PolytopeCatalog& cat,
                                      const std::vector<Support>& irrelevant);

bool is_degenerate_character(const RaySystem& rs, const WeightSystem& ws,
                             const PolytopeCatalog& cat, const RationalVector& chi);

WeightSystem product_weights(const WeightSystem& a, const WeightSystem& b);

struct SecondaryScan {
    std::vector<IntVector> rays;
    std::vector<IntVector> samples;
    std::vector<std::size_t> sample_class; // index into collections per sample
    std::vector<Collection> collections;   // distinct, sorted
};

SecondaryScan git_scan(const WeightSystem& ws, const PolytopeCatalog& cat, int depth = 3,
                       unsigned jobs = 1);

} // namespace toricfan
