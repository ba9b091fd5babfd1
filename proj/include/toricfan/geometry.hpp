#pragma once

#include "toricfan/rational.hpp"

#include <optional>
#include <stdexcept>
#include <variant>

namespace toricfan {

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFullDimensional : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class NotStrictlyConvex : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class OriginNotInterior : public GeometryError {
public:
    using GeometryError::GeometryError;
};

enum class Sense { GreaterEq, LessEq, Equal };

// {x : <normal, x> (sense) offset}
struct HalfSpace {
    RationalVector normal;
    Rational offset;
    Sense sense = Sense::GreaterEq;
};

// Pointed part and lineality of {x : eq x = 0, ineq x >= 0}.
struct DoubleDescription {
    RationalMatrix rays;
    RationalMatrix lineality;
};

// Incremental double description (Motzkin) with the algebraic adjacency test.
DoubleDescription double_description(const RationalMatrix& inequalities,
                                     const RationalMatrix& equalities, std::size_t dim);

struct ConeRecord {
    std::size_t ambient = 0;
    RationalMatrix generators;
    // Primitive, lexicographically sorted. Unique for strictly convex cones.
    std::vector<IntVector> extremal_rays;
    // Inward normals: <f, x> >= 0 on the cone; primitive, sorted.
    std::vector<IntVector> facet_normals;
    // <e, x> = 0 on the cone (basis of span(cone)^perp, primitive).
    std::vector<IntVector> equations;
    std::vector<IntVector> lineality_basis;
    std::size_t dim = 0;

    bool strictly_convex() const { return lineality_basis.empty(); }
    bool full_dimensional() const { return dim == ambient; }
    // Generators of the point set: rays plus +-lineality.
    RationalMatrix point_generators() const;
};

// Cone from an H-description. Generators become the extremal rays (and +-lineality).
ConeRecord cone_from_inequalities(const RationalMatrix& inequalities,
                                  const RationalMatrix& equalities, std::size_t ambient);

ConeRecord cone_from_generators(const RationalMatrix& gens, std::size_t ambient);
ConeRecord cone_from_generators(const std::vector<IntVector>& gens, std::size_t ambient);

enum class Membership { Closure, RelativeInterior };

bool cone_contains(const ConeRecord& c, const RationalVector& x,
                   Membership mode = Membership::Closure);

ConeRecord intersect_cones(const ConeRecord& a, const ConeRecord& b);

// The improper face (f == c) counts as a face.
bool is_face_of(const ConeRecord& f, const ConeRecord& c);

bool same_cone(const ConeRecord& a, const ConeRecord& b);

// The smallest face of c containing the given points.
ConeRecord minimal_face(const ConeRecord& c, const RationalMatrix& points);

struct PolytopeRecord {
    std::size_t ambient = 0;
    RationalMatrix vertices; // sorted lexicographically
    // Homogenized cone over {(v, 1)}; facets are (a, b) meaning <a, x> + b >= 0.
    ConeRecord hom;
    long dim = -1; // -1 for the empty polytope
    bool empty() const { return vertices.empty(); }
};

PolytopeRecord hull_vertices(const RationalMatrix& points);
PolytopeRecord polytope_from_homogeneous(const ConeRecord& hom);
PolytopeRecord intersect_polytopes(const PolytopeRecord& a, const PolytopeRecord& b);
bool polytope_contains(const PolytopeRecord& p, const RationalVector& x);
bool is_face_of(const PolytopeRecord& f, const PolytopeRecord& p);

struct FarkasCertificate {
    // One multiplier per input constraint, for the constraint written as
    // <a, x> - b (>= | =) 0 (LessEq rows are negated first). Nonnegative on
    // inequality rows. sum y a = 0, sum y b >= 0, and either sum y b > 0 or
    // some strict row carries a positive multiplier.
    RationalVector multipliers;
};

struct Feasible {
    RationalVector witness;
};

struct Infeasible {
    FarkasCertificate certificate;
};

using LpResult = std::variant<Feasible, Infeasible>;

// Exact feasibility of a system of (possibly strict) affine constraints.
// strict_mask[i] marks constraint i as strict (ignored for Equal rows).
LpResult lp_feasible(const std::vector<HalfSpace>& constraints,
                     const std::vector<bool>& strict_mask, std::size_t dim);

bool satisfies(const std::vector<HalfSpace>& constraints, const std::vector<bool>& strict_mask,
               const RationalVector& x);
bool verifies(const std::vector<HalfSpace>& constraints, const std::vector<bool>& strict_mask,
              const FarkasCertificate& cert);

// max over the vertices of <x, v>
Rational support_function(const PolytopeRecord& p, const RationalVector& v);

// True iff 0 is an interior point of conv(points). Throws NotFullDimensional.
bool origin_interior(const RationalMatrix& points);

// Cone(points) == R^n, decided by LP (a strictly positive relation plus full rank).
bool positively_spans(const RationalMatrix& points, std::size_t dim);

// Rational v with <g, v> > 0 for every generator. Throws NotStrictlyConvex.
RationalVector separating_functional(const ConeRecord& c);

struct RationalSlice {
    RationalVector normal; // v
    PolytopeRecord slice;  // c intersected with <x, v> = 1, integral vertices
};

// With a hint, v is a positive rescaling of the hint.
RationalSlice rational_slice(const ConeRecord& c,
                             const std::optional<RationalVector>& hint = std::nullopt);

// {y : <x, y> <= 1 for x in p}. Throws OriginNotInterior.
PolytopeRecord dual_polytope(const PolytopeRecord& p);

} // namespace toricfan
