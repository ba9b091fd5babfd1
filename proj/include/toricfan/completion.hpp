#pragma once

#include "toricfan/fan.hpp"

#include <array>
#include <functional>

namespace toricfan {

class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotConvexNode : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class UnboundedRegion : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Point2 {
    Rational x, y;
    friend bool operator==(const Point2&, const Point2&) = default;
};

// Cyclic node list; segments join consecutive nodes.
struct PolyChain {
    std::vector<Point2> nodes;
};

struct Triangulation {
    std::vector<std::array<std::size_t, 3>> triangles; // node indices, counterclockwise
};

// Sign of the turn a -> b -> c.
int orient(const Point2& a, const Point2& b, const Point2& c);

// Twice the signed area (shoelace).
Rational signed_area2(const std::vector<Point2>& nodes);

// The open segment (p, q) shares no point with the closed segment [a, b].
bool open_segment_avoids(const Point2& p, const Point2& q, const Point2& a, const Point2& b);

// Strict interior test for a simple polygon (boundary points are outside).
bool inside_polygon(const std::vector<Point2>& nodes, const Point2& x);

// The open segment from node i to node j lies in the interior of the polygon.
bool is_internal_diagonal(const PolyChain& c, std::size_t i, std::size_t j);

// A node w with the open segment (v, w) inside the polygon; v must be convex.
// Among visible nodes the closest is returned, then the lowest index. If no
// diagonal leaves v (the ear at v is then free) the next node is returned.
std::size_t closest_visible_node(const PolyChain& c, std::size_t v);

// Ear clipping at convex nodes, splitting along closest_visible_node when an ear
// is blocked. Triangles use input nodes only; count = nodes - 2.
Triangulation triangulate_polygon(const PolyChain& c);

// A bounded open region given by its boundary segments (node index pairs) and
// a membership predicate. Segments with the region on both sides are used as
// constraint edges from both sides (the doubled segments); components are
// joined by visible diagonals, shortest first, until no diagonal fits.
struct Region {
    std::vector<Point2> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> segments;
    std::function<bool(const Point2&)> inside;
};

// Region bounded by an outer polygon, polygonal holes and interior slits.
Region polygon_region(const std::vector<Point2>& outer, const std::vector<std::vector<Point2>>& holes,
                      const std::vector<std::pair<Point2, Point2>>& slits);

Triangulation triangulate_region(const Region& region);

// Rational area of a triangulation of the given nodes (always nonnegative).
Rational triangulation_area(const std::vector<Point2>& nodes, const Triangulation& t);

// Interiors of the triangles are pairwise disjoint.
bool triangles_disjoint(const std::vector<Point2>& nodes, const Triangulation& t);

// Completes a fan in R^3 whose uncovered region lies in the open half-space
// <x, v> > 0, adding cones over a triangulation of the slice at <x, v> = 1.
// Throws HypothesisViolated (from projectivity.hpp) or std::invalid_argument.
Fan complete_fan_3d(const Fan& f, const RationalVector& v);

} // namespace toricfan
