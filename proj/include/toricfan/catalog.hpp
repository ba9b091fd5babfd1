#pragma once

#include "toricfan/bitset.hpp"
#include "toricfan/gale.hpp"
#include "toricfan/geometry.hpp"

#include <cstdint>
#include <vector>

namespace toricfan {

// Subset of {0, .., s-1}; bit i stands for coordinate i.
using Support = std::uint32_t;

struct DistinguishedPolytope {
    Support members = 0;  // T = {i : beta_i in P}
    Support vertices = 0; // indices whose beta_i is a vertex of P
    bool zero_is_vertex = false;
    PolytopeRecord geometry;
};

enum class IntersectionKind { Irrelevant, MustContain, Incompatible };

struct IntersectionClass {
    IntersectionKind kind = IntersectionKind::Irrelevant;
    int required = -1; // catalog index for MustContain
};

struct PolytopeCatalog {
    std::size_t r = 0;
    std::size_t s = 0;
    std::vector<DistinguishedPolytope> polys; // sorted by members
    std::vector<int> index_of_support;        // 2^s entries: J -> index of P(J)
    std::vector<Bitset> contained_in;         // contained_in[p] = {q : P_p subset of P_q}
    std::vector<Bitset> faces;                // faces[p] = {f : P_f a face of P_p}, improper too
    // Pairwise data, row-major N x N.
    std::vector<int> meet;              // index of P cap Q if distinguished, else -1
    std::vector<std::uint8_t> in_face;  // bit 0: P cap Q in a proper face of P; bit 1: of Q

    std::size_t size() const { return polys.size(); }
    int index_of(Support j) const { return index_of_support[j]; }
    int full_index() const { return index_of_support[(Support{1} << s) - 1]; }
    int origin_index() const { return index_of_support[0]; }
};

DistinguishedPolytope canonical_polytope(const WeightSystem& ws, Support j);

PolytopeCatalog build_catalog(const WeightSystem& ws, unsigned jobs = 1);

IntersectionClass intersection_class(const PolytopeCatalog& cat, std::size_t p, std::size_t q);

std::string support_letters(Support j, const char* sep = ", ");

} // namespace toricfan
