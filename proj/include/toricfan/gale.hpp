#pragma once

#include "toricfan/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace toricfan {

class RaySystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NotSpanning : public RaySystemError {
public:
    using RaySystemError::RaySystemError;
};
class DuplicateRay : public RaySystemError {
public:
    using RaySystemError::RaySystemError;
};

struct RaySystem {
    std::size_t n = 0;
    std::size_t s = 0;
    std::vector<IntVector> rays; // s primitive vectors of length n (columns of A)
    std::vector<std::string> warnings;

    std::string label(std::size_t i) const;
};

struct WeightSystem {
    std::size_t r = 0;
    std::size_t s = 0;
    IntMatrix rows; // r x s, kernel basis of A

    // beta_i as an exact vector in Q^r.
    RationalVector beta(std::size_t i) const;
};

// Letters a, b, c, ... for coordinates; past z falls back to x<number>.
std::string coordinate_label(std::size_t i);

// Normalizes non-primitive rays (recording a warning), rejects duplicates and
// parallel pairs, and checks Cone(rays) = R^n.
RaySystem validate_rays(const std::vector<IntVector>& rays);

// Saturated integer kernel basis of A via column Hermite reduction.
WeightSystem gale_dual(const RaySystem& rs);

// A W^T = 0, rank A + rank W = s, and W spans the saturated kernel lattice.
bool gale_roundtrip_check(const RaySystem& rs, const WeightSystem& ws);

// Index of the lattice spanned by the rows of w inside its rational row space
// saturation (1 iff saturated). Zero if the rows are dependent.
mpz_class saturation_index(const IntMatrix& w);

// Rows of m brought into a reduced integer echelon form (same lattice).
IntMatrix hermite_rows(const IntMatrix& m);

} // namespace toricfan
