#pragma once

#include "toricfan/rational.hpp"

#include <optional>

namespace toricfan::linalg {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

std::size_t rank(const RationalMatrix& rows, std::size_t cols);
std::size_t rank(const IntMatrix& rows);

// Basis of {x : rows * x = 0}.
RationalMatrix nullspace(const RationalMatrix& rows, std::size_t cols);

// Basis of the row space (rows of the rref, nonzero ones).
RationalMatrix row_basis(const RationalMatrix& rows, std::size_t cols);

// Some solution of m x = b, if any.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b,
                                    std::size_t cols);

RationalMatrix transpose(const RationalMatrix& m, std::size_t cols);
RationalMatrix to_rational(const IntMatrix& m);
RationalVector mul(const RationalMatrix& m, const RationalVector& x);

// Determinant of a square integer matrix (Bareiss, exact).
mpz_class determinant(const IntMatrix& m);

} // namespace toricfan::linalg
