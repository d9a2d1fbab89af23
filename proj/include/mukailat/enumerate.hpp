#pragma once

// Exact Fincke-Pohst style enumeration of integer vectors inside an
// ellipsoid { x : x Q x^T <= bound } for a positive definite rational
// quadratic form Q. All bounds are handled with exact rational arithmetic;
// integer square roots only ever produce candidate endpoints that are then
// verified exactly.

#include <vector>

#include "mukailat/numeric.hpp"

namespace mukailat {

using RatMat = std::vector<RatVec>;

/// R^T D R decomposition of a symmetric positive definite rational form:
/// r is unit upper triangular, d positive. Returns false if the form is
/// not positive definite.
bool ldl_decompose(const RatMat& q, RatMat& r, RatVec& d);

bool is_positive_definite(const RatMat& q);

/// All integer vectors x (including 0 and both signs) with x Q x^T <= bound,
/// sorted lexicographically. Throws std::domain_error if q is not positive
/// definite.
std::vector<IntVec> enumerate_quadratic_leq(const RatMat& q, const Rat& bound);

}  // namespace mukailat
