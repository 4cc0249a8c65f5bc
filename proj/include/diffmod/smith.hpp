#pragma once

#include <map>
#include <vector>

#include "diffmod/matrix.hpp"

namespace diffmod {

struct SmithForm {
    PolyMatrix U; // rows(M) x rows(M), unimodular (constant nonzero det)
    PolyMatrix D; // diagonal, monic invariant factors d_i | d_{i+1}
    PolyMatrix V; // cols(M) x cols(M), unimodular
};

// U * M * V = D over Q[z]. Total; works for any shape including zero rows.
// Pivot choice: minimal-degree nonzero entry, ties row-major.
SmithForm smith_normal_form(const PolyMatrix& m);

// Invariant factors only (same algorithm, no transform bookkeeping).
std::vector<Poly> smith_invariant_factors(const PolyMatrix& m);

// Q[z]-basis of {v : M v = 0}, as matrix columns (0 columns when injective).
PolyMatrix polynomial_matrix_kernel(const PolyMatrix& m);

// Exponents d_1 <= ... <= d_n with P M Q = diag((z-a)^{d_i}) for P, Q regular
// and invertible at a. Throws SingularMatrix if det M = 0.
std::vector<int> local_elementary_divisors(const RatFuncMatrix& m, const Rat& a);

// Same, evaluated at several points off one Smith computation.
std::map<Rat, std::vector<int>> local_elementary_divisors_multi(
    const RatFuncMatrix& m, const std::vector<Rat>& points);

// Column Hermite form of the span of the columns of m (full row rank
// required): unique n x n lower-triangular basis with monic diagonal and
// off-diagonal entries reduced mod the diagonal of their row.
PolyMatrix hermite_column_basis(const PolyMatrix& m);

} // namespace diffmod
