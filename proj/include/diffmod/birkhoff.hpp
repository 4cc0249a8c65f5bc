#pragma once

#include "diffmod/laurent.hpp"
#include "diffmod/matrix.hpp"

namespace diffmod {

using LaurentMatrix = Matrix<LaurentTrunc>;
using LaurentPolyMatrix = Matrix<LaurentPoly>;

struct BirkhoffFactors {
    LaurentMatrix series;       // A: integral entries, det of valuation 0
    LaurentPolyMatrix laurent;  // C: Laurent-polynomial entries, det = c * pi^k
    long val_det_laurent = 0;   // k = val(det C) = val(det B)
};

// B = A * C through the stored precisions, following the row/column
// procedure of the factorization lemma. Throws InsufficientPrecision when a
// pivot cannot be certified, SingularInput when the input is singular
// through the stored order.
BirkhoffFactors birkhoff_factor(const LaurentMatrix& b);

// Expand a rational-function matrix at a to n_terms and factor it.
BirkhoffFactors birkhoff_factor_rational(const RatFuncMatrix& m, const Rat& a, long n_terms);

// Coefficient-wise check of A * C = B on the common known windows.
bool birkhoff_product_matches(const BirkhoffFactors& f, const LaurentMatrix& b);

} // namespace diffmod
