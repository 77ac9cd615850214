#pragma once

#include <vector>

#include "eisl/field.hpp"

// Small exact linear algebra over Z[w] and Q(w): Hermite reduction of
// generating sets, Gaussian determinant/inverse/solve.  Sizes here are 12-24,
// so simplicity beats asymptotics.

namespace eisl {

using EisRow = std::vector<Eis>;
using CycloRow = std::vector<Cyclo>;
using EisMat = std::vector<EisRow>;
using CycloMat = std::vector<CycloRow>;

/// Nearest Eisenstein integer to a Q(w) element (componentwise rounding;
/// the remainder has norm <= 3/4 < 1, so Z[w] is norm-Euclidean).
inline Eis roundCyclo(const Cyclo& x) { return Eis(roundRat(x.a), roundRat(x.b)); }

/// Row-style Hermite reduction over Z[w]: reduces a spanning set to a basis
/// (rank must equal the column count).  Deterministic: pivots are chosen by
/// minimal norm, ties by the (a, b) lexicographic order.
EisMat hnfBasis(EisMat rows, int cols);

CycloMat toCyclo(const EisMat& m);

/// Exact determinant over Q(w) by Gaussian elimination.
Cyclo cycloDet(CycloMat m);

/// Exact inverse over Q(w); throws MathError if singular.
CycloMat cycloInverse(CycloMat m);

/// Solve x * M = rhs for a row vector x over Q(w).
CycloRow cycloSolveLeft(const CycloMat& m, const CycloRow& rhs);

/// Bareiss integer determinant.
Int intDet(std::vector<std::vector<Int>> m);

}  // namespace eisl
