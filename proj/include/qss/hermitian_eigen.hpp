// Eigenvalues of Hermitian matrices via cyclic complex Jacobi sweeps.
// Deterministic (fixed pivot order, no randomized pivoting), so every run of
// the toolkit is reproducible bit-for-bit.
#pragma once

#include <vector>

#include "qss/complex_matrix.hpp"

namespace qss {

// Ascending eigenvalues. Throws ValidationError if m is not Hermitian
// within `hermitian_tol`.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double hermitian_tol = 1e-10);

double min_eigenvalue(const ComplexMatrix& m, double hermitian_tol = 1e-10);

} // namespace qss
