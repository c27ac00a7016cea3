#pragma once

#include <vector>

#include "qcopy/operator.hpp"

namespace qcopy {

struct EigenDecomposition {
  /// Ascending. Within numerically degenerate clusters the accompanying
  /// eigenvector basis is an arbitrary orthonormal choice.
  std::vector<double> eigenvalues;
  /// Columns are the orthonormal eigenvectors: h = V diag(λ) V†.
  Operator eigenvectors;
};

/// Diagonalizes a Hermitian operator with cyclic complex Jacobi rotations.
/// `tol` bounds the accepted relative hermiticity defect ‖h−h†‖_F / ‖h‖_F;
/// throws NotHermitian beyond it. Convergence: off-diagonal Frobenius mass
/// ≤ 1e-14·‖h‖_F, at most 100 sweeps.
EigenDecomposition hermitian_eig(const Operator& h, double tol = 1e-12);

/// U = e^{−i h dt} (ħ = 1): V diag(e^{−iλ_k dt}) V† through hermitian_eig.
Operator propagator(const Operator& h, double dt, double tol = 1e-12);

}  // namespace qcopy
