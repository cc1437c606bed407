#pragma once

#include <functional>

#include "spdg/symmat.hpp"

namespace spdg {

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
/// Deterministic: identical input bytes give identical output bytes.
/// Eigenvalues ascend; each eigenvector column is signed so its entry of
/// largest magnitude (lowest row index on ties) is positive.
/// Throws InvalidInput on non-finite entries, ConvergenceFailure after 100
/// sweeps (never observed below the n <= 4096 precondition).
EigPair sym_eig(const SymMatrix& s);

/// Matrix logarithm of an SPD matrix: U log(Sigma) U^T.
/// Throws NotPositiveDefinite (with the offending eigenvalue) when
/// min(sigma) <= 0.
SymMatrix mat_log_spd(const SymMatrix& s);

/// Matrix exponential of a symmetric matrix: U exp(Sigma) U^T.
SymMatrix mat_exp_sym(const SymMatrix& s);

/// Gradient of a scalar loss through the spectral map S -> U f(Sigma) U^T.
/// `eig` must be the decomposition of the layer input S and `d_out` the loss
/// gradient w.r.t. the output (symmetric pairing). Divided differences
/// (f(si)-f(sj))/(si-sj) collapse to f'(si) when |si-sj| < 1e-9.
SymMatrix eig_fn_backward(const EigPair& eig,
                          const std::function<double(double)>& f,
                          const std::function<double(double)>& fprime,
                          const SymMatrix& d_out);

}  // namespace spdg
