#pragma once

#include <Eigen/Dense>
#include <memory>

#include "spdg/errors.hpp"

namespace spdg {

struct EigPair {
  Eigen::MatrixXd u;      // columns are eigenvectors, orthonormal
  Eigen::VectorXd sigma;  // eigenvalues, ascending

  int dim() const { return static_cast<int>(sigma.size()); }

  Eigen::MatrixXd reconstruct() const {
    return u * sigma.asDiagonal() * u.transpose();
  }
};

/// Dense symmetric matrix. Construction symmetrizes as (A + A^T)/2 so the two
/// triangles are bitwise equal; an eigendecomposition is cached after the
/// first request.
class SymMatrix {
 public:
  SymMatrix() = default;

  explicit SymMatrix(const Eigen::MatrixXd& a) {
    require(a.rows() == a.cols(), ErrorCode::InvalidShape,
            "symmetric matrix must be square");
    require(a.rows() >= 1, ErrorCode::InvalidShape,
            "symmetric matrix needs dimension >= 1");
    data_ = 0.5 * (a + a.transpose());
  }

  static SymMatrix identity(int n) {
    return SymMatrix(Eigen::MatrixXd::Identity(n, n));
  }

  static SymMatrix zero(int n) {
    return SymMatrix(Eigen::MatrixXd::Zero(n, n));
  }

  int dim() const { return static_cast<int>(data_.rows()); }
  const Eigen::MatrixXd& mat() const { return data_; }
  double operator()(int i, int j) const { return data_(i, j); }

  bool all_finite() const { return data_.allFinite(); }
  double frobenius_norm() const { return data_.norm(); }

  /// Cached eigendecomposition (see sym_eig for the contract). The cache is
  /// not synchronized; share across threads only after it is populated.
  const EigPair& eig() const;

 private:
  Eigen::MatrixXd data_;
  mutable std::shared_ptr<const EigPair> eig_cache_;
};

}  // namespace spdg
