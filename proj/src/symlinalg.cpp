#include "spdg/symlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace spdg {

namespace {

const char* error_names[] = {
    "InvalidInput",     "ConvergenceFailure", "NotPositiveDefinite",
    "DimMismatch",      "InvalidShape",       "BatchTooSmall",
    "DegeneratePairs",  "Undefined",          "DegenerateSphere",
    "InvalidMasks",     "InvalidVariable",    "ParseError",
    "ConfigMismatch",   "IoError",
};

constexpr int kMaxSweeps = 100;
constexpr double kGapFloor = 1e-9;

double off_diag_sq(const Eigen::MatrixXd& a) {
  double s = 0.0;
  const int n = static_cast<int>(a.rows());
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
  return 2.0 * s;
}

/// Fix the sign of every eigenvector column: largest-magnitude entry positive,
/// ties broken by lowest row index.
void canonicalize_signs(Eigen::MatrixXd& u) {
  const int n = static_cast<int>(u.rows());
  for (int j = 0; j < n; ++j) {
    int pivot = 0;
    double best = std::abs(u(0, j));
    for (int i = 1; i < n; ++i) {
      const double a = std::abs(u(i, j));
      if (a > best) {
        best = a;
        pivot = i;
      }
    }
    if (u(pivot, j) < 0.0) u.col(j) = -u.col(j);
  }
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  return error_names[static_cast<int>(code)];
}

const EigPair& SymMatrix::eig() const {
  if (!eig_cache_) {
    eig_cache_ = std::make_shared<const EigPair>(sym_eig(*this));
  }
  return *eig_cache_;
}

EigPair sym_eig(const SymMatrix& s) {
  require(s.all_finite(), ErrorCode::InvalidInput,
          "sym_eig: non-finite entries");
  const int n = s.dim();

  Eigen::MatrixXd a = s.mat();
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(n, n);

  if (n > 1) {
    const double norm = a.norm();
    const double stop = norm > 0.0 ? 1e-15 * norm : 0.0;

    int sweep = 0;
    while (std::sqrt(off_diag_sq(a)) > stop) {
      require(sweep++ < kMaxSweeps, ErrorCode::ConvergenceFailure,
              "sym_eig: Jacobi did not converge in 100 sweeps");
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = a(p, q);
          if (apq == 0.0) continue;
          // classical 2x2 symmetric Schur rotation (Golub & Van Loan)
          const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double sn = t * c;

          const double app = a(p, p), aqq = a(q, q);
          a(p, p) = app - t * apq;
          a(q, q) = aqq + t * apq;
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          for (int r = 0; r < n; ++r) {
            if (r != p && r != q) {
              const double arp = a(r, p), arq = a(r, q);
              a(r, p) = a(p, r) = c * arp - sn * arq;
              a(r, q) = a(q, r) = sn * arp + c * arq;
            }
            const double urp = u(r, p), urq = u(r, q);
            u(r, p) = c * urp - sn * urq;
            u(r, q) = sn * urp + c * urq;
          }
        }
      }
    }
  }

  // sort ascending, stable across equal eigenvalues
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i) < a(j, j); });

  EigPair out;
  out.sigma.resize(n);
  out.u.resize(n, n);
  for (int j = 0; j < n; ++j) {
    out.sigma(j) = a(order[j], order[j]);
    out.u.col(j) = u.col(order[j]);
  }
  canonicalize_signs(out.u);
  return out;
}

namespace {

SymMatrix spectral_map(const SymMatrix& s,
                       const std::function<double(double)>& f) {
  const EigPair& e = s.eig();
  Eigen::VectorXd fs(e.sigma.size());
  for (int i = 0; i < fs.size(); ++i) fs(i) = f(e.sigma(i));
  return SymMatrix(e.u * fs.asDiagonal() * e.u.transpose());
}

}  // namespace

SymMatrix mat_log_spd(const SymMatrix& s) {
  require(s.all_finite(), ErrorCode::InvalidInput,
          "mat_log_spd: non-finite entries");
  const EigPair& e = s.eig();
  const double min_eig = e.sigma(0);
  require(min_eig > 0.0, ErrorCode::NotPositiveDefinite,
          "mat_log_spd: min eigenvalue " + std::to_string(min_eig));
  return spectral_map(s, [](double x) { return std::log(x); });
}

SymMatrix mat_exp_sym(const SymMatrix& s) {
  require(s.all_finite(), ErrorCode::InvalidInput,
          "mat_exp_sym: non-finite entries");
  return spectral_map(s, [](double x) { return std::exp(x); });
}

SymMatrix eig_fn_backward(const EigPair& eig,
                          const std::function<double(double)>& f,
                          const std::function<double(double)>& fprime,
                          const SymMatrix& d_out) {
  const int n = eig.dim();
  require(d_out.dim() == n, ErrorCode::DimMismatch,
          "eig_fn_backward: gradient dimension mismatch");
  require(d_out.all_finite() && eig.sigma.allFinite() && eig.u.allFinite(),
          ErrorCode::InvalidInput, "eig_fn_backward: non-finite input");

  Eigen::VectorXd fs(n), fps(n);
  for (int i = 0; i < n; ++i) {
    fs(i) = f(eig.sigma(i));
    fps(i) = fprime(eig.sigma(i));
  }

  // Loewner matrix of first divided differences
  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    k(i, i) = fps(i);
    for (int j = i + 1; j < n; ++j) {
      const double gap = eig.sigma(i) - eig.sigma(j);
      const double v = std::abs(gap) < kGapFloor
                           ? fps(i)
                           : (fs(i) - fs(j)) / gap;
      k(i, j) = v;
      k(j, i) = v;
    }
  }

  const Eigen::MatrixXd inner =
      eig.u.transpose() * d_out.mat() * eig.u;
  return SymMatrix(eig.u * k.cwiseProduct(inner).eval() * eig.u.transpose());
}

}  // namespace spdg
