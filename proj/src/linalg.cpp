#include "netsparse/linalg.hpp"

namespace netsparse::linalg {

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& a, double rcond) {
  if (a.rows() == 0 || a.cols() == 0) return Eigen::MatrixXd::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = rcond * sv(0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

double spectral_norm(const Eigen::MatrixXd& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues()(0);
}

Eigen::VectorXd solve_min_norm(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                               double rcond) {
  if (a.cols() == 0) return Eigen::VectorXd::Zero(0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = rcond * (sv.size() > 0 ? sv(0) : 0.0);
  Eigen::VectorXd c = svd.matrixU().transpose() * b;
  for (Eigen::Index i = 0; i < sv.size(); ++i) c(i) = sv(i) > cutoff ? c(i) / sv(i) : 0.0;
  return svd.matrixV() * c;
}

bool all_finite(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  return a.allFinite();
}

}  // namespace netsparse::linalg
