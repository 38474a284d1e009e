#pragma once

#include <Eigen/Dense>
#include <vector>

namespace netsparse {

// Quantities of the analytical error bounds, evaluated per compressed step.
struct BoundReport {
  double delta_s = 0.0;      // ||x - D z||
  double delta_D = 0.0;      // ||D Y - X||_2
  double delta_Dhat = 0.0;   // ||Dhat Yhat - Xhat||_2
  double delta_XXhat = 0.0;  // ||X - Xhat||_2
  double pinv_factor_z = 0.0;   // ||Y^+ z||
  double pinv_factor_DY = 0.0;  // ||Y^+ D^+||_2
  double bound_tho0 = 0.0;
  double bound_tho1 = 0.0;
  double lemma3_closed = 0.0;
  double lemma3_proof = 0.0;
  double corollary2_beta = 0.0;
  double corollary2_gamma = 0.0;
};

// First-order bound delta_s + (delta_D + delta_Dhat + delta_XXhat) ||Y^+ z||
// and its pseudo-inverse-product relaxation. Spectral norms and
// pseudo-inverses via SVD.
BoundReport theorem1_bounds(const Eigen::MatrixXd& window, const Eigen::MatrixXd& codes,
                            const Eigen::MatrixXd& atoms, const Eigen::VectorXd& code,
                            double delta_s, const Eigen::VectorXd& state,
                            const Eigen::MatrixXd& window_hat,
                            const Eigen::MatrixXd& codes_hat,
                            const Eigen::MatrixXd& atoms_hat, double sv_rcond = 1e-12);

// Geometric factor sum_{i=1}^{terms} a^i, evaluated term by term so a = 1
// needs no special casing.
double geometric_sum(double a, int terms);

// Window-difference bound from the error history theta(k-1) .. theta(k-H_b).
// The paper states a closed form whose geometric factor carries one extra
// power of ||A||_2 compared with its own derivation; both are returned and
// dominance checks use the larger. corollary1_indexing starts the backward
// sum at i = 1 instead of i = 2.
struct Lemma3Result {
  double closed_form = 0.0;
  double proof_form = 0.0;
  double max_form() const { return closed_form > proof_form ? closed_form : proof_form; }
};
Lemma3Result lemma3_bound(const std::vector<double>& theta_history, double norm_A,
                          int h_backward, int h_forward, bool corollary1_indexing = false);

// H_b = 0 error recursion theta(k) <= beta(k) + gamma(k) theta(k-1), applied
// from index 0 with seed theta0, plus the stationary formula
// B Gamma / (1 - Gamma) + Gamma^{k+1} theta(0) when sup gamma < 1.
struct Corollary2Result {
  std::vector<double> unrolled;
  std::vector<double> steady;
  bool steady_valid = false;
};
Corollary2Result corollary2_recursion(const std::vector<double>& beta,
                                      const std::vector<double>& gamma, double theta0);

double corollary2_beta(double delta_s, double delta_D, double delta_Dhat,
                       double pinv_factor_DY, double x0_norm);
double corollary2_gamma(double delta_s, double norm_A, int h_forward,
                        double pinv_factor_DY, double x0_norm);

}  // namespace netsparse
