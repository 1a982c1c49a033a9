#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "hlfusion/affine.hpp"
#include "hlfusion/precision.hpp"

namespace hlfusion {

// Odd, increasing lift of 2 arctan((1+t)/(1-t) tan(x/2)) with v(x + 2 pi) = v(x) + 2 pi.
double v_alpha(double x, double t);
double v_prime(double x, double t);
// Integral of v_alpha from 0 to x.
double v_integral(double x, double t);

struct Node {
  CoweightHat mu;
  Eigen::VectorXd xi;  // orthonormal frame of the datum
  double grad_residual = 0;
  double bethe_residual = 0;
  int iterations = 0;
};

// Fusion potential V_mu and its minimizer at level c and parameters t.
class NodeSolver {
 public:
  NodeSolver(std::shared_ptr<const AffineSystem> aff, const TParams& t);

  const AffineSystem& affine() const { return *aff_; }
  int rank() const { return n_; }

  double morse_value(const CoweightHat& mu, const Eigen::VectorXd& xi) const;
  Eigen::VectorXd morse_gradient(const CoweightHat& mu, const Eigen::VectorXd& xi) const;
  Eigen::MatrixXd morse_hessian(const Eigen::VectorXd& xi) const;

  // 2 pi (rho-hat + mu) / (h + c), the exact minimizer at t = 0.
  Eigen::VectorXd seed(const CoweightHat& mu) const;
  // Damped Newton from the seed; throws std::runtime_error without convergence in max_iter steps.
  Node solve(const CoweightHat& mu, int max_iter = 100) const;
  std::vector<Node> solve_all() const;

  // max over beta in R-hat_0^+ of |e^{i c <xi, beta^vee>} - prod_alpha ((1 - t e^{i<xi,alpha>}) / (e^{i<xi,alpha>} - t))^{<alpha-hat, beta^vee>}|.
  double bethe_residual(const Eigen::VectorXd& xi) const;
  // <xi, alpha> for every positive root.
  Eigen::VectorXd root_pairings(const Eigen::VectorXd& xi) const { return roots_.transpose() * xi; }
  // mu recovered from c xi + sum v_alpha alpha-hat = 2 pi (rho-hat + mu).
  CoweightHat recover_mu(const Eigen::VectorXd& xi) const;
  // <omega_i, xi_mu> for i = 1..n, Newton-polished to 50 digits from the double node
  // (critical equations written in the coordinates y_j = <xi, alpha_j>).
  std::vector<RealMP> refine_weight_pairings(const Node& node, int steps = 8) const;
  // Bound on |d xi_mu / dt| over parameters in [t_lo, t_hi] (uniform t).
  double continuity_bound(double t_lo, double t_hi) const;

 private:
  std::shared_ptr<const AffineSystem> aff_;
  TParams params_;
  int n_;
  int c_;
  Eigen::MatrixXd roots_;      // columns: positive roots in the frame
  Eigen::MatrixXd hat_roots_;  // columns: alpha-hat
  Eigen::VectorXd kappa_;      // alpha-hat = kappa alpha
  Eigen::VectorXd t_;          // t_alpha per positive root
  Eigen::MatrixXi bethe_exp_;  // <alpha-hat, beta^vee>, rows beta, cols alpha
  Eigen::MatrixXd hat_coroot_; // columns: beta^vee = m_beta beta
  Eigen::VectorXd rho_hat_;
  Eigen::MatrixXd simple_hat_coroots_;  // columns: m_j alpha_j
};

}  // namespace hlfusion
