#pragma once

#include <complex>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hlfusion/nodes.hpp"

namespace hlfusion {

using Complex = std::complex<double>;

// W0-sums over plane waves: c-function, Macdonald spherical functions,
// Weyl characters and monomial orbit sums. xi lives in the orthonormal frame.
class Spherical {
 public:
  explicit Spherical(std::shared_ptr<const RootDatum> rd);

  const RootDatum& datum() const { return *rd_; }
  const WeylGroup& weyl() const { return w_; }

  // prod_{alpha > 0} (1 - t_alpha e^{-i<xi,alpha>}) / (1 - e^{-i<xi,alpha>}); throws std::domain_error at singular xi.
  Complex c_function(const Eigen::VectorXd& xi, const TParams& t) const;
  // M_lambda(xi) = sum_{v in W0} C(v xi) e^{i <v xi, lambda>}.
  Complex msf_value(const Weight& lambda, const Eigen::VectorXd& xi, const TParams& t) const;
  Complex weyl_character(const Weight& lambda, const Eigen::VectorXd& xi) const;
  Complex orbit_sum(const Weight& omega, const Eigen::VectorXd& xi) const;
  // Weyl dimension formula.
  Rational weyl_dimension(const Weight& lambda) const;
  // -w0 lambda == lambda; M_lambda is real at real xi exactly in this case.
  bool self_dual(const Weight& lambda) const;

  // Uniform sample of the open alcove 0 < <xi, alpha> < 2 pi, staying margin away from the walls.
  Eigen::VectorXd sample_alcove(std::mt19937_64& rng, double margin = 1e-3) const;

  // Dominant mu <= lambda in dominance order.
  std::vector<Weight> dominated_weights(const Weight& lambda) const;
  // M_lambda = sum_mu n_{lambda,mu}(t) m_mu by solving at random alcove points.
  std::vector<std::pair<Weight, double>> monomial_expansion(const Weight& lambda, const TParams& t,
                                                           std::uint64_t seed = 1, double* residual = nullptr) const;

 private:
  // <xi, u omega_i> stacked per group element, so <xi, u mu> = row(u) . mu.
  Eigen::MatrixXd images(const Eigen::VectorXd& xi) const;

  std::shared_ptr<const RootDatum> rd_;
  WeylGroup w_;
  std::vector<int> sign_;
  Eigen::MatrixXd coweights_;  // columns: fundamental coweights in the frame
};

// [M_lambda(xi_mu)] for lambda in P_c (rows) and mu in P-hat_c (columns).
struct BasisMatrix {
  int level = 0;
  TParams t;
  std::vector<Weight> rows;
  std::vector<Node> nodes;
  Eigen::MatrixXcd M;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
  double condition = 0;
};

// At t = 0 the nodes are the closed form and the entries are Weyl characters.
BasisMatrix build_basis_matrix(const Spherical& sph, std::shared_ptr<const AffineSystem> aff, const TParams& t);

}  // namespace hlfusion
