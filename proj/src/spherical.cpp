#include "hlfusion/spherical.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace hlfusion {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;
}

Spherical::Spherical(std::shared_ptr<const RootDatum> rd) : rd_(rd), w_(rd) {
  const int n = rd_->rank();
  sign_.resize(w_.order());
  for (std::size_t i = 0; i < w_.order(); ++i) sign_[i] = w_.element(i).length() % 2 ? -1 : 1;
  coweights_ = rd_->frame_roots().transpose().inverse();
  (void)n;
}

Eigen::MatrixXd Spherical::images(const Eigen::VectorXd& xi) const {
  const int n = rd_->rank();
  Eigen::VectorXd p = rd_->frame_weights().transpose() * xi;
  Eigen::MatrixXd out(w_.order(), n);
  for (std::size_t u = 0; u < w_.order(); ++u)
    for (int j = 0; j < n; ++j) {
      Weight img = w_.apply(u, rd_->fundamental_weight(j + 1));
      double s = 0;
      for (int k = 0; k < n; ++k) s += img[k] * p[k];
      out(u, j) = s;
    }
  return out;
}

namespace {

double pair_row(const Eigen::MatrixXd& im, std::size_t u, const Weight& mu) {
  double s = 0;
  for (int j = 0; j < mu.rank(); ++j) s += im(u, j) * mu[j];
  return s;
}

Complex c_factor(double x, double t) {
  Complex e = std::polar(1.0, -x);
  Complex den = 1.0 - e;
  if (std::abs(den) < 1e-12) throw std::domain_error("c-function evaluated at a singular point");
  return (1.0 - t * e) / den;
}

}  // namespace

Complex Spherical::c_function(const Eigen::VectorXd& xi, const TParams& t) const {
  Complex c = 1;
  for (int k = 0; k < rd_->num_positive_roots(); ++k)
    c *= c_factor(rd_->euclid_root(k).dot(xi), t.value(rd_->root(k).orbit));
  return c;
}

Complex Spherical::msf_value(const Weight& lambda, const Eigen::VectorXd& xi, const TParams& t) const {
  Eigen::MatrixXd im = images(xi);
  Complex s = 0;
  for (std::size_t u = 0; u < w_.order(); ++u) {
    Complex c = 1;
    for (int k = 0; k < rd_->num_positive_roots(); ++k)
      c *= c_factor(pair_row(im, u, rd_->root(k).weight), t.value(rd_->root(k).orbit));
    s += c * std::polar(1.0, pair_row(im, u, lambda));
  }
  return s;
}

Complex Spherical::weyl_character(const Weight& lambda, const Eigen::VectorXd& xi) const {
  Eigen::MatrixXd im = images(xi);
  Weight lr = lambda + rd_->rho();
  Complex num = 0;
  for (std::size_t u = 0; u < w_.order(); ++u) num += double(sign_[u]) * std::polar(1.0, pair_row(im, u, lr));
  // denominator in product form
  Complex den = 1;
  for (int k = 0; k < rd_->num_positive_roots(); ++k) {
    double s = std::sin(rd_->euclid_root(k).dot(xi) / 2);
    if (std::abs(s) < 1e-12) throw std::domain_error("Weyl denominator vanishes");
    den *= Complex(0, 2 * s);
  }
  return num / den;
}

Complex Spherical::orbit_sum(const Weight& omega, const Eigen::VectorXd& xi) const {
  Eigen::VectorXd p = rd_->frame_weights().transpose() * xi;
  Complex s = 0;
  for (const auto& nu : rd_->weyl_orbit(omega)) {
    double x = 0;
    for (int j = 0; j < nu.rank(); ++j) x += nu[j] * p[j];
    s += std::polar(1.0, x);
  }
  return s;
}

Rational Spherical::weyl_dimension(const Weight& lambda) const {
  Rational d = 1;
  Weight lr = lambda + rd_->rho();
  for (int k = 0; k < rd_->num_positive_roots(); ++k)
    d *= Rational(rd_->pair_coroot(lr, k), rd_->pair_coroot(rd_->rho(), k));
  return d;
}

bool Spherical::self_dual(const Weight& lambda) const { return -w_.apply(w_.longest(), lambda) == lambda; }

Eigen::VectorXd Spherical::sample_alcove(std::mt19937_64& rng, double margin) const {
  const int n = rd_->rank();
  const RootCoeffs& phi = rd_->root(rd_->highest_root()).coeffs;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd x(n);
  for (;;) {
    double used = 0;
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      x[j] = u(rng) * kTwoPi / phi[j];
      ok = ok && x[j] > margin;
      used += x[j] * phi[j];
    }
    if (ok && kTwoPi - used > margin) return coweights_ * x;
  }
}

std::vector<Weight> Spherical::dominated_weights(const Weight& lambda) const {
  const int n = rd_->rank();
  RationalVec k = rd_->weight_to_root_coords(lambda);
  std::vector<int> bound(n);
  for (int j = 0; j < n; ++j) {
    Rational q = k[j];
    bound[j] = q < 0 ? -1 : static_cast<int>(numerator(q) / denominator(q));
  }
  std::vector<Weight> out;
  std::vector<int> cnt(n, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      Weight mu = lambda;
      for (int i = 0; i < n; ++i) mu -= cnt[i] * rd_->root(rd_->simple_root(i + 1)).weight;
      if (rd_->is_dominant(mu)) out.push_back(mu);
      return;
    }
    for (int v = 0; v <= bound[j]; ++v) {
      cnt[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::pair<Weight, double>> Spherical::monomial_expansion(const Weight& lambda, const TParams& t,
                                                                    std::uint64_t seed, double* residual) const {
  if (!rd_->is_dominant(lambda)) throw std::invalid_argument("monomial expansion needs a dominant weight");
  std::vector<Weight> mus = dominated_weights(lambda);
  const int m = static_cast<int>(mus.size());
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Eigen::MatrixXcd A(m, m);
    Eigen::VectorXcd b(m);
    for (int k = 0; k < m; ++k) {
      Eigen::VectorXd xi = sample_alcove(rng);
      for (int i = 0; i < m; ++i) A(k, i) = orbit_sum(mus[i], xi);
      b[k] = msf_value(lambda, xi, t);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    auto sv = svd.singularValues();
    if (sv[m - 1] < 1e-9 * sv[0]) continue;
    Eigen::VectorXcd x = A.fullPivLu().solve(b);
    double res = (A * x - b).lpNorm<Eigen::Infinity>();
    if (residual) *residual = res;
    std::vector<std::pair<Weight, double>> out;
    for (int i = 0; i < m; ++i) out.emplace_back(mus[i], x[i].real());
    return out;
  }
  throw std::runtime_error("could not find well-conditioned sample points for the monomial expansion");
}

BasisMatrix build_basis_matrix(const Spherical& sph, std::shared_ptr<const AffineSystem> aff, const TParams& t) {
  BasisMatrix b;
  b.level = aff->level();
  b.t = t;
  b.rows = aff->enumerate_Pc();
  NodeSolver solver(aff, t);
  for (const auto& mu : aff->enumerate_Pc_hat()) {
    if (t.is_zero()) {
      Node nd;
      nd.mu = mu;
      nd.xi = solver.seed(mu);
      nd.grad_residual = solver.morse_gradient(mu, nd.xi).lpNorm<Eigen::Infinity>();
      nd.bethe_residual = solver.bethe_residual(nd.xi);
      b.nodes.push_back(nd);
    } else {
      b.nodes.push_back(solver.solve(mu));
    }
  }
  const int n = static_cast<int>(b.rows.size());
  if (static_cast<int>(b.nodes.size()) != n) throw std::logic_error("|P_c| != |P-hat_c|");
  b.M.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b.M(i, j) = t.is_zero() ? sph.weyl_character(b.rows[i], b.nodes[j].xi) : sph.msf_value(b.rows[i], b.nodes[j].xi, t);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b.M);
  auto sv = svd.singularValues();
  b.condition = sv[0] / sv[n - 1];
  if (!(sv[n - 1] > 1e-13 * sv[0])) throw std::runtime_error("basis matrix is numerically singular");
  b.lu.compute(b.M);
  return b;
}

}  // namespace hlfusion
