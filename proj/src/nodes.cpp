#include "hlfusion/nodes.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace hlfusion {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;
}

double v_alpha(double x, double t) {
  double k = std::round(x / kTwoPi);
  double y = x - kTwoPi * k;
  return 2 * std::atan2((1 + t) * std::sin(y / 2), (1 - t) * std::cos(y / 2)) + kTwoPi * k;
}

double v_prime(double x, double t) { return (1 - t * t) / (1 - 2 * t * std::cos(x) + t * t); }

double v_integral(double x, double t) {
  double s = 0, tk = 1;
  for (int k = 1; k < 100000; ++k) {
    tk *= t;
    double term = tk * (1 - std::cos(k * x)) / (double(k) * k);
    s += term;
    if (std::abs(tk) / (double(k) * k) < 1e-19) break;
  }
  return x * x / 2 + 2 * s;
}

NodeSolver::NodeSolver(std::shared_ptr<const AffineSystem> aff, const TParams& t)
    : aff_(std::move(aff)), params_(t), n_(aff_->rank()), c_(aff_->level()) {
  const RootDatum& rd = aff_->datum();
  const int np = rd.num_positive_roots();
  roots_.resize(n_, np);
  hat_roots_.resize(n_, np);
  hat_coroot_.resize(n_, np);
  kappa_.resize(np);
  t_.resize(np);
  bethe_exp_.resize(np, np);
  for (int k = 0; k < np; ++k) {
    roots_.col(k) = rd.euclid_root(k);
    hat_roots_.col(k) = rd.euclid_hat_root(k);
    hat_coroot_.col(k) = rd.euclid(rd.hat_coroot(k));
    kappa_[k] = to_double(Rational(2) / (rd.root(k).m_alpha * rd.root(k).norm2));
    t_[k] = t.value(rd.root(k).orbit);
  }
  for (int b = 0; b < np; ++b)
    for (int a = 0; a < np; ++a) {
      Rational e = rd.inner(rd.hat_root(a), rd.hat_coroot(b));
      if (denominator(e) != 1) throw std::logic_error("non-integral Bethe exponent");
      bethe_exp_(b, a) = static_cast<int>(numerator(e));
    }
  rho_hat_ = rd.euclid(rd.rho_hat());
  simple_hat_coroots_.resize(n_, n_);
  for (int j = 1; j <= n_; ++j) simple_hat_coroots_.col(j - 1) = rd.euclid(rd.hat_coroot(rd.simple_root(j)));
}

double NodeSolver::morse_value(const CoweightHat& mu, const Eigen::VectorXd& xi) const {
  Eigen::VectorXd p = root_pairings(xi);
  double s = c_ * xi.squaredNorm() / 2;
  for (int k = 0; k < p.size(); ++k) s += kappa_[k] * v_integral(p[k], t_[k]);
  Eigen::VectorXd target = kTwoPi * (rho_hat_ + aff_->datum().euclid(mu));
  return s - target.dot(xi);
}

Eigen::VectorXd NodeSolver::morse_gradient(const CoweightHat& mu, const Eigen::VectorXd& xi) const {
  Eigen::VectorXd p = root_pairings(xi);
  Eigen::VectorXd g = c_ * xi - kTwoPi * (rho_hat_ + aff_->datum().euclid(mu));
  for (int k = 0; k < p.size(); ++k) g += v_alpha(p[k], t_[k]) * hat_roots_.col(k);
  return g;
}

Eigen::MatrixXd NodeSolver::morse_hessian(const Eigen::VectorXd& xi) const {
  Eigen::VectorXd p = root_pairings(xi);
  Eigen::MatrixXd h = c_ * Eigen::MatrixXd::Identity(n_, n_);
  for (int k = 0; k < p.size(); ++k) h += kappa_[k] * v_prime(p[k], t_[k]) * roots_.col(k) * roots_.col(k).transpose();
  return h;
}

Eigen::VectorXd NodeSolver::seed(const CoweightHat& mu) const {
  return kTwoPi * (rho_hat_ + aff_->datum().euclid(mu)) / double(aff_->datum().coxeter_number() + c_);
}

Node NodeSolver::solve(const CoweightHat& mu, int max_iter) const {
  Node node;
  node.mu = mu;
  Eigen::VectorXd x = seed(mu);
  Eigen::VectorXd g = morse_gradient(mu, x);
  double f = morse_value(mu, x);
  int it = 0;
  while (g.lpNorm<Eigen::Infinity>() >= 1e-12) {
    if (it == max_iter)
      throw std::runtime_error("node solver did not converge for mu = " + mu.str() + " (|grad| = " +
                               std::to_string(g.lpNorm<Eigen::Infinity>()) + ")");
    ++it;
    Eigen::VectorXd step = morse_hessian(x).llt().solve(g);
    double lambda = 1;
    Eigen::VectorXd xn;
    Eigen::VectorXd gn;
    double fn = 0;
    for (int h = 0; h < 60; ++h) {
      xn = x - lambda * step;
      fn = morse_value(mu, xn);
      gn = morse_gradient(mu, xn);
      if (fn <= f || gn.lpNorm<Eigen::Infinity>() < g.lpNorm<Eigen::Infinity>()) break;
      lambda /= 2;
    }
    if ((xn - x).lpNorm<Eigen::Infinity>() == 0) break;  // no representable progress left
    x = xn;
    g = gn;
    f = fn;
  }
  node.xi = x;
  node.grad_residual = g.lpNorm<Eigen::Infinity>();
  node.iterations = it;
  node.bethe_residual = bethe_residual(x);
  if (!(node.grad_residual < 1e-12))
    throw std::runtime_error("node solver stalled for mu = " + mu.str() + " (|grad| = " + std::to_string(node.grad_residual) + ")");
  return node;
}

std::vector<Node> NodeSolver::solve_all() const {
  std::vector<Node> out;
  for (const auto& mu : aff_->enumerate_Pc_hat()) out.push_back(solve(mu));
  return out;
}

double NodeSolver::bethe_residual(const Eigen::VectorXd& xi) const {
  Eigen::VectorXd p = root_pairings(xi);
  const int np = static_cast<int>(p.size());
  std::vector<std::complex<double>> factor(np);
  for (int a = 0; a < np; ++a) {
    std::complex<double> z = std::polar(1.0, p[a]);
    factor[a] = (1.0 - t_[a] * z) / (z - t_[a]);
  }
  double worst = 0;
  for (int b = 0; b < np; ++b) {
    std::complex<double> lhs = std::polar(1.0, c_ * hat_coroot_.col(b).dot(xi));
    std::complex<double> rhs = 1;
    for (int a = 0; a < np; ++a) rhs *= std::pow(factor[a], bethe_exp_(b, a));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

CoweightHat NodeSolver::recover_mu(const Eigen::VectorXd& xi) const {
  Eigen::VectorXd p = root_pairings(xi);
  Eigen::VectorXd s = c_ * xi;
  for (int k = 0; k < p.size(); ++k) s += v_alpha(p[k], t_[k]) * hat_roots_.col(k);
  Eigen::VectorXd m = s / kTwoPi - rho_hat_;
  CoweightHat mu(n_);
  for (int j = 0; j < n_; ++j) mu[j] = static_cast<int>(std::lround(simple_hat_coroots_.col(j).dot(m)));
  return mu;
}

double NodeSolver::continuity_bound(double t_lo, double t_hi) const {
  double tm = std::max(std::abs(t_lo), std::abs(t_hi));
  double s = 0;
  for (int k = 0; k < hat_roots_.cols(); ++k) s += 2 * hat_roots_.col(k).norm() / (1 - tm * tm);
  return s / c_;
}

namespace {

RealMP v_alpha_mp(const RealMP& x, const RealMP& t) {
  const RealMP two_pi = 2 * boost::math::constants::pi<RealMP>();
  RealMP k = boost::multiprecision::round(x / two_pi);
  RealMP y = x - two_pi * k;
  return 2 * boost::multiprecision::atan2((1 + t) * boost::multiprecision::sin(y / 2),
                                          (1 - t) * boost::multiprecision::cos(y / 2)) +
         two_pi * k;
}

RealMP v_prime_mp(const RealMP& x, const RealMP& t) {
  return (1 - t * t) / (1 - 2 * t * boost::multiprecision::cos(x) + t * t);
}

}  // namespace

std::vector<RealMP> NodeSolver::refine_weight_pairings(const Node& node, int steps) const {
  const RootDatum& rd = aff_->datum();
  const int np = rd.num_positive_roots();
  std::vector<RationalVec> simple(n_);
  for (int i = 0; i < n_; ++i) simple[i] = rd.root_to_root_coords(rd.simple_root(i + 1));
  std::vector<std::vector<RealMP>> a(np, std::vector<RealMP>(n_));  // <alpha-hat, alpha_i>
  std::vector<RealMP> ta(np);
  for (int k = 0; k < np; ++k) {
    RationalVec h = rd.hat_root(k);
    for (int i = 0; i < n_; ++i) a[k][i] = RealMP(rd.inner(h, simple[i]));
    ta[k] = RealMP(params_.exact(rd.root(k).orbit));
  }
  RationalVec target = rd.rho_hat();
  RationalVec mu = rd.hat_to_root_coords(node.mu);
  for (std::size_t j = 0; j < target.size(); ++j) target[j] += mu[j];
  const RealMP two_pi = 2 * boost::math::constants::pi<RealMP>();
  std::vector<RealMP> b(n_);
  for (int i = 0; i < n_; ++i) b[i] = two_pi * RealMP(rd.inner(target, simple[i]));

  std::vector<RealMP> y(n_);
  for (int i = 0; i < n_; ++i) y[i] = RealMP(rd.euclid_root(rd.simple_root(i + 1)).dot(node.xi));

  for (int it = 0; it < steps; ++it) {
    std::vector<RealMP> f(n_);
    std::vector<std::vector<RealMP>> jac(n_, std::vector<RealMP>(n_ + 1, RealMP(0)));
    for (int i = 0; i < n_; ++i) {
      f[i] = c_ * y[i] - b[i];
      jac[i][i] = c_;
    }
    for (int k = 0; k < np; ++k) {
      const RootCoeffs& kc = rd.root(k).coeffs;
      RealMP x = 0;
      for (int j = 0; j < n_; ++j) x += kc[j] * y[j];
      RealMP v = v_alpha_mp(x, ta[k]), vp = v_prime_mp(x, ta[k]);
      for (int i = 0; i < n_; ++i) {
        f[i] += v * a[k][i];
        for (int j = 0; j < n_; ++j)
          if (kc[j] != 0) jac[i][j] += vp * a[k][i] * kc[j];
      }
    }
    for (int i = 0; i < n_; ++i) jac[i][n_] = -f[i];
    for (int col = 0; col < n_; ++col) {
      int piv = col;
      for (int r = col + 1; r < n_; ++r)
        if (abs(jac[r][col]) > abs(jac[piv][col])) piv = r;
      std::swap(jac[col], jac[piv]);
      for (int r = 0; r < n_; ++r) {
        if (r == col || jac[r][col] == 0) continue;
        RealMP m = jac[r][col] / jac[col][col];
        for (int q = col; q <= n_; ++q) jac[r][q] -= m * jac[col][q];
      }
    }
    for (int i = 0; i < n_; ++i) y[i] += jac[i][n_] / jac[i][i];
  }

  std::vector<RealMP> p(n_, RealMP(0));
  for (int i = 0; i < n_; ++i) {
    RationalVec w = rd.weight_to_root_coords(rd.fundamental_weight(i + 1));
    for (int j = 0; j < n_; ++j) p[i] += RealMP(w[j]) * y[j];
  }
  return p;
}

}  // namespace hlfusion
