#include "hlfusion/pieri.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace hlfusion {

namespace {

double eval(const TLaurent& x, const TParams& t) {
  return t.is_zero() ? to_double(x.value_at_zero()) : x.evaluate(t);
}

TLaurent exact_quotient(const TLaurent& num, const TLaurent& den, const char* what) {
  auto q = num.divide(den);
  if (!q) throw std::logic_error(std::string(what) + " is not a Laurent polynomial");
  return *q;
}

bool contains(const std::vector<Weight>& v, const Weight& w) { return std::find(v.begin(), v.end(), w) != v.end(); }

}  // namespace

Pieri::Pieri(std::shared_ptr<const AffineSystem> aff) : aff_(std::move(aff)) {
  for (const auto& w : pieri_weights())
    for (const auto& nu : datum().weyl_orbit(w)) star_.push_back(nu);
  theta_orbit_ = datum().weyl_orbit(datum().quasi_minuscule_weight());
}

std::vector<Weight> Pieri::pieri_weights() const {
  std::vector<Weight> out = datum().minuscule_weights();
  out.push_back(datum().quasi_minuscule_weight());
  return out;
}

bool Pieri::is_pieri_weight(const Weight& omega) const { return contains(pieri_weights(), omega); }

bool Pieri::in_theta_orbit(const Weight& nu) const { return contains(theta_orbit_, nu); }

TLaurent Pieri::t_theta_inv() const { return TLaurent::t(datum().root(datum().highest_short_root()).orbit, -1); }

int Pieri::root_of_weight(const Weight& nu) const {
  for (int k = 0; k < datum().num_roots(); ++k)
    if (datum().root(k).weight == nu) return k;
  return -1;
}

Weight Pieri::walk_image(const Weight& mu, const Weight& lambda) const {
  Weight x = lambda;
  for (int j : aff_->project(mu).steps) x = aff_->simple_reflection(j, x);
  return x;
}

TLaurent Pieri::d_coef(const Weight& lambda, const Weight& nu) const {
  if (!in_theta_orbit(nu)) return 0;
  int theta = aff_->theta_count(lambda + nu);
  if (theta == 0) return 0;
  Rational p = datum().pair_hat(lambda, root_of_weight(nu));
  int sign = p > 0 ? 1 : (p < 0 ? -1 : 0);
  // h_t with t_{alpha_0}; equals t_theta e_t(-alpha_0) unless alpha_0 = -phi is long
  const RootDatum& rd = datum();
  TLaurent h = TLaurent::t(aff_->simple_orbit(0)) * e_t(rd, rd.root(rd.negate(rd.alpha0())).weight);
  return TLaurent(theta) * e_t(rd, -nu) * h.pow(sign);
}

TLaurent Pieri::U_coef(const Weight& lambda, const Weight& omega) const {
  if (!is_pieri_weight(omega)) throw std::invalid_argument(omega.str() + " is neither minuscule nor quasi-minuscule");
  if (!aff_->in_alcove(lambda)) throw std::invalid_argument(lambda.str() + " is not in P_c");
  TLaurent first, second;
  for (const auto& nu : datum().weyl_orbit(omega)) {
    AlcoveProjection p = aff_->project(lambda + nu);
    if (p.lambda_plus == lambda) first += p.t_weight;
    if (in_theta_orbit(nu) && walk_image(lambda + nu, lambda) == lambda) second += d_coef(lambda, nu);
  }
  return first + (1 - t_theta_inv()) * second;
}

TLaurent Pieri::U_coef_unfiltered(const Weight& lambda, const Weight& omega) const {
  TLaurent first, second;
  for (const auto& nu : datum().weyl_orbit(omega)) {
    AlcoveProjection p = aff_->project(lambda + nu);
    if (p.lambda_plus == lambda) first += p.t_weight;
    second += d_coef(lambda, nu);
  }
  return first + (1 - t_theta_inv()) * second;
}

TLaurent Pieri::V_coef(const Weight& lambda, const Weight& nu) const {
  if (!aff_->in_alcove(lambda + nu)) throw std::invalid_argument((lambda + nu).str() + " is not in P_c");
  const RootDatum& rd = datum();
  const TLaurent hh = h_hat_t(rd);
  TLaurent num = 1, den = 1;
  for (int k = 0; k < rd.num_positive_roots(); ++k) {
    Rational pl = rd.pair_hat(lambda, k), pn = rd.pair_hat(nu, k);
    TLaurent tb = TLaurent::t(rd.root(k).orbit);
    if (pl == 0 && pn > 0) {
      TLaurent e = e_hat_t(rd, rd.hat_root(k));
      num *= 1 - tb * e;
      den *= 1 - e;
    } else if (pl == aff_->level() && pn < 0) {
      RationalVec minus = rd.hat_root(k);
      for (auto& x : minus) x = -x;
      TLaurent e = hh * e_hat_t(rd, minus);
      num *= 1 - tb * e;
      den *= 1 - e;
    }
  }
  return exact_quotient(num, den, "V coefficient");
}

TLaurent Pieri::V_quotient(const Weight& lambda, const Weight& nu) const {
  std::vector<int> gl = aff_->stabilizer_generators(lambda), common;
  for (int j : gl)
    if (aff_->simple_value(j, lambda + nu) == 0) common.push_back(j);
  return exact_quotient(poincare_series(datum(), gl), poincare_series(datum(), common), "stabilizer quotient");
}

TLaurent Pieri::V_orbit_sum(const Weight& lambda, const Weight& nu, const Weight& omega) const {
  TLaurent s;
  for (const auto& eta : datum().weyl_orbit(omega)) {
    AlcoveProjection p = aff_->project(lambda + eta);
    if (p.lambda_plus == lambda + nu) s += p.t_weight;
  }
  return s;
}

int Pieri::N(const Weight& lambda, const Weight& omega) const {
  auto orbit = datum().weyl_orbit(omega);
  int n = 0;
  for (int j = 0; j <= aff_->rank(); ++j)
    if (aff_->simple_value(j, lambda) == 0 && contains(orbit, aff_->simple_root_weight(j))) ++n;
  return n;
}

Coefficients Pieri::lr_pieri(const Weight& lambda, const Weight& omega) const {
  TLaurent w = aff_->finite_stabilizer_poincare(omega);
  Coefficients out;
  TLaurent diag = w * (U_coef(lambda, omega) - U_coef(datum().zero_weight(), omega));
  if (!diag.is_zero()) out.emplace_back(lambda, diag);
  for (const auto& nu : datum().weyl_orbit(omega))
    if (aff_->in_alcove(lambda + nu)) out.emplace_back(lambda + nu, w * V_coef(lambda, nu));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::pair<Weight, long>> Pieri::fusion_pieri(const Weight& lambda, const Weight& omega) const {
  if (!is_pieri_weight(omega)) throw std::invalid_argument(omega.str() + " is neither minuscule nor quasi-minuscule");
  std::vector<std::pair<Weight, long>> out;
  long diag = N(datum().zero_weight(), omega) - N(lambda, omega);
  if (diag != 0) out.emplace_back(lambda, diag);
  for (const auto& nu : datum().weyl_orbit(omega))
    if (aff_->in_alcove(lambda + nu)) out.emplace_back(lambda + nu, 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool Pieri::theta_classification_holds(const Weight& lambda, const Weight& nu) const {
  const Weight mu = lambda + nu;
  AlcoveProjection p = aff_->project(mu);
  int theta = aff_->theta_count(mu);
  if (p.lambda_plus == lambda) {
    if (p.steps.empty()) return theta == 0;
    return theta == 0 && aff_->simple_orbit(p.steps.back()) == datum().root(datum().highest_short_root()).orbit;
  }
  if (walk_image(mu, lambda) != lambda) return false;
  int expected = 0;
  if (in_theta_orbit(nu)) {
    int k = root_of_weight(nu);
    Rational pl = datum().pair_hat(lambda, k);
    if (!datum().is_positive(k) && pl == 0) expected = 1;
    if (datum().is_positive(k) && pl == aff_->level()) expected = 1;
  }
  return theta == expected;
}

bool Pieri::exceptional_twisted() const {
  const RootDatum& rd = datum();
  if (rd.pair_kind() != PairKind::Twisted || rd.simply_laced()) return false;
  Rational ratio = rd.root(rd.highest_root()).norm2 / rd.root(rd.highest_short_root()).norm2;
  return aff_->level() % static_cast<int>(numerator(ratio)) == 0;
}

double pieri_identity_check(const Pieri& p, const Spherical& sph, const BasisMatrix& b, const Weight& lambda,
                            const Weight& omega) {
  std::unordered_map<Weight, int> row;
  for (std::size_t i = 0; i < b.rows.size(); ++i) row.emplace(b.rows[i], static_cast<int>(i));
  const double u = eval(p.U_coef(lambda, omega), b.t);
  std::vector<std::pair<int, double>> terms;
  for (const auto& nu : p.datum().weyl_orbit(omega))
    if (p.affine().in_alcove(lambda + nu)) terms.emplace_back(row.at(lambda + nu), eval(p.V_coef(lambda, nu), b.t));
  const int l = row.at(lambda);
  double worst = 0;
  for (std::size_t j = 0; j < b.nodes.size(); ++j) {
    Complex r = (sph.orbit_sum(omega, b.nodes[j].xi) - u) * b.M(l, j);
    for (const auto& [i, v] : terms) r -= v * b.M(i, j);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

int StructureTable::index(const Weight& w) const {
  auto it = std::find(weights.begin(), weights.end(), w);
  if (it == weights.end()) throw std::out_of_range(w.str() + " is not in P_c");
  return static_cast<int>(it - weights.begin());
}

StructureTable structure_constants(const BasisMatrix& b, int threads) {
  StructureTable s;
  s.level = b.level;
  s.t = b.t;
  s.fusion = b.t.is_zero();
  s.weights = b.rows;
  const int n = s.size();
  s.coef.assign(std::size_t(n) * n * n, 0);
  Eigen::MatrixXcd bt = b.M.transpose();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(bt);
  std::vector<double> resid(n, 0);
  auto work = [&](int l) {
    for (int m = 0; m < n; ++m) {
      Eigen::VectorXcd rhs = b.M.row(l).cwiseProduct(b.M.row(m)).transpose();
      Eigen::VectorXcd x = lu.solve(rhs);
      resid[l] = std::max(resid[l], (bt * x - rhs).norm() / std::max(rhs.norm(), 1e-300));
      for (int k = 0; k < n; ++k) s.coef[(std::size_t(l) * n + m) * n + k] = x[k];
    }
  };
  if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (int l = w; l < n; l += threads) work(l);
    });
  for (auto& th : pool) th.join();
  s.residual = *std::max_element(resid.begin(), resid.end());
  if (s.residual > 1e-6) throw std::runtime_error("structure constant solve residual " + std::to_string(s.residual));
  return s;
}

StructureTable structure_constants(const Spherical& sph, std::shared_ptr<const AffineSystem> aff, const TParams& t) {
  Pieri p(aff);
  StructureTable s = structure_constants(build_basis_matrix(sph, aff, t));
  s.exceptional_twisted = p.exceptional_twisted();
  return s;
}

StructureTable fusion_ring(const Spherical& sph, std::shared_ptr<const AffineSystem> aff) {
  const RootDatum& rd = aff->datum();
  StructureTable s = structure_constants(sph, aff, TParams(rd, 0, 0, true));
  s.integers.resize(s.coef.size());
  for (std::size_t i = 0; i < s.coef.size(); ++i) {
    double r = std::round(s.coef[i].real());
    s.rounding = std::max({s.rounding, std::abs(s.coef[i].real() - r), std::abs(s.coef[i].imag())});
    s.integers[i] = static_cast<long>(r);
  }
  if (s.rounding >= 1e-6)
    throw std::runtime_error("fusion coefficient off an integer by " + std::to_string(s.rounding));
  return s;
}

double commutativity_defect(const StructureTable& s) {
  const int n = s.size();
  double worst = 0;
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m)
      for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(s(l, m, k) - s(m, l, k)));
  return worst;
}

double associativity_defect(const StructureTable& s) {
  const int n = s.size();
  double worst = 0;
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int q = 0; q < n; ++q)
        for (int k = 0; k < n; ++k) {
          Complex a = 0, b = 0;
          for (int g = 0; g < n; ++g) {
            a += s(l, m, g) * s(g, q, k);
            b += s(m, q, g) * s(l, g, k);
          }
          worst = std::max(worst, std::abs(a - b));
        }
  return worst;
}

}  // namespace hlfusion
