#include "hlfusion/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace hlfusion {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

AffineSystem::AffineSystem(std::shared_ptr<const RootDatum> rd, int level) : rd_(std::move(rd)), c_(level) {
  if (c_ <= 1) throw std::invalid_argument("level must be an integer c > 1, got " + std::to_string(c_));
}

bool AffineSystem::is_positive(const AffineRoot& a) const {
  return a.r >= 1 || (a.r == 0 && rd_->is_positive(a.root));
}

int AffineSystem::value(const AffineRoot& a, const Weight& lambda) const {
  return rd_->pair_coroot(lambda, a.root) + rd_->root(a.root).m_alpha * a.r * c_;
}

int AffineSystem::simple_value(int j, const Weight& lambda) const {
  if (j == 0) return rd_->pair_coroot(lambda, rd_->alpha0()) + c_;
  return lambda[j - 1];
}

Weight AffineSystem::simple_reflection(int j, const Weight& lambda) const {
  return lambda - simple_value(j, lambda) * simple_root_weight(j);
}

Weight AffineSystem::reflect(const AffineRoot& a, const Weight& lambda) const {
  return lambda - value(a, lambda) * rd_->root(a.root).weight;
}

int AffineSystem::braid_order(int j, int k) const {
  if (j == k) return 1;
  int p = rd_->pair_coroot(simple_root_weight(j), simple_root_index(k)) *
          rd_->pair_coroot(simple_root_weight(k), simple_root_index(j));
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

bool AffineSystem::in_alcove(const Weight& lambda) const {
  for (int j = 0; j <= rank(); ++j)
    if (simple_value(j, lambda) < 0) return false;
  return true;
}

AlcoveProjection AffineSystem::project(const Weight& lambda) const {
  // every step removes one element of R[lambda], so its size bounds the walk
  long cap = 1;
  for (int k = 0; k < rd_->num_positive_roots(); ++k)
    cap += std::abs(rd_->pair_coroot(lambda, k)) / (rd_->root(k).m_alpha * c_) + 1;
  AlcoveProjection out;
  out.t_weight = 1;
  Weight cur = lambda;
  for (;;) {
    int j = -1;
    for (int i = 0; i <= rank(); ++i)
      if (simple_value(i, cur) < 0) {
        j = i;
        break;
      }
    if (j < 0) break;
    if (static_cast<long>(out.steps.size()) >= cap) throw std::logic_error("alcove projection did not terminate");
    out.steps.push_back(j);
    out.t_weight *= TLaurent::t(simple_orbit(j));
    cur = simple_reflection(j, cur);
  }
  out.lambda_plus = cur;
  out.word.assign(out.steps.rbegin(), out.steps.rend());
  return out;
}

std::vector<AffineRoot> AffineSystem::r_set(const Weight& lambda) const {
  std::vector<AffineRoot> out;
  for (int k = 0; k < rd_->num_roots(); ++k) {
    int p = rd_->pair_coroot(lambda, k);
    int step = rd_->root(k).m_alpha * c_;
    int r0 = rd_->is_positive(k) ? 0 : 1;
    // p + step * r < 0  <=>  r <= floor((-p - 1) / step)
    int r1 = floor_div(-p - 1, step);
    for (int r = r0; r <= r1; ++r) out.push_back({k, r});
  }
  return out;
}

int AffineSystem::theta_count(const Weight& lambda) const {
  int count = 0;
  for (int k = 0; k < rd_->num_roots(); ++k) {
    int p = rd_->pair_coroot(lambda, k);
    int step = rd_->root(k).m_alpha * c_;
    if ((-2 - p) % step != 0) continue;
    AffineRoot a{k, (-2 - p) / step};
    if (is_positive(a)) ++count;
  }
  return count;
}

TLaurent AffineSystem::t_of_r_set(const Weight& lambda) const {
  TLaurent t = 1;
  for (const auto& a : r_set(lambda)) t *= TLaurent::t(rd_->root(a.root).orbit);
  return t;
}

std::vector<Weight> AffineSystem::enumerate_Pc() const {
  const int n = rank();
  std::vector<Weight> out;
  Weight cur(n);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v * rd_->marks()[i] <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v * rd_->marks()[i]);
    }
    cur[i] = 0;
  };
  rec(0, c_);
  return out;
}

std::vector<CoweightHat> AffineSystem::enumerate_Pc_hat() const {
  const int n = rank();
  std::vector<CoweightHat> out;
  CoweightHat cur(n);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v * rd_->hat_marks()[i] <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v * rd_->hat_marks()[i]);
    }
    cur[i] = 0;
  };
  rec(0, c_);
  return out;
}

std::vector<int> AffineSystem::stabilizer_generators(const Weight& lambda) const {
  std::vector<int> g;
  for (int j = 0; j <= rank(); ++j)
    if (simple_value(j, lambda) == 0) g.push_back(j);
  return g;
}

TLaurent AffineSystem::stabilizer_poincare(const Weight& lambda) const {
  if (!in_alcove(lambda)) throw std::invalid_argument("weight " + lambda.str() + " is not in P_c");
  const TLaurent hh = h_hat_t(*rd_);
  TLaurent num = 1, den = 1;
  for (int k = 0; k < rd_->num_positive_roots(); ++k) {
    Rational p = rd_->pair_hat(lambda, k);
    TLaurent tb = TLaurent::t(rd_->root(k).orbit);
    if (p == 0) {
      TLaurent e = e_hat_t(*rd_, rd_->hat_root(k));
      num *= 1 - tb * e;
      den *= 1 - e;
    } else if (p == c_) {
      RationalVec minus = rd_->hat_root(k);
      for (auto& x : minus) x = -x;
      TLaurent e = hh * e_hat_t(*rd_, minus);
      num *= 1 - tb * e;
      den *= 1 - e;
    }
  }
  auto q = num.divide(den);
  if (!q) throw std::logic_error("stabilizer product is not a Laurent polynomial");
  return *q;
}

TLaurent AffineSystem::stabilizer_poincare_brute(const Weight& lambda) const {
  return poincare_series(*rd_, stabilizer_generators(lambda));
}

TLaurent AffineSystem::finite_stabilizer_poincare(const Weight& omega) const {
  std::vector<int> g;
  for (int j = 1; j <= rank(); ++j)
    if (omega[j - 1] == 0) g.push_back(j);
  return poincare_series(*rd_, g);
}

}  // namespace hlfusion
