#pragma once

#include <memory>
#include <vector>

#include "hlfusion/rootdata.hpp"
#include "hlfusion/tring.hpp"

namespace hlfusion {

// a = alpha^vee + m_alpha r c for alpha = root(root); differential alpha^vee.
struct AffineRoot {
  int root = 0;
  int r = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

struct AlcoveProjection {
  Weight lambda_plus;
  // w_lambda = s_{word[0]} ... s_{word[l-1]}; steps is the same word in the
  // order the reflections were applied (steps.front() acts first on lambda).
  std::vector<int> word;
  std::vector<int> steps;
  TLaurent t_weight;
};

// Affine Weyl group data of the pair at a fixed level c > 1.
class AffineSystem {
 public:
  AffineSystem(std::shared_ptr<const RootDatum> rd, int level);

  const RootDatum& datum() const { return *rd_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return rd_; }
  int level() const { return c_; }
  int rank() const { return rd_->rank(); }

  bool is_positive(const AffineRoot& a) const;
  int value(const AffineRoot& a, const Weight& lambda) const;
  // a_j(lambda) for j in 0..n.
  int simple_value(int j, const Weight& lambda) const;
  // Root index of the gradient direction alpha_j (alpha_0 for j = 0).
  int simple_root_index(int j) const { return j == 0 ? rd_->alpha0() : rd_->simple_root(j); }
  const Weight& simple_root_weight(int j) const { return rd_->root(simple_root_index(j)).weight; }
  Weight simple_reflection(int j, const Weight& lambda) const;
  Weight reflect(const AffineRoot& a, const Weight& lambda) const;
  Orbit simple_orbit(int j) const { return rd_->root(simple_root_index(j)).orbit; }
  // Order of s_j s_k; 0 when infinite (only A1 with {0, 1}).
  int braid_order(int j, int k) const;

  bool in_alcove(const Weight& lambda) const;
  AlcoveProjection project(const Weight& lambda) const;
  // R[lambda] = {a in R+ : a(lambda) < 0}, from a bounded scan.
  std::vector<AffineRoot> r_set(const Weight& lambda) const;
  // theta(lambda) = |{a in R+ : a(lambda) = -2}|.
  int theta_count(const Weight& lambda) const;
  // t[lambda] as the product of t_{a'} over R[lambda].
  TLaurent t_of_r_set(const Weight& lambda) const;

  std::vector<Weight> enumerate_Pc() const;
  std::vector<CoweightHat> enumerate_Pc_hat() const;

  // Simple reflections fixing lambda, and W_lambda(t) both by enumeration and by the product formula.
  std::vector<int> stabilizer_generators(const Weight& lambda) const;
  TLaurent stabilizer_poincare(const Weight& lambda) const;
  TLaurent stabilizer_poincare_brute(const Weight& lambda) const;
  // W_{0;omega}(t) for dominant omega.
  TLaurent finite_stabilizer_poincare(const Weight& omega) const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  int c_;
};

}  // namespace hlfusion
