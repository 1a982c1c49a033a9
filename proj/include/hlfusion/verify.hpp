#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hlfusion/pieri.hpp"

namespace hlfusion {

struct Tolerances {
  double grad = 1e-12;
  double bethe = 1e-10;
  double separation = 1e-6;
  double limit = 1e-4;       // t -> 0 distance to the closed-form nodes
  double basis = 1e-8;       // solve residuals and Phi = M on P_c
  double invariance = 1e-8;  // W-invariance and periodicity of Phi away from P_c
  double pieri = 1e-8;
  double routes = 1e-8;
  double algebra = 1e-7;     // associativity, commutativity
  double macdonald = 1e-10;
  double lemma = 1e-9;
  double integrality = 1e-6;

  // key=value, throws std::invalid_argument on an unknown key
  void set(std::string_view assignment);
  static std::vector<std::string> keys();
};

struct CheckResult {
  std::string name;
  bool pass = true;
  double residual = 0;
  double tolerance = 0;  // 0: exact
  double seconds = 0;
  std::string detail;

  void bound(double value) {
    if (!(value <= residual)) residual = value;
    if (tolerance > 0 ? !(residual < tolerance) : residual != 0) pass = false;
  }
  void fail(const std::string& what) {
    pass = false;
    if (detail.empty()) detail = what;
  }
};

// Deterministic rational test function on the weight lattice.
LatticeFunction<Rational> hashed_function(std::uint64_t seed);

// Everything the per-configuration checks share. The basis matrix is built on first use.
class Workspace {
 public:
  Workspace(std::shared_ptr<const AffineSystem> aff, const TParams& t, std::uint64_t seed = 1, Tolerances tol = {});

  const AffineSystem& affine() const { return *aff_; }
  std::shared_ptr<const AffineSystem> affine_ptr() const { return aff_; }
  const RootDatum& datum() const { return aff_->datum(); }
  const TParams& params() const { return t_; }
  const Tolerances& tol() const { return tol_; }
  std::uint64_t seed() const { return seed_; }
  const Spherical& spherical() const;
  const Pieri& pieri() const { return pieri_; }
  const BasisMatrix& basis() const;
  const StructureTable& table() const;

 private:
  std::shared_ptr<const AffineSystem> aff_;
  TParams t_;
  std::uint64_t seed_;
  Tolerances tol_;
  Pieri pieri_;
  mutable std::unique_ptr<Spherical> sph_;
  mutable std::unique_ptr<BasisMatrix> basis_;
  mutable std::unique_ptr<StructureTable> table_;
};

// Quadratic and braid relations of T_0..T_n in exact arithmetic at random lattice points.
CheckResult check_hecke_relations(const Workspace& w, int samples = 100);
// Node residuals, separation, alcove interior, Hessian; plus the t = 1e-6 limit.
CheckResult check_nodes(const Workspace& w);
CheckResult check_node_limit(const Workspace& w);
// |P_c| = |P-hat_c|, solve residuals, Phi = M on P_c, invariance of Phi at random (lambda, node) pairs.
CheckResult check_basis(const Workspace& w, int samples = 20);
// Pieri identity at every node for all lambda in P_c and (quasi)minuscule omega; U = 0 for minuscule omega.
CheckResult check_pieri(const Workspace& w);
// lr_pieri against the table, associativity and commutativity of the table.
CheckResult check_two_routes(const Workspace& w);
// t = 0 table: integers, Pieri rule at t = 0, sign pattern, su(2) truncation for A1.
CheckResult check_fusion(const Workspace& w);
// Macdonald identity, Poincare product formulas, walk lemma on Phi and on hashed functions, theta cases.
CheckResult check_identities(const Workspace& w, int samples = 20);

std::vector<CheckResult> run_suite(const Workspace& w);

}  // namespace hlfusion
