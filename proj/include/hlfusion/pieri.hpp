#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hlfusion/heckerep.hpp"
#include "hlfusion/spherical.hpp"

namespace hlfusion {

using Coefficients = std::vector<std::pair<Weight, TLaurent>>;

// Affine Pieri coefficients at level c, exact in t.
class Pieri {
 public:
  explicit Pieri(std::shared_ptr<const AffineSystem> aff);

  const AffineSystem& affine() const { return *aff_; }
  const RootDatum& datum() const { return aff_->datum(); }

  // Nonzero minuscule weights and the quasi-minuscule weight.
  std::vector<Weight> pieri_weights() const;
  bool is_pieri_weight(const Weight& omega) const;
  // Union of the W0-orbits of the weights above.
  const std::vector<Weight>& orbit_set() const { return star_; }
  bool in_theta_orbit(const Weight& nu) const;

  TLaurent d_coef(const Weight& lambda, const Weight& nu) const;
  TLaurent U_coef(const Weight& lambda, const Weight& omega) const;
  // Same with the d-sum over the whole orbit (no w_{lambda+nu} lambda = lambda filter).
  TLaurent U_coef_unfiltered(const Weight& lambda, const Weight& omega) const;
  TLaurent V_coef(const Weight& lambda, const Weight& nu) const;
  // W_lambda(t) / (W_lambda cap W_{lambda+nu})(t) from enumerated parabolic subgroups.
  TLaurent V_quotient(const Weight& lambda, const Weight& nu) const;
  // Sum of t[lambda + eta] over eta in W0 omega with (lambda + eta)_+ = lambda + nu.
  TLaurent V_orbit_sum(const Weight& lambda, const Weight& nu, const Weight& omega) const;

  // |{j in 0..n : a_j(lambda) = 0, alpha_j in W0 omega}|.
  int N(const Weight& lambda, const Weight& omega) const;

  // c^{nu}_{lambda, omega}(t) for all nonzero nu, sorted by nu.
  Coefficients lr_pieri(const Weight& lambda, const Weight& omega) const;
  std::vector<std::pair<Weight, long>> fusion_pieri(const Weight& lambda, const Weight& omega) const;

  // w_mu applied to lambda (affine action).
  Weight walk_image(const Weight& mu, const Weight& lambda) const;
  // Case split of the theta lemma for lambda in P_c, nu in orbit_set().
  bool theta_classification_holds(const Weight& lambda, const Weight& nu) const;

  // Twisted pair, R0 not simply laced and c a multiple of <phi,phi>/<theta,theta>.
  bool exceptional_twisted() const;

  // (T_{w_{lambda+nu}} f)((lambda+nu)_+) - f(lambda+nu) + d (1 - t_theta^{-1}) f(lambda).
  template <class S>
  S iqm_defect(const HeckeRep<S>& rep, const LatticeFunction<S>& f, const Weight& lambda, const Weight& nu) const {
    TLaurent d = d_coef(lambda, nu) * (1 - t_theta_inv());
    S lhs = rep.alcove_walk_value(f, lambda + nu);
    return lhs - f(lambda + nu) + d.evaluate_as<S>(rep.params()) * f(lambda);
  }
  // Right-hand side of the L_omega action on a W-invariant f at lambda.
  template <class S>
  S L_omega(const TParams& t, const LatticeFunction<S>& f, const Weight& lambda, const Weight& omega) const {
    S s(0);
    for (const auto& nu : datum().weyl_orbit(omega)) {
      AlcoveProjection p = aff_->project(lambda + nu);
      TLaurent d = d_coef(lambda, nu) * (1 - t_theta_inv());
      s += p.t_weight.evaluate_as<S>(t) * f(lambda + nu) + d.evaluate_as<S>(t) * f(lambda);
    }
    return s;
  }

 private:
  TLaurent t_theta_inv() const;
  int root_of_weight(const Weight& nu) const;

  std::shared_ptr<const AffineSystem> aff_;
  std::vector<Weight> star_;
  std::vector<Weight> theta_orbit_;
};

// max over nodes of |m_omega M_lambda - U M_lambda - sum_nu V M_{lambda+nu}|.
double pieri_identity_check(const Pieri& p, const Spherical& sph, const BasisMatrix& b, const Weight& lambda,
                            const Weight& omega);

struct StructureTable {
  int level = 0;
  bool fusion = false;  // t = 0
  TParams t;
  std::vector<Weight> weights;
  std::vector<Complex> coef;       // index (lambda * n + mu) * n + nu
  std::vector<long> integers;      // fusion tables only
  double residual = 0;             // max relative residual of the solves
  double rounding = 0;             // max |float - round| (fusion)
  bool exceptional_twisted = false;

  int size() const { return static_cast<int>(weights.size()); }
  int index(const Weight& w) const;
  const Complex& operator()(int l, int m, int n) const { return coef[(std::size_t(l) * size() + m) * size() + n]; }
  long integer(int l, int m, int n) const { return integers[(std::size_t(l) * size() + m) * size() + n]; }
};

StructureTable structure_constants(const BasisMatrix& b, int threads = 0);
StructureTable structure_constants(const Spherical& sph, std::shared_ptr<const AffineSystem> aff, const TParams& t);
// t = 0 table; throws std::runtime_error when a coefficient is not within 1e-6 of an integer.
StructureTable fusion_ring(const Spherical& sph, std::shared_ptr<const AffineSystem> aff);

double commutativity_defect(const StructureTable& s);
double associativity_defect(const StructureTable& s);

}  // namespace hlfusion
