#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlfusion/precision.hpp"
#include "hlfusion/rational.hpp"
#include "hlfusion/rootdata.hpp"

namespace hlfusion {

// Multiplicity parameters (t_short, t_long), kept both exactly and as doubles.
class TParams {
 public:
  TParams() = default;
  // Simply-laced data require t_short == t_long. allow_zero admits t = 0 for the fusion limit.
  TParams(const RootDatum& rd, Rational t_short, Rational t_long, bool allow_zero = false);
  static TParams uniform(const RootDatum& rd, Rational t, bool allow_zero = false) { return TParams(rd, t, t, allow_zero); }

  const Rational& exact(Orbit o) const { return o == Orbit::Long ? tl_ : ts_; }
  double value(Orbit o) const { return o == Orbit::Long ? tl_d_ : ts_d_; }
  const Rational& t_short() const { return ts_; }
  const Rational& t_long() const { return tl_; }
  bool is_zero() const { return ts_ == 0 && tl_ == 0; }

  template <class S>
  S get(Orbit o) const {
    if constexpr (std::is_same_v<S, Rational>)
      return exact(o);
    else if constexpr (std::is_same_v<S, RealMP> || std::is_same_v<S, ComplexMP>)
      return S(RealMP(exact(o)));
    else
      return S(value(o));
  }

 private:
  Rational ts_ = 0, tl_ = 0;
  double ts_d_ = 0, tl_d_ = 0;
};

// Laurent polynomial in t_short^(1/2), t_long^(1/2) with rational coefficients.
// Keys are doubled exponents (short, long).
class TLaurent {
 public:
  using Key = std::pair<int, int>;

  TLaurent() = default;
  TLaurent(int c) { if (c) terms_[{0, 0}] = c; }  // NOLINT(implicit)
  TLaurent(const Rational& c) { if (c != 0) terms_[{0, 0}] = c; }  // NOLINT(implicit)
  static TLaurent monomial(int ds, int dl, const Rational& coef = 1);
  // t_o itself (doubled exponent 2 in the slot of o).
  static TLaurent t(Orbit o, int power = 1);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Sum of coefficients of the t^0 term, i.e. the constant coefficient.
  Rational constant_term() const;

  TLaurent& operator+=(const TLaurent& o);
  TLaurent& operator-=(const TLaurent& o);
  TLaurent& operator*=(const TLaurent& o);
  friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
  friend TLaurent operator-(TLaurent a, const TLaurent& b) { return a -= b; }
  friend TLaurent operator-(const TLaurent& a) { return TLaurent() - a; }
  friend TLaurent operator*(TLaurent a, const TLaurent& b) { return a *= b; }
  friend bool operator==(const TLaurent&, const TLaurent&) = default;

  // Negative powers only for monomials.
  TLaurent pow(int k) const;
  // Exact quotient if divisor divides this, otherwise nullopt. Throws on zero divisor.
  std::optional<TLaurent> divide(const TLaurent& divisor) const;

  // Evaluation; odd doubled exponents need a nonnegative parameter.
  double evaluate(const TParams& t) const;
  Rational evaluate_exact(const TParams& t) const;
  RealMP evaluate_mp(const TParams& t) const;
  template <class S>
  S evaluate_as(const TParams& t) const {
    if constexpr (std::is_same_v<S, Rational>)
      return evaluate_exact(t);
    else if constexpr (std::is_same_v<S, RealMP> || std::is_same_v<S, ComplexMP>)
      return S(evaluate_mp(t));
    else
      return S(evaluate(t));
  }
  // Value at t_short = t_long = 0; throws std::domain_error if negative powers survive.
  Rational value_at_zero() const;

  // "1 + 2*t + t^2" style; uses t_s/t_l unless the datum is simply laced.
  std::string str(bool simply_laced) const;

 private:
  void normalize();
  std::map<Key, Rational> terms_;
};

// e_t(nu) = prod_{alpha > 0} t_alpha^{<nu, alpha^vee>/2}.
TLaurent e_t(const RootDatum& rd, const Weight& nu);
// e-hat_t(eta) = prod_{alpha > 0} t_alpha^{<eta, alpha-hat^vee>/2}; eta in root coordinates.
TLaurent e_hat_t(const RootDatum& rd, const RationalVec& eta);
// h_t = t_theta e_t(-alpha_0) and h-hat_t = t_{alpha_0} e-hat_t(-alpha_0^vee).
TLaurent h_t(const RootDatum& rd);
TLaurent h_hat_t(const RootDatum& rd);

// Orbit of the parameter attached to the affine simple reflection j in 0..n.
Orbit simple_orbit(const RootDatum& rd, int j);

// Generalized Poincare series sum_{w in W_J} t_w of the parabolic subgroup of W
// generated by s_j, j in J (a proper subset of 0..n), by explicit enumeration.
TLaurent poincare_series(const RootDatum& rd, const std::vector<int>& generators);
// W0(t) through the product over positive roots.
TLaurent finite_poincare_product(const RootDatum& rd);

}  // namespace hlfusion
