#include "hlfusion/tring.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hlfusion {

namespace {

Rational rational_pow(const Rational& q, int k) {
  if (k < 0) {
    if (q == 0) throw std::domain_error("negative power of zero");
    return rational_pow(Rational(1) / q, -k);
  }
  Rational r = 1, b = q;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

Rational rational_sqrt(const Rational& q) {
  using boost::multiprecision::cpp_int;
  if (q < 0) throw std::domain_error("half-integral power of a negative parameter");
  cpp_int num = numerator(q), den = denominator(q);
  cpp_int rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) throw std::domain_error("half-integral power is irrational for " + q.str());
  return Rational(rn, rd);
}

Rational half_power(const Rational& q, int doubled) {
  if (doubled % 2 == 0) return rational_pow(q, doubled / 2);
  return rational_pow(rational_sqrt(q), doubled);
}

double half_power(double x, int doubled) {
  if (doubled % 2 == 0) {
    if (x == 0 && doubled < 0) throw std::domain_error("negative power of zero");
    int k = doubled / 2;
    double r = 1;
    double b = k < 0 ? 1.0 / x : x;
    for (int i = 0; i < std::abs(k); ++i) r *= b;
    return r;
  }
  if (x < 0) throw std::domain_error("half-integral power of a negative parameter");
  return std::pow(x, doubled / 2.0);
}

RealMP half_power(const RealMP& x, int doubled) {
  if (doubled % 2 == 0) {
    if (x == 0 && doubled < 0) throw std::domain_error("negative power of zero");
    return boost::multiprecision::pow(x, doubled / 2);
  }
  if (x < 0) throw std::domain_error("half-integral power of a negative parameter");
  return boost::multiprecision::pow(boost::multiprecision::sqrt(x), doubled);
}

std::string power_str(const char* name, int doubled) {
  std::string s = name;
  if (doubled == 2) return s;
  if (doubled % 2 == 0) return s + "^" + (doubled < 0 ? "(" + std::to_string(doubled / 2) + ")" : std::to_string(doubled / 2));
  return s + "^(" + std::to_string(doubled) + "/2)";
}

}  // namespace

TParams::TParams(const RootDatum& rd, Rational t_short, Rational t_long, bool allow_zero)
    : ts_(std::move(t_short)), tl_(std::move(t_long)) {
  if (rd.simply_laced() && ts_ != tl_)
    throw std::invalid_argument("simply-laced type needs t_short == t_long");
  for (const Rational* q : {&ts_, &tl_}) {
    if (*q <= -1 || *q >= 1) throw std::invalid_argument("t must lie in (-1, 1), got " + q->str());
    if (*q == 0 && !allow_zero) throw std::invalid_argument("t = 0 is only allowed in the fusion limit");
  }
  ts_d_ = to_double(ts_);
  tl_d_ = to_double(tl_);
}

TLaurent TLaurent::monomial(int ds, int dl, const Rational& coef) {
  TLaurent r;
  if (coef != 0) r.terms_[{ds, dl}] = coef;
  return r;
}

TLaurent TLaurent::t(Orbit o, int power) {
  return o == Orbit::Long ? monomial(0, 2 * power) : monomial(2 * power, 0);
}

Rational TLaurent::constant_term() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TLaurent::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

TLaurent& TLaurent::operator+=(const TLaurent& o) {
  for (const auto& [k, v] : o.terms_) terms_[k] += v;
  normalize();
  return *this;
}

TLaurent& TLaurent::operator-=(const TLaurent& o) {
  for (const auto& [k, v] : o.terms_) terms_[k] -= v;
  normalize();
  return *this;
}

TLaurent& TLaurent::operator*=(const TLaurent& o) {
  std::map<Key, Rational> out;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) out[{a.first + b.first, a.second + b.second}] += x * y;
  terms_ = std::move(out);
  normalize();
  return *this;
}

TLaurent TLaurent::pow(int k) const {
  if (k < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
    auto [key, c] = *terms_.begin();
    return monomial(-key.first * -k, -key.second * -k, rational_pow(c, k));
  }
  TLaurent r = 1, b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::optional<TLaurent> TLaurent::divide(const TLaurent& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (is_zero()) return TLaurent();
  auto mins = [](const TLaurent& p) {
    Key m = p.terms_.begin()->first;
    for (const auto& [k, v] : p.terms_) {
      m.first = std::min(m.first, k.first);
      m.second = std::min(m.second, k.second);
    }
    return m;
  };
  Key fm = mins(*this), gm = mins(divisor);
  TLaurent f = *this * monomial(-fm.first, -fm.second);
  TLaurent g = divisor * monomial(-gm.first, -gm.second);
  auto [glead, gcoef] = *g.terms_.rbegin();
  TLaurent q;
  while (!f.is_zero()) {
    auto [flead, fcoef] = *f.terms_.rbegin();
    int ds = flead.first - glead.first, dl = flead.second - glead.second;
    if (ds < 0 || dl < 0) return std::nullopt;
    TLaurent step = monomial(ds, dl, fcoef / gcoef);
    q += step;
    f -= step * g;
  }
  return q * monomial(fm.first - gm.first, fm.second - gm.second);
}

double TLaurent::evaluate(const TParams& t) const {
  double s = 0;
  for (const auto& [k, v] : terms_)
    s += to_double(v) * half_power(t.value(Orbit::Short), k.first) * half_power(t.value(Orbit::Long), k.second);
  return s;
}

Rational TLaurent::evaluate_exact(const TParams& t) const {
  Rational s = 0;
  for (const auto& [k, v] : terms_)
    s += v * half_power(t.exact(Orbit::Short), k.first) * half_power(t.exact(Orbit::Long), k.second);
  return s;
}

RealMP TLaurent::evaluate_mp(const TParams& t) const {
  RealMP s = 0;
  RealMP ts(t.exact(Orbit::Short)), tl(t.exact(Orbit::Long));
  for (const auto& [k, v] : terms_) s += RealMP(v) * half_power(ts, k.first) * half_power(tl, k.second);
  return s;
}

Rational TLaurent::value_at_zero() const {
  for (const auto& [k, v] : terms_)
    if (k.first < 0 || k.second < 0) throw std::domain_error("negative powers of t do not cancel: " + str(false));
  return constant_term();
}

std::string TLaurent::str(bool simply_laced) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational c = v;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::string mono;
    auto add = [&](const char* name, int d) {
      if (d == 0) return;
      if (!mono.empty()) mono += "*";
      mono += power_str(name, d);
    };
    add(simply_laced ? "t" : "t_s", k.first);
    add(simply_laced ? "t" : "t_l", k.second);
    if (mono.empty())
      os << c.str();
    else if (c == 1)
      os << mono;
    else
      os << c.str() << "*" << mono;
  }
  return os.str();
}

TLaurent e_t(const RootDatum& rd, const Weight& nu) {
  int ds = 0, dl = 0;
  for (int k = 0; k < rd.num_positive_roots(); ++k) {
    int p = rd.pair_coroot(nu, k);
    (rd.root(k).orbit == Orbit::Long ? dl : ds) += p;
  }
  return TLaurent::monomial(ds, dl);
}

TLaurent e_hat_t(const RootDatum& rd, const RationalVec& eta) {
  Rational ds = 0, dl = 0;
  for (int k = 0; k < rd.num_positive_roots(); ++k) {
    Rational p = rd.inner(eta, rd.hat_coroot(k));
    (rd.root(k).orbit == Orbit::Long ? dl : ds) += p;
  }
  if (denominator(ds) != 1 || denominator(dl) != 1) throw std::domain_error("e-hat_t argument outside the hat root lattice");
  return TLaurent::monomial(static_cast<int>(numerator(ds)), static_cast<int>(numerator(dl)));
}

TLaurent h_t(const RootDatum& rd) {
  int minus_a0 = rd.negate(rd.alpha0());
  return TLaurent::t(rd.root(rd.highest_short_root()).orbit) * e_t(rd, rd.root(minus_a0).weight);
}

TLaurent h_hat_t(const RootDatum& rd) {
  int minus_a0 = rd.negate(rd.alpha0());
  const RootInfo& r = rd.root(minus_a0);
  RationalVec cor = rd.root_to_root_coords(minus_a0);
  for (auto& x : cor) x *= Rational(2) / r.norm2;
  return TLaurent::t(rd.root(rd.alpha0()).orbit) * e_hat_t(rd, cor);
}

Orbit simple_orbit(const RootDatum& rd, int j) {
  return rd.root(j == 0 ? rd.alpha0() : rd.simple_root(j)).orbit;
}

TLaurent poincare_series(const RootDatum& rd, const std::vector<int>& generators) {
  const int n = rd.rank();
  std::vector<bool> used(n + 1, false);
  for (int j : generators) {
    if (j < 0 || j > n) throw std::invalid_argument("generator index out of range");
    used[j] = true;
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
    throw std::invalid_argument("all affine simple reflections generate an infinite group");
  // Linear parts act faithfully on a finite parabolic subgroup, and rho is regular for every root.
  std::unordered_map<Weight, TLaurent> tw;
  std::vector<Weight> layer{rd.rho()};
  tw.emplace(rd.rho(), TLaurent(1));
  TLaurent sum = 1;
  while (!layer.empty()) {
    std::vector<Weight> next;
    for (const auto& x : layer)
      for (int j = 0; j <= n; ++j) {
        if (!used[j]) continue;
        Weight y = rd.reflect(j == 0 ? rd.alpha0() : rd.simple_root(j), x);
        if (tw.count(y)) continue;
        TLaurent v = tw.at(x) * TLaurent::t(simple_orbit(rd, j));
        sum += v;
        tw.emplace(y, std::move(v));
        next.push_back(y);
      }
    layer = std::move(next);
  }
  return sum;
}

TLaurent finite_poincare_product(const RootDatum& rd) {
  TLaurent num = 1, den = 1;
  for (int k = 0; k < rd.num_positive_roots(); ++k) {
    TLaurent e = e_t(rd, rd.root(k).weight);
    num *= TLaurent(1) - TLaurent::t(rd.root(k).orbit) * e;
    den *= TLaurent(1) - e;
  }
  auto q = num.divide(den);
  if (!q) throw std::logic_error("product formula for W0(t) is not a polynomial");
  return *q;
}

}  // namespace hlfusion
