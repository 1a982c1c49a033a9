#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "hlfusion/affine.hpp"
#include "hlfusion/precision.hpp"

namespace hlfusion {

using Complex = std::complex<double>;

// Lazily evaluated function on P. Copies share the evaluator and its memo;
// the memo is not synchronized, so a function (and everything built from it)
// belongs to one thread at a time.
template <class S>
class LatticeFunction {
 public:
  using Evaluator = std::function<S(const Weight&)>;

  LatticeFunction() = default;
  LatticeFunction(Evaluator eval, std::string tag)
      : node_(std::make_shared<Node>(Node{std::move(eval), std::move(tag), {}})) {}

  static LatticeFunction constant(S value) {
    return LatticeFunction([value](const Weight&) { return value; }, "constant");
  }
  static LatticeFunction delta(const Weight& at, S value = S(1)) {
    return LatticeFunction([at, value](const Weight& l) { return l == at ? value : S(0); }, "delta");
  }

  S operator()(const Weight& lambda) const {
    auto& memo = node_->memo;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    S v = node_->eval(lambda);
    memo.emplace(lambda, v);
    return v;
  }
  const std::string& tag() const { return node_->tag; }
  std::size_t cache_size() const { return node_->memo.size(); }
  explicit operator bool() const { return static_cast<bool>(node_); }

  friend LatticeFunction operator+(const LatticeFunction& f, const LatticeFunction& g) {
    return LatticeFunction([f, g](const Weight& l) { return f(l) + g(l); }, "combination");
  }
  friend LatticeFunction operator-(const LatticeFunction& f, const LatticeFunction& g) {
    return LatticeFunction([f, g](const Weight& l) { return f(l) - g(l); }, "combination");
  }
  friend LatticeFunction operator*(S a, const LatticeFunction& f) {
    return LatticeFunction([a, f](const Weight& l) { return a * f(l); }, "combination");
  }

 private:
  struct Node {
    Evaluator eval;
    std::string tag;
    std::unordered_map<Weight, S> memo;
  };
  std::shared_ptr<Node> node_;
};

// e^{i xi}(lambda) = exp(i <lambda, xi>), xi in the orthonormal frame of the datum.
LatticeFunction<Complex> plane_wave(const RootDatum& rd, const Eigen::VectorXd& xi);
// Same in extended precision, from the pairings p_i = <omega_i, xi>.
LatticeFunction<ComplexMP> plane_wave(const std::vector<RealMP>& weight_pairings);

// Integral-reflection action of the affine Hecke algebra on functions on P at
// level c, with S = Complex (double parameters) or Rational (exact parameters).
template <class S>
class HeckeRep {
 public:
  HeckeRep(std::shared_ptr<const AffineSystem> aff, TParams t) : aff_(std::move(aff)), t_(std::move(t)) {}

  const AffineSystem& affine() const { return *aff_; }
  const TParams& params() const { return t_; }
  S t_simple(int j) const { return t_.get<S>(aff_->simple_orbit(j)); }

  // (J_j f)(lambda): minus the partial root string below lambda, or the string above it.
  S J(int j, const LatticeFunction<S>& f, const Weight& lambda) const {
    int m = aff_->simple_value(j, lambda);
    const Weight& a = aff_->simple_root_weight(j);
    S s(0);
    if (m > 0) {
      Weight p = lambda;
      for (int k = 1; k <= m; ++k) {
        p -= a;
        s -= f(p);
      }
    } else if (m < 0) {
      Weight p = lambda;
      for (int k = 0; k < -m; ++k) {
        s += f(p);
        p += a;
      }
    }
    return s;
  }

  LatticeFunction<S> T(int j, const LatticeFunction<S>& f) const {
    auto aff = aff_;
    S tj = t_simple(j);
    HeckeRep self = *this;
    return LatticeFunction<S>(
        [self, aff, j, tj, f](const Weight& l) {
          return tj * f(aff->simple_reflection(j, l)) + (tj - S(1)) * self.J(j, f, l);
        },
        "T" + std::to_string(j));
  }

  // T_{word[0]} T_{word[1]} ... T_{word[l-1]} f.
  LatticeFunction<S> T_word(const std::vector<int>& word, const LatticeFunction<S>& f) const {
    LatticeFunction<S> g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = T(*it, g);
    return g;
  }

  // (Jf)(lambda) = t[lambda]^{-1} (T_{w_lambda} f)(lambda_+). Operator chains
  // for the alcove walks are shared through a prefix trie so that nearby
  // points reuse each other's evaluations.
  LatticeFunction<S> intertwiner(const LatticeFunction<S>& f) const {
    auto trie = std::make_shared<std::map<std::vector<int>, LatticeFunction<S>>>();
    HeckeRep self = *this;
    return LatticeFunction<S>(
        [self, trie, f](const Weight& l) {
          AlcoveProjection p = self.aff_->project(l);
          LatticeFunction<S> g = self.walk(*trie, f, p.steps);
          return g(p.lambda_plus) / p.t_weight.template evaluate_as<S>(self.t_);
        },
        "intertwiner");
  }

  // (T_{w_mu} f)(mu_+) without the t[mu] normalization.
  S alcove_walk_value(const LatticeFunction<S>& f, const Weight& mu) const {
    AlcoveProjection p = aff_->project(mu);
    return T_word(p.word, f)(p.lambda_plus);
  }

 private:
  LatticeFunction<S> walk(std::map<std::vector<int>, LatticeFunction<S>>& trie, const LatticeFunction<S>& f,
                          const std::vector<int>& steps) const {
    if (steps.empty()) return f;
    if (auto it = trie.find(steps); it != trie.end()) return it->second;
    std::vector<int> prefix(steps.begin(), steps.end() - 1);
    LatticeFunction<S> g = T(steps.back(), walk(trie, f, prefix));
    trie.emplace(steps, g);
    return g;
  }

  std::shared_ptr<const AffineSystem> aff_;
  TParams t_;
};

// sum_{v in W0} T_v wave, built along the tails of the reduced words.
template <class S>
LatticeFunction<S> symmetrize(const HeckeRep<S>& rep, const WeylGroup& w0, const LatticeFunction<S>& wave) {
  std::vector<LatticeFunction<S>> terms(w0.order());
  terms[0] = wave;
  for (std::size_t v = 1; v < w0.order(); ++v) terms[v] = rep.T(w0.first_letter(v), terms[w0.tail_index(v)]);
  return LatticeFunction<S>(
      [terms](const Weight& l) {
        S s(0);
        for (const auto& f : terms) s += f(l);
        return s;
      },
      "phi");
}

// phi_xi = sum_{v in W0} T_v e^{i xi}, Phi_xi = J phi_xi.
LatticeFunction<Complex> phi_xi(const HeckeRep<Complex>& rep, const WeylGroup& w0, const Eigen::VectorXd& xi);
LatticeFunction<Complex> Phi_xi(const HeckeRep<Complex>& rep, const WeylGroup& w0, const Eigen::VectorXd& xi);

}  // namespace hlfusion
