#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "hlfusion/lattice.hpp"
#include "hlfusion/rational.hpp"

namespace hlfusion {

// Which partner system fixes the affine extension: Untwisted pairs R0 with
// u_phi R0 (= R0 under the <phi,phi> = 2 normalization), Twisted pairs R0
// with its dual R0^vee. For simply-laced R0 the two coincide.
enum class PairKind { Untwisted, Twisted };

PairKind parse_pair_kind(std::string_view text);
std::string_view to_string(PairKind kind);

// The two W0-orbits of roots. Simply-laced systems only use Long.
enum class Orbit : int { Short = 0, Long = 1 };

using IntMatrix = std::vector<std::vector<int>>;

struct RootInfo {
  RootCoeffs coeffs;    // simple-root coordinates
  RootCoeffs coroot;    // coordinates of alpha^vee in the simple-coroot basis
  Weight weight;        // fundamental-weight coordinates
  Rational norm2;       // <alpha, alpha>
  Orbit orbit;
  int m_alpha;          // alpha^vee = m_alpha * alpha-hat
  int height;
};

// Finite root system R0 together with the admissible pair data. Roots are
// indexed 0..N-1 (positive, increasing height) and N..2N-1 (their negatives).
class RootDatum {
 public:
  // type_label like "A2", "B3", "C2", "G2", "E6". Throws std::invalid_argument.
  static std::shared_ptr<const RootDatum> build(std::string_view type_label, PairKind pair);

  const std::string& label() const { return label_; }
  char series() const { return series_; }
  int rank() const { return n_; }
  PairKind pair_kind() const { return pair_; }
  bool simply_laced() const { return simply_laced_; }

  // a_ij = <alpha_j, alpha_i^vee>; column j is alpha_j in fundamental-weight coordinates.
  const IntMatrix& cartan() const { return cartan_; }
  const RationalMatrix& gram() const { return gram_; }

  int num_positive_roots() const { return static_cast<int>(roots_.size()) / 2; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const RootInfo& root(int k) const { return roots_[k]; }
  int negate(int k) const { return k < num_positive_roots() ? k + num_positive_roots() : k - num_positive_roots(); }
  bool is_positive(int k) const { return k < num_positive_roots(); }
  // Index of the root with the given simple-root coordinates, or -1.
  int find_root(const RootCoeffs& coeffs) const;
  int simple_root(int j) const { return simple_index_[j - 1]; }  // j in 1..n

  int highest_root() const { return phi_; }
  int highest_short_root() const { return theta_; }
  // alpha_0 as a (negative) root of R0: -theta for Twisted, -phi for Untwisted.
  int alpha0() const { return alpha0_; }

  // Coefficients of -alpha_0^vee in the simple coroots, and of phi in the basis alpha-hat_j^vee.
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& hat_marks() const { return hat_marks_; }
  // h = 1 - <rho, alpha_0^vee>.
  int coxeter_number() const { return coxeter_h_; }
  int finite_coxeter_number() const { return 2 * num_positive_roots() / n_; }
  // Dynkin label of the affine Lie algebra attached to the pair, e.g. "A_2^(1)", "D_3^(2)".
  std::string affine_dynkin_label() const;

  // <lambda, alpha_k^vee> for a weight.
  int pair_coroot(const Weight& lambda, int k) const;
  // <lambda, alpha-hat_k> = <lambda, alpha_k^vee> / m_alpha.
  Rational pair_hat(const Weight& lambda, int k) const;
  // <mu, alpha_k> for mu in the dual-side weight lattice.
  Rational pair_root(const CoweightHat& mu, int k) const;

  // Symmetric form on root coordinates through the Gram matrix.
  Rational inner(const RationalVec& x, const RationalVec& y) const;
  RationalVec weight_to_root_coords(const Weight& lambda) const;
  RationalVec hat_to_root_coords(const CoweightHat& mu) const;
  RationalVec root_to_root_coords(int k) const;
  // alpha-hat and alpha-hat^vee = m_alpha * alpha in root coordinates.
  RationalVec hat_root(int k) const;
  RationalVec hat_coroot(int k) const;

  Weight zero_weight() const { return Weight(n_); }
  Weight rho() const;
  Weight fundamental_weight(int j) const;  // j in 1..n
  bool is_dominant(const Weight& lambda) const;

  Weight reflect(int k, const Weight& lambda) const;
  Weight simple_reflect(int j, const Weight& lambda) const;  // j in 1..n
  RationalVec reflect(int k, const RationalVec& x) const;

  // Full W0-orbit of a dominant weight in breadth-first order.
  std::vector<Weight> weyl_orbit(const Weight& lambda) const;
  std::vector<Weight> minuscule_weights() const;
  Weight quasi_minuscule_weight() const;
  bool is_minuscule(const Weight& omega) const;
  bool is_quasi_minuscule(const Weight& omega) const { return omega == quasi_minuscule_weight(); }

  // Orthonormal frame of V (doubles): columns are simple roots, fundamental
  // weights and fundamental weights of the dual-side system.
  const Eigen::MatrixXd& frame_roots() const { return frame_roots_; }
  const Eigen::MatrixXd& frame_weights() const { return frame_weights_; }
  const Eigen::MatrixXd& frame_hat_weights() const { return frame_hat_weights_; }
  Eigen::VectorXd euclid(const RationalVec& root_coords) const;
  Eigen::VectorXd euclid(const Weight& lambda) const { return frame_weights_ * to_eigen(lambda); }
  Eigen::VectorXd euclid(const CoweightHat& mu) const { return frame_hat_weights_ * to_eigen(mu); }
  Eigen::VectorXd euclid_root(int k) const;
  Eigen::VectorXd euclid_hat_root(int k) const;
  // rho-hat = half the sum of alpha-hat over R0^+.
  const RationalVec& rho_hat() const { return rho_hat_; }

 private:
  RootDatum() = default;
  template <class Tag>
  static Eigen::VectorXd to_eigen(const LatticePoint<Tag>& p) {
    Eigen::VectorXd v(p.rank());
    for (int i = 0; i < p.rank(); ++i) v[i] = p[i];
    return v;
  }
  void generate_roots();
  void derive_constants();

  std::string label_;
  char series_ = 'A';
  int n_ = 0;
  PairKind pair_ = PairKind::Untwisted;
  bool simply_laced_ = true;
  IntMatrix cartan_;
  RationalMatrix gram_;
  RationalMatrix gram_inv_;
  RationalMatrix cartan_inv_;
  std::vector<RootInfo> roots_;
  std::vector<int> simple_index_;
  std::unordered_map<RootCoeffs, int> root_lookup_;
  int phi_ = 0, theta_ = 0, alpha0_ = 0;
  std::vector<int> marks_, hat_marks_;
  int coxeter_h_ = 0;
  RationalVec rho_hat_;
  Eigen::MatrixXd frame_roots_, frame_weights_, frame_hat_weights_;
};

// Element of W0 as a reduced word w = s_{word[0]} s_{word[1]} ... (indices 1..n).
struct WeylElement {
  std::vector<int> word;
  int length() const { return static_cast<int>(word.size()); }
};

// Acts by s_{word[0]}( ... s_{word[l-1]}(x)).
Weight act(const RootDatum& rd, const WeylElement& w, const Weight& lambda);
RationalVec act(const RootDatum& rd, const WeylElement& w, const RationalVec& x);
// Canonical (lexicographically smallest) reduced word of the element v with
// v(rho) = image, via repeated smallest left descents.
WeylElement reduced_word_from_rho_image(const RootDatum& rd, Weight image);
// Cancels a word down to the canonical reduced word of the same element.
WeylElement reduce(const RootDatum& rd, const WeylElement& w);

// Explicit enumeration of W0 (length order), with integer matrices acting on
// fundamental-weight coordinates. Throws std::length_error for groups larger
// than max_order.
class WeylGroup {
 public:
  explicit WeylGroup(std::shared_ptr<const RootDatum> rd, std::size_t max_order = 200000);

  std::size_t order() const { return words_.size(); }
  const RootDatum& datum() const { return *rd_; }
  const WeylElement& element(std::size_t i) const { return words_[i]; }
  Weight apply(std::size_t i, const Weight& lambda) const;
  // Index of s_{word[0]} v, i.e. the element with its first letter removed; -1 for identity.
  int tail_index(std::size_t i) const { return tail_[i]; }
  int first_letter(std::size_t i) const { return words_[i].word.empty() ? 0 : words_[i].word.front(); }
  // Index of the longest element.
  std::size_t longest() const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  std::vector<WeylElement> words_;
  std::vector<int> matrices_;  // n*n per element, row-major
  std::vector<int> tail_;
};

}  // namespace hlfusion
