#include "hlfusion/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace hlfusion {

PairKind parse_pair_kind(std::string_view text) {
  if (text == "untwisted") return PairKind::Untwisted;
  if (text == "twisted") return PairKind::Twisted;
  throw std::invalid_argument("unknown pair kind '" + std::string(text) + "' (expected untwisted|twisted)");
}

std::string_view to_string(PairKind kind) { return kind == PairKind::Untwisted ? "untwisted" : "twisted"; }

namespace {

struct Diagram {
  std::vector<Rational> norms;
  std::vector<std::pair<int, int>> edges;
};

void chain(Diagram& d, int from, int to) {
  for (int i = from; i < to; ++i) d.edges.emplace_back(i, i + 1);
}

Diagram diagram_for(char series, int n) {
  Diagram d;
  auto bad = [&] {
    throw std::invalid_argument(std::string("unsupported type ") + series + std::to_string(n));
  };
  switch (series) {
    case 'A':
      if (n < 1) bad();
      d.norms.assign(n, 2);
      chain(d, 0, n - 1);
      break;
    case 'B':
      if (n < 2) bad();
      d.norms.assign(n, 2);
      d.norms[n - 1] = 1;
      chain(d, 0, n - 1);
      break;
    case 'C':
      if (n < 2) bad();
      d.norms.assign(n, 1);
      d.norms[n - 1] = 2;
      chain(d, 0, n - 1);
      break;
    case 'D':
      if (n < 4) bad();
      d.norms.assign(n, 2);
      chain(d, 0, n - 2);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) bad();
      d.norms.assign(n, 2);
      d.edges = {{0, 2}, {2, 3}, {1, 3}};
      chain(d, 3, n - 1);
      break;
    case 'F':
      if (n != 4) bad();
      d.norms = {2, 2, 1, 1};
      chain(d, 0, 3);
      break;
    case 'G':
      if (n != 2) bad();
      d.norms = {Rational(2, 3), 2};
      chain(d, 0, 1);
      break;
    default:
      bad();
  }
  return d;
}

}  // namespace

std::shared_ptr<const RootDatum> RootDatum::build(std::string_view type_label, PairKind pair) {
  std::string label;
  for (char ch : type_label)
    if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) label += static_cast<char>(std::toupper(ch));
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw std::invalid_argument("malformed type label '" + std::string(type_label) + "'");
  int n = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw std::invalid_argument("malformed type label '" + std::string(type_label) + "'");
    n = n * 10 + (label[i] - '0');
    if (n > kMaxRank) throw std::invalid_argument("rank above " + std::to_string(kMaxRank) + " not supported");
  }
  Diagram d = diagram_for(label[0], n);

  auto rd = std::shared_ptr<RootDatum>(new RootDatum());
  rd->label_ = label;
  rd->series_ = label[0];
  rd->n_ = n;
  rd->pair_ = pair;
  rd->simply_laced_ = std::all_of(d.norms.begin(), d.norms.end(), [&](const Rational& x) { return x == d.norms[0]; });
  if (rd->simply_laced_) rd->pair_ = PairKind::Untwisted;

  rd->gram_.assign(n, RationalVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) rd->gram_[i][i] = d.norms[i];
  for (auto [i, j] : d.edges) {
    Rational v = -std::max(d.norms[i], d.norms[j]) / 2;
    rd->gram_[i][j] = rd->gram_[j][i] = v;
  }
  rd->cartan_.assign(n, std::vector<int>(n, 0));
  RationalMatrix cartan_q(n, RationalVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational a = 2 * rd->gram_[i][j] / rd->gram_[i][i];
      rd->cartan_[i][j] = static_cast<int>(numerator(a));
      cartan_q[i][j] = a;
    }
  rd->gram_inv_ = invert(rd->gram_);
  rd->cartan_inv_ = invert(cartan_q);
  rd->generate_roots();
  rd->derive_constants();
  return rd;
}

void RootDatum::generate_roots() {
  const int n = n_;
  std::vector<RootCoeffs> found;
  std::unordered_set<RootCoeffs> seen;
  std::deque<RootCoeffs> queue;
  for (int j = 0; j < n; ++j) {
    RootCoeffs e(n);
    e[j] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootCoeffs b = queue.front();
    queue.pop_front();
    found.push_back(b);
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += cartan_[i][j] * b[j];
      if (p == 0) continue;
      RootCoeffs c = b;
      c[i] -= p;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<RootCoeffs> pos;
  for (const auto& b : found) {
    bool nonneg = true;
    for (int j = 0; j < n; ++j) nonneg = nonneg && b[j] >= 0;
    if (nonneg) pos.push_back(b);
  }
  auto height = [&](const RootCoeffs& b) {
    int h = 0;
    for (int j = 0; j < n; ++j) h += b[j];
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const RootCoeffs& a, const RootCoeffs& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return b < a;  // within a height, alpha_1-heavy roots first
  });

  Rational long_norm = 0;
  for (int j = 0; j < n; ++j) long_norm = std::max(long_norm, gram_[j][j]);

  auto make = [&](const RootCoeffs& b) {
    RootInfo r;
    r.coeffs = b;
    r.height = height(b);
    r.norm2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.norm2 += gram_[i][j] * b[i] * b[j];
    r.coroot = RootCoeffs(n);
    r.weight = Weight(n);
    for (int j = 0; j < n; ++j) {
      Rational c = Rational(b[j]) * gram_[j][j] / r.norm2;
      r.coroot[j] = static_cast<int>(numerator(c));
      int w = 0;
      for (int k = 0; k < n; ++k) w += cartan_[j][k] * b[k];
      r.weight[j] = w;
    }
    r.orbit = (simply_laced_ || r.norm2 == long_norm) ? Orbit::Long : Orbit::Short;
    r.m_alpha = pair_ == PairKind::Twisted ? 1 : static_cast<int>(numerator(Rational(2) / r.norm2));
    return r;
  };
  roots_.clear();
  for (const auto& b : pos) roots_.push_back(make(b));
  for (const auto& b : pos) roots_.push_back(make(-b));
  root_lookup_.clear();
  for (int k = 0; k < num_roots(); ++k) root_lookup_[roots_[k].coeffs] = k;
  simple_index_.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    RootCoeffs e(n);
    e[j] = 1;
    simple_index_[j] = root_lookup_.at(e);
  }
}

void RootDatum::derive_constants() {
  const int n = n_;
  const int np = num_positive_roots();
  phi_ = 0;
  for (int k = 0; k < np; ++k)
    if (roots_[k].height > roots_[phi_].height) phi_ = k;
  theta_ = phi_;
  if (!simply_laced_) {
    theta_ = -1;
    for (int k = 0; k < np; ++k)
      if (roots_[k].orbit == Orbit::Short && (theta_ < 0 || roots_[k].height > roots_[theta_].height)) theta_ = k;
  }
  alpha0_ = negate(pair_ == PairKind::Twisted ? theta_ : phi_);

  marks_.assign(n, 0);
  hat_marks_.assign(n, 0);
  const RootInfo& top = roots_[negate(alpha0_)];
  coxeter_h_ = 1;
  for (int j = 0; j < n; ++j) {
    marks_[j] = top.coroot[j];
    coxeter_h_ += marks_[j];
    hat_marks_[j] = roots_[phi_].coeffs[j] / roots_[simple_index_[j]].m_alpha;
  }

  rho_hat_.assign(n, Rational(0));
  for (int k = 0; k < np; ++k) {
    RationalVec h = hat_root(k);
    for (int j = 0; j < n; ++j) rho_hat_[j] += h[j] / 2;
  }

  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = to_double(gram_[i][j]);
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  frame_roots_ = llt.matrixL().transpose();
  Eigen::MatrixXd ci(n, n), hw(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ci(i, j) = to_double(cartan_inv_[i][j]);
      hw(i, j) = to_double(gram_inv_[i][j] / roots_[simple_index_[j]].m_alpha);
    }
  frame_weights_ = frame_roots_ * ci;
  frame_hat_weights_ = frame_roots_ * hw;
}

std::string RootDatum::affine_dynkin_label() const {
  std::string r = std::to_string(n_);
  if (pair_ == PairKind::Untwisted) return std::string(1, series_) + "_" + r + "^(1)";
  switch (series_) {
    case 'C': return "A_" + std::to_string(2 * n_ - 1) + "^(2)";
    case 'B': return "D_" + std::to_string(n_ + 1) + "^(2)";
    case 'F': return "E_6^(2)";
    case 'G': return "D_4^(3)";
    default: return std::string(1, series_) + "_" + r + "^(1)";
  }
}

int RootDatum::find_root(const RootCoeffs& coeffs) const {
  auto it = root_lookup_.find(coeffs);
  return it == root_lookup_.end() ? -1 : it->second;
}

int RootDatum::pair_coroot(const Weight& lambda, int k) const {
  const RootCoeffs& c = roots_[k].coroot;
  int s = 0;
  for (int j = 0; j < n_; ++j) s += lambda[j] * c[j];
  return s;
}

Rational RootDatum::pair_hat(const Weight& lambda, int k) const {
  return Rational(pair_coroot(lambda, k), roots_[k].m_alpha);
}

Rational RootDatum::pair_root(const CoweightHat& mu, int k) const {
  const RootCoeffs& c = roots_[k].coeffs;
  Rational s = 0;
  for (int j = 0; j < n_; ++j) s += Rational(mu[j] * c[j], roots_[simple_index_[j]].m_alpha);
  return s;
}

Rational RootDatum::inner(const RationalVec& x, const RationalVec& y) const {
  Rational s = 0;
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) s += x[i] * gram_[i][j] * y[j];
  }
  return s;
}

RationalVec RootDatum::weight_to_root_coords(const Weight& lambda) const {
  RationalVec r(n_, Rational(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += cartan_inv_[i][j] * lambda[j];
  return r;
}

RationalVec RootDatum::hat_to_root_coords(const CoweightHat& mu) const {
  RationalVec r(n_, Rational(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += gram_inv_[i][j] * mu[j] / roots_[simple_index_[j]].m_alpha;
  return r;
}

RationalVec RootDatum::root_to_root_coords(int k) const {
  RationalVec r(n_);
  for (int j = 0; j < n_; ++j) r[j] = roots_[k].coeffs[j];
  return r;
}

RationalVec RootDatum::hat_root(int k) const {
  RationalVec r = root_to_root_coords(k);
  Rational kappa = Rational(2) / (roots_[k].m_alpha * roots_[k].norm2);
  for (auto& x : r) x *= kappa;
  return r;
}

RationalVec RootDatum::hat_coroot(int k) const {
  RationalVec r = root_to_root_coords(k);
  for (auto& x : r) x *= roots_[k].m_alpha;
  return r;
}

Weight RootDatum::rho() const {
  Weight r(n_);
  for (int j = 0; j < n_; ++j) r[j] = 1;
  return r;
}

Weight RootDatum::fundamental_weight(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("fundamental weight index out of range");
  Weight w(n_);
  w[j - 1] = 1;
  return w;
}

bool RootDatum::is_dominant(const Weight& lambda) const {
  for (int j = 0; j < n_; ++j)
    if (lambda[j] < 0) return false;
  return true;
}

Weight RootDatum::reflect(int k, const Weight& lambda) const {
  return lambda - pair_coroot(lambda, k) * roots_[k].weight;
}

Weight RootDatum::simple_reflect(int j, const Weight& lambda) const {
  Weight r = lambda;
  int a = lambda[j - 1];
  if (a == 0) return r;
  for (int i = 0; i < n_; ++i) r[i] -= a * cartan_[i][j - 1];
  return r;
}

RationalVec RootDatum::reflect(int k, const RationalVec& x) const {
  RationalVec a = root_to_root_coords(k);
  Rational p = 2 * inner(x, a) / roots_[k].norm2;
  RationalVec r = x;
  for (int j = 0; j < n_; ++j) r[j] -= p * a[j];
  return r;
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& lambda) const {
  std::vector<Weight> out{lambda};
  std::unordered_set<Weight> seen{lambda};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int j = 1; j <= n_; ++j) {
      Weight w = simple_reflect(j, out[i]);
      if (seen.insert(w).second) out.push_back(w);
    }
  return out;
}

bool RootDatum::is_minuscule(const Weight& omega) const {
  if (!is_dominant(omega) || omega.is_zero()) return false;
  for (int k = 0; k < num_positive_roots(); ++k)
    if (pair_coroot(omega, k) > 1) return false;
  return true;
}

std::vector<Weight> RootDatum::minuscule_weights() const {
  std::vector<Weight> out;
  for (int j = 1; j <= n_; ++j)
    if (is_minuscule(fundamental_weight(j))) out.push_back(fundamental_weight(j));
  return out;
}

Weight RootDatum::quasi_minuscule_weight() const { return roots_[theta_].weight; }

Eigen::VectorXd RootDatum::euclid(const RationalVec& root_coords) const {
  Eigen::VectorXd v(n_);
  for (int j = 0; j < n_; ++j) v[j] = to_double(root_coords[j]);
  return frame_roots_ * v;
}

Eigen::VectorXd RootDatum::euclid_root(int k) const { return euclid(root_to_root_coords(k)); }

Eigen::VectorXd RootDatum::euclid_hat_root(int k) const { return euclid(hat_root(k)); }

Weight act(const RootDatum& rd, const WeylElement& w, const Weight& lambda) {
  Weight r = lambda;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = rd.simple_reflect(*it, r);
  return r;
}

RationalVec act(const RootDatum& rd, const WeylElement& w, const RationalVec& x) {
  RationalVec r = x;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = rd.reflect(rd.simple_root(*it), r);
  return r;
}

WeylElement reduced_word_from_rho_image(const RootDatum& rd, Weight image) {
  WeylElement w;
  for (;;) {
    int j = 0;
    for (int i = 0; i < rd.rank(); ++i)
      if (image[i] < 0) {
        j = i + 1;
        break;
      }
    if (j == 0) return w;
    w.word.push_back(j);
    image = rd.simple_reflect(j, image);
  }
}

WeylElement reduce(const RootDatum& rd, const WeylElement& w) {
  return reduced_word_from_rho_image(rd, act(rd, w, rd.rho()));
}

WeylGroup::WeylGroup(std::shared_ptr<const RootDatum> rd, std::size_t max_order) : rd_(std::move(rd)) {
  const int n = rd_->rank();
  std::vector<Weight> images{rd_->rho()};
  std::unordered_set<Weight> seen{rd_->rho()};
  for (std::size_t i = 0; i < images.size(); ++i)
    for (int j = 1; j <= n; ++j) {
      Weight w = rd_->simple_reflect(j, images[i]);
      if (!seen.insert(w).second) continue;
      images.push_back(w);
      if (images.size() > max_order)
        throw std::length_error("Weyl group of " + rd_->label() + " exceeds " + std::to_string(max_order) + " elements");
    }
  std::vector<std::pair<WeylElement, Weight>> elems;
  elems.reserve(images.size());
  for (const auto& im : images) elems.emplace_back(reduced_word_from_rho_image(*rd_, im), im);
  std::sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) {
    if (a.first.length() != b.first.length()) return a.first.length() < b.first.length();
    return a.first.word < b.first.word;
  });
  std::unordered_map<Weight, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    words_.push_back(elems[i].first);
    index[elems[i].second] = static_cast<int>(i);
  }
  tail_.assign(words_.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (!words_[i].word.empty()) tail_[i] = index.at(rd_->simple_reflect(words_[i].word.front(), elems[i].second));
  matrices_.assign(words_.size() * n * n, 0);
  for (std::size_t i = 0; i < words_.size(); ++i)
    for (int c = 0; c < n; ++c) {
      Weight col = act(*rd_, words_[i], rd_->fundamental_weight(c + 1));
      for (int r = 0; r < n; ++r) matrices_[i * n * n + r * n + c] = col[r];
    }
}

Weight WeylGroup::apply(std::size_t i, const Weight& lambda) const {
  const int n = rd_->rank();
  Weight r(n);
  const int* m = &matrices_[i * n * n];
  for (int a = 0; a < n; ++a) {
    int s = 0;
    for (int b = 0; b < n; ++b) s += m[a * n + b] * lambda[b];
    r[a] = s;
  }
  return r;
}

std::size_t WeylGroup::longest() const { return words_.size() - 1; }

}  // namespace hlfusion
