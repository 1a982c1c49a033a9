#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hlfusion {

inline constexpr int kMaxRank = 8;

// Integer point of a rank-n lattice in a fixed basis. The tag keeps weights of
// R0, weights of the dual-side system and root coefficient vectors apart.
template <class Tag>
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(int rank) : rank_(rank) { assert(rank >= 0 && rank <= kMaxRank); }
  LatticePoint(std::initializer_list<int> coords) : rank_(static_cast<int>(coords.size())) {
    assert(rank_ <= kMaxRank);
    int i = 0;
    for (int v : coords) c_[i++] = v;
  }
  static LatticePoint from(std::span<const int> coords) {
    LatticePoint p(static_cast<int>(coords.size()));
    for (int i = 0; i < p.rank_; ++i) p.c_[i] = coords[i];
    return p;
  }

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  std::span<const int> coords() const { return {c_.data(), static_cast<std::size_t>(rank_)}; }
  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + rank_}; }

  bool is_zero() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  LatticePoint& operator+=(const LatticePoint& o) {
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticePoint& operator-=(const LatticePoint& o) {
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator-(LatticePoint a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] = -a.c_[i];
    return a;
  }
  friend LatticePoint operator*(int k, LatticePoint a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] *= k;
    return a;
  }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(rank_);
    for (int i = 0; i < rank_; ++i)
      h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(c_[i]) * 2654435761u);
    return h;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << p.str(); }

 private:
  int rank_ = 0;
  std::array<int, kMaxRank> c_{};
};

struct WeightTag {};
struct CoweightHatTag {};
struct RootTag {};

// Element of P in fundamental-weight coordinates of R0.
using Weight = LatticePoint<WeightTag>;
// Element of the weight lattice of the dual-side system in its fundamental-weight coordinates.
using CoweightHat = LatticePoint<CoweightHatTag>;
// Integer coefficients in the simple-root (or simple-coroot) basis.
using RootCoeffs = LatticePoint<RootTag>;

}  // namespace hlfusion

template <class Tag>
struct std::hash<hlfusion::LatticePoint<Tag>> {
  std::size_t operator()(const hlfusion::LatticePoint<Tag>& p) const noexcept { return p.hash(); }
};
