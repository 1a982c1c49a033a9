#pragma once
// Shared test helpers: deterministic exact test functions and small brute-force evaluators.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hlfusion/heckerep.hpp"

namespace oracle {

using namespace hlfusion;

// Pseudo-random rational values keyed on the lattice point.
inline LatticeFunction<Rational> hashed_rational(std::uint64_t seed) {
  return LatticeFunction<Rational>(
      [seed](const Weight& l) {
        std::uint64_t h = seed * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull;
        for (int i = 0; i < l.rank(); ++i) {
          h ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(l[i]) + 1000) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
          h *= 0xBF58476D1CE4E5B9ull;
          h ^= h >> 31;
        }
        int num = static_cast<int>(h % 41) - 20;
        int den = 1 + static_cast<int>((h >> 20) % 7);
        return Rational(num, den);
      },
      "hashed");
}

inline Weight random_weight(std::mt19937& rng, int n, int radius) {
  std::uniform_int_distribution<int> d(-radius, radius);
  Weight w(n);
  for (int i = 0; i < n; ++i) w[i] = d(rng);
  return w;
}

// (T_{word[pos]} ... T_{word[end-1]} f)(lambda) straight from the string-sum definition.
template <class S>
S naive_T_word(const AffineSystem& a, const TParams& t, const std::vector<int>& word, std::size_t pos,
               const LatticeFunction<S>& f, const Weight& lambda) {
  if (pos == word.size()) return f(lambda);
  int j = word[pos];
  S tj = t.get<S>(a.simple_orbit(j));
  auto inner = [&](const Weight& x) { return naive_T_word(a, t, word, pos + 1, f, x); };
  S value = tj * inner(a.simple_reflection(j, lambda));
  int m = a.simple_value(j, lambda);
  const Weight& alpha = a.simple_root_weight(j);
  S string(0);
  for (int k = 1; k <= m; ++k) string -= inner(lambda - k * alpha);
  for (int k = 0; k < -m; ++k) string += inner(lambda + k * alpha);
  return value + (tj - S(1)) * string;
}

inline TLaurent t_pow(int k) { return TLaurent::t(Orbit::Long, k); }

// (1 - t^a) / (1 - t^b) products for the explicit type-A rule
struct Fraction {
  TLaurent num = 1, den = 1;
  void times(int a, int b) {
    num *= 1 - t_pow(a);
    den *= 1 - t_pow(b);
  }
  TLaurent value() const { return *num.divide(den); }
};

inline TLaurent staircase(int n) {
  Fraction f;
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) f.times(k - j + 1, k - j);
  return f.value();
}

// sl(n) affine Pieri rule for omega_r written with partitions.
inline std::map<Weight, TLaurent> type_a_pieri(int n, int c, const Weight& lambda, int r) {
  std::vector<int> part(n + 1, 0);
  for (int j = n - 1; j >= 1; --j) part[j] = part[j + 1] + lambda[j - 1];
  std::map<Weight, TLaurent> out;
  TLaurent pref = staircase(r) * staircase(n - r);
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    auto in = [&](int j) { return (mask >> (j - 1)) & 1; };
    std::vector<int> p = part;
    for (int j = 1; j <= n; ++j) p[j] += in(j);
    bool ok = p[1] - p[n] <= c;
    for (int j = 1; j < n; ++j) ok = ok && p[j] >= p[j + 1];
    if (!ok) continue;
    Weight nu(n - 1);
    for (int j = 1; j < n; ++j) nu[j - 1] = p[j] - p[j + 1];
    Fraction f;
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (in(j) && !in(k) && part[j] == part[k]) f.times(k - j + 1, k - j);
        if (!in(j) && in(k) && part[j] == part[k] + c) f.times(n + 1 - k + j, n - k + j);
      }
    out[nu] = pref * f.value();
  }
  return out;
}

// Truncated Clebsch-Gordan rule for su(2) at level c, labels are Dynkin labels.
inline int su2_fusion(int c, int a, int b, int e) {
  if ((a + b + e) % 2) return 0;
  return e >= std::abs(a - b) && e <= std::min(a + b, 2 * c - a - b) ? 1 : 0;
}

// Test configurations: both pair kinds for every non-simply-laced type.
struct Config {
  std::string type;
  PairKind pair;
};

inline std::vector<Config> small_configs() {
  std::vector<Config> out;
  for (const char* s : {"A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"}) {
    out.push_back({s, PairKind::Untwisted});
    if (!RootDatum::build(s, PairKind::Untwisted)->simply_laced()) out.push_back({s, PairKind::Twisted});
  }
  return out;
}

inline std::string describe(const Config& c) { return c.type + "/" + std::string(to_string(c.pair)); }

}  // namespace oracle
