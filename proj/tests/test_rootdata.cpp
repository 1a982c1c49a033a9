#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hlfusion/rootdata.hpp"

using namespace hlfusion;

namespace {

const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                                            "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

int classical_positive_count(const std::string& label) {
  int n = std::stoi(label.substr(1));
  switch (label[0]) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

Rational pairing(const RootDatum& rd, int b, int a) {
  auto x = rd.root_to_root_coords(b), y = rd.root_to_root_coords(a);
  return 2 * rd.inner(x, y) / rd.inner(y, y);
}

}  // namespace

TEST_CASE("positive root counts and normalization") {
  for (const auto& t : kAllTypes) {
    auto rd = RootDatum::build(t, PairKind::Untwisted);
    CAPTURE(t);
    CHECK(rd->num_positive_roots() == classical_positive_count(t));
    auto phi = rd->root_to_root_coords(rd->highest_root());
    CHECK(rd->inner(phi, phi) == 2);
    CHECK(rd->num_positive_roots() * 2 == rd->rank() * rd->finite_coxeter_number());
    for (int j = 1; j <= rd->rank(); ++j) CHECK(rd->pair_coroot(rd->rho(), rd->simple_root(j)) == 1);
  }
}

TEST_CASE("G2 short simple root and m_theta") {
  auto rd = RootDatum::build("G2", PairKind::Untwisted);
  auto a1 = rd->root_to_root_coords(rd->simple_root(1));
  CHECK(rd->inner(a1, a1) == Rational(2, 3));
  CHECK(rd->root(rd->highest_short_root()).m_alpha == 3);
  CHECK(rd->root(rd->highest_root()).m_alpha == 1);
  CHECK(rd->coxeter_number() == 4);
  auto tw = RootDatum::build("G2", PairKind::Twisted);
  CHECK(tw->coxeter_number() == 6);
}

TEST_CASE("reflection closure") {
  for (const auto& t : kAllTypes) {
    auto rd = RootDatum::build(t, PairKind::Untwisted);
    for (int b = 0; b < rd->num_roots(); ++b)
      for (int a = 0; a < rd->num_positive_roots(); ++a) {
        auto img = rd->reflect(a, rd->root_to_root_coords(b));
        RootCoeffs c(rd->rank());
        for (int j = 0; j < rd->rank(); ++j) {
          REQUIRE(denominator(img[j]) == 1);
          c[j] = static_cast<int>(numerator(img[j]));
        }
        CHECK(rd->find_root(c) >= 0);
      }
  }
}

TEST_CASE("m_alpha takes the values 1 and m_theta") {
  for (const auto& t : kAllTypes)
    for (auto pk : {PairKind::Untwisted, PairKind::Twisted}) {
      auto rd = RootDatum::build(t, pk);
      std::set<int> ms;
      for (int k = 0; k < rd->num_roots(); ++k) ms.insert(rd->root(k).m_alpha);
      std::set<int> expect{1, rd->root(rd->highest_short_root()).m_alpha};
      CHECK(ms == expect);
      if (pk == PairKind::Twisted) CHECK(ms == std::set<int>{1});
    }
}

TEST_CASE("alpha_0 choice and Coxeter numbers") {
  std::map<std::string, std::pair<int, int>> h = {
      {"A1", {2, 2}}, {"A2", {3, 3}}, {"A3", {4, 4}}, {"B2", {3, 4}}, {"B3", {5, 6}}, {"B4", {7, 8}},
      {"C2", {3, 4}}, {"C3", {4, 6}}, {"C4", {5, 8}}, {"D4", {6, 6}}, {"D5", {8, 8}}, {"E6", {12, 12}},
      {"E7", {18, 18}}, {"E8", {30, 30}}, {"F4", {9, 12}}, {"G2", {4, 6}}};
  for (auto& [t, hh] : h) {
    CAPTURE(t);
    auto u = RootDatum::build(t, PairKind::Untwisted);
    auto w = RootDatum::build(t, PairKind::Twisted);
    CHECK(u->coxeter_number() == hh.first);
    CHECK(w->coxeter_number() == hh.second);
    CHECK(u->alpha0() == u->negate(u->highest_root()));
    CHECK(w->alpha0() == w->negate(w->highest_short_root()));
  }
  CHECK(RootDatum::build("C3", PairKind::Twisted)->affine_dynkin_label() == "A_5^(2)");
  CHECK(RootDatum::build("B3", PairKind::Twisted)->affine_dynkin_label() == "D_4^(2)");
  CHECK(RootDatum::build("F4", PairKind::Twisted)->affine_dynkin_label() == "E_6^(2)");
  CHECK(RootDatum::build("G2", PairKind::Twisted)->affine_dynkin_label() == "D_4^(3)");
  CHECK(RootDatum::build("E7", PairKind::Twisted)->affine_dynkin_label() == "E_7^(1)");
}

TEST_CASE("hat marks expand phi") {
  for (const auto& t : kAllTypes)
    for (auto pk : {PairKind::Untwisted, PairKind::Twisted}) {
      auto rd = RootDatum::build(t, pk);
      RationalVec sum(rd->rank(), Rational(0));
      for (int j = 1; j <= rd->rank(); ++j) {
        auto hc = rd->hat_coroot(rd->simple_root(j));
        for (int i = 0; i < rd->rank(); ++i) sum[i] += rd->hat_marks()[j - 1] * hc[i];
      }
      CHECK(sum == rd->root_to_root_coords(rd->highest_root()));
    }
}

TEST_CASE("Schur identity with random orbit-constant t") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (const auto& t : {"A1", "A2", "B2", "C3", "G2", "D4", "F4", "B3"}) {
    auto rd = RootDatum::build(t, PairKind::Untwisted);
    for (int rep = 0; rep < 20; ++rep) {
      Rational ts(num(rng), den(rng)), tl(num(rng), den(rng));
      auto tv = [&](int a) { return rd->root(a).orbit == Orbit::Long ? tl : ts; };
      Rational rhs = 0;
      for (int a = 0; a < rd->num_roots(); ++a) rhs += tv(a);
      rhs *= Rational(2, rd->rank());
      for (int b = 0; b < rd->num_roots(); ++b) {
        Rational lhs = 0;
        for (int a = 0; a < rd->num_positive_roots(); ++a) lhs += tv(a) * pairing(*rd, b, a) * pairing(*rd, a, b);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("minuscule and quasi-minuscule weights") {
  auto a2 = RootDatum::build("A2", PairKind::Untwisted);
  CHECK(a2->minuscule_weights() == std::vector<Weight>{Weight{1, 0}, Weight{0, 1}});
  CHECK(a2->quasi_minuscule_weight() == Weight{1, 1});
  CHECK(RootDatum::build("E8", PairKind::Untwisted)->minuscule_weights().empty());
  CHECK(RootDatum::build("E6", PairKind::Untwisted)->minuscule_weights().size() == 2);
  CHECK(RootDatum::build("E7", PairKind::Untwisted)->minuscule_weights().size() == 1);
  CHECK(RootDatum::build("B3", PairKind::Untwisted)->minuscule_weights() == std::vector<Weight>{Weight{0, 0, 1}});
  CHECK(RootDatum::build("C3", PairKind::Untwisted)->minuscule_weights() == std::vector<Weight>{Weight{1, 0, 0}});
  // theta for B3 is omega_1 (short highest root), for C3 it is omega_2
  CHECK(RootDatum::build("B3", PairKind::Untwisted)->quasi_minuscule_weight() == Weight{1, 0, 0});
  CHECK(RootDatum::build("C3", PairKind::Untwisted)->quasi_minuscule_weight() == Weight{0, 1, 0});
}

TEST_CASE("Weyl orbits and group") {
  auto a1 = RootDatum::build("A1", PairKind::Untwisted);
  CHECK(a1->weyl_orbit(Weight{1}).size() == 2);
  auto a2 = RootDatum::build("A2", PairKind::Untwisted);
  CHECK(a2->weyl_orbit(Weight{1, 0}).size() == 3);
  CHECK(a2->weyl_orbit(Weight{0, 0}).size() == 1);
  WeylElement w{{1, 2, 1, 2, 1, 2}};
  CHECK(reduce(*a2, w).word.empty());

  for (const auto& t : {"A2", "B2", "G2", "A3", "B3", "C3", "D4"}) {
    auto rd = RootDatum::build(t, PairKind::Untwisted);
    WeylGroup g(rd);
    const int n = rd->rank();
    auto w0 = g.longest();
    CHECK(static_cast<int>(g.element(w0).length()) == rd->num_positive_roots());
    for (std::size_t i = 0; i < g.order(); ++i) {
      // length = number of positive roots sent negative by w^{-1}... check via reduced rho image
      auto img = g.apply(i, rd->rho());
      CHECK(reduced_word_from_rho_image(*rd, img).word == g.element(i).word);
      if (g.tail_index(i) >= 0) CHECK(g.element(g.tail_index(i)).length() + 1 == g.element(i).length());
    }
    // orbit-stabilizer for dominant weights of small height
    std::vector<Weight> dom;
    std::vector<int> c(n, 0);
    for (int total = 0; total <= 3; ++total) {
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
          c[i] = left;
          dom.push_back(Weight::from(c));
          return;
        }
        for (int v = 0; v <= left; ++v) {
          c[i] = v;
          rec(i + 1, left - v);
        }
      };
      rec(0, total);
    }
    for (const auto& lam : dom) {
      std::size_t stab = 0;
      for (std::size_t i = 0; i < g.order(); ++i) stab += g.apply(i, lam) == lam;
      CHECK(rd->weyl_orbit(lam).size() * stab == g.order());
      auto neg = g.apply(w0, lam);
      for (int j = 0; j < n; ++j) CHECK(neg[j] <= 0);
    }
  }
}

TEST_CASE("invalid labels") {
  CHECK_THROWS_AS(RootDatum::build("Q3", PairKind::Untwisted), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build("D3", PairKind::Untwisted), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build("E9", PairKind::Untwisted), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build("B1", PairKind::Untwisted), std::invalid_argument);
  CHECK_THROWS_AS(WeylGroup(RootDatum::build("E8", PairKind::Untwisted)), std::length_error);
}
