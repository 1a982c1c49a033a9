#include "doctest.h"
#include "oracles.hpp"

using namespace hlfusion;
using oracle::hashed_rational;

namespace {

std::vector<std::pair<Rational, Rational>> parameter_grid(const RootDatum& rd) {
  std::vector<Rational> vals = {Rational(1, 3), Rational(-1, 2), Rational(2, 5)};
  std::vector<std::pair<Rational, Rational>> out;
  for (auto& a : vals)
    for (auto& b : vals)
      if (!rd.simply_laced() || a == b) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("explicit action on small strings") {
  auto rd = RootDatum::build("A2", PairKind::Untwisted);
  auto aff = std::make_shared<AffineSystem>(rd, 3);
  TParams t = TParams::uniform(*rd, Rational(2, 5));
  HeckeRep<Rational> rep(aff, t);
  auto f = hashed_rational(3);
  Rational tj = Rational(2, 5);
  for (int j = 0; j <= 2; ++j) {
    const Weight& a = aff->simple_root_weight(j);
    for (const Weight& l : {Weight{0, 0}, Weight{1, 2}, Weight{2, 0}, Weight{-1, 3}, Weight{3, -2}}) {
      int m = aff->simple_value(j, l);
      Rational v = rep.T(j, f)(l);
      if (m == 0) CHECK(v == tj * f(l));
      if (m == 1) CHECK(v == f(l - a));
      if (m == 2) CHECK(v == f(l - 2 * a) - (tj - 1) * f(l - a));
    }
  }
}

TEST_CASE("quadratic and braid relations hold exactly") {
  std::mt19937 rng(5);
  for (const auto& cfg : oracle::small_configs()) {
    auto rd = RootDatum::build(cfg.type, cfg.pair);
    for (int c : {2, 3}) {
      auto aff = std::make_shared<AffineSystem>(rd, c);
      for (auto [ts, tl] : parameter_grid(*rd)) {
        HeckeRep<Rational> rep(aff, TParams(*rd, ts, tl));
        auto f = hashed_rational(rng());
        const int n = rd->rank();
        std::vector<Weight> pts;
        for (int i = 0; i < 30; ++i) pts.push_back(oracle::random_weight(rng, n, 2 * c));
        for (int j = 0; j <= n; ++j) {
          Rational tj = rep.t_simple(j);
          auto Tf = rep.T(j, f);
          auto TTf = rep.T(j, Tf);
          for (const auto& l : pts) CHECK(TTf(l) + (1 - tj) * Tf(l) - tj * f(l) == 0);
          for (int k = j + 1; k <= n; ++k) {
            int m = aff->braid_order(j, k);
            if (m == 0) continue;
            std::vector<int> u, v;
            for (int i = 0; i < m; ++i) {
              u.push_back(i % 2 ? k : j);
              v.push_back(i % 2 ? j : k);
            }
            auto fu = rep.T_word(u, f), fv = rep.T_word(v, f);
            for (std::size_t i = 0; i < 10; ++i) CHECK(fu(pts[i]) == fv(pts[i]));
          }
        }
      }
    }
  }
}

TEST_CASE("intertwiner") {
  auto rd = RootDatum::build("A1", PairKind::Untwisted);
  auto aff = std::make_shared<AffineSystem>(rd, 2);
  TParams t = TParams::uniform(*rd, Rational(1, 3));
  HeckeRep<Rational> rep(aff, t);
  auto f = hashed_rational(17);
  auto J = rep.intertwiner(f);
  for (int k = 0; k <= 2; ++k) CHECK(J(Weight{k}) == f(Weight{k}));
  CHECK(J(Weight{3}) == 3 * rep.T(0, f)(Weight{1}));

  std::mt19937 rng(8);
  for (const auto& cfg : oracle::small_configs()) {
    auto r = RootDatum::build(cfg.type, cfg.pair);
    auto a = std::make_shared<AffineSystem>(r, 2);
    TParams tp(*r, Rational(2, 5), r->simply_laced() ? Rational(2, 5) : Rational(-1, 2));
    HeckeRep<Rational> hr(a, tp);
    auto g = hashed_rational(rng());
    auto Jg = hr.intertwiner(g);
    for (int i = 0; i < 6; ++i) {
      Weight l = oracle::random_weight(rng, r->rank(), 4);
      auto p = a->project(l);
      if (p.word.size() > 7) continue;
      Rational brute = oracle::naive_T_word(*a, tp, p.word, 0, g, p.lambda_plus) / p.t_weight.evaluate_exact(tp);
      CHECK(Jg(l) == brute);
    }
  }
}

TEST_CASE("phi_xi is a T_j eigenfunction for j >= 1") {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const auto& cfg : oracle::small_configs()) {
    auto rd = RootDatum::build(cfg.type, cfg.pair);
    auto aff = std::make_shared<AffineSystem>(rd, 3);
    TParams t(*rd, Rational(3, 10), rd->simply_laced() ? Rational(3, 10) : Rational(-7, 10));
    HeckeRep<Complex> rep(aff, t);
    WeylGroup w(rd);
    Eigen::VectorXd xi(rd->rank());
    for (int i = 0; i < rd->rank(); ++i) xi[i] = 0.7 + 0.37 * i + 0.1 * u(rng);
    auto phi = phi_xi(rep, w, xi);
    for (int j = 1; j <= rd->rank(); ++j) {
      auto Tphi = rep.T(j, phi);
      for (int i = 0; i < 8; ++i) {
        Weight l = oracle::random_weight(rng, rd->rank(), 3);
        CHECK(std::abs(Tphi(l) - rep.t_simple(j) * phi(l)) < 1e-9 * (1 + std::abs(phi(l))));
      }
    }
  }
}
