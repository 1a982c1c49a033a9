#include <random>

#include "doctest.h"
#include "hlfusion/affine.hpp"

using namespace hlfusion;

namespace {

const std::vector<std::string> kSmall = {"A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3"};

std::shared_ptr<const RootDatum> rd_of(const std::string& s, PairKind pk) { return RootDatum::build(s, pk); }

Weight random_weight(std::mt19937& rng, int n, int radius) {
  std::uniform_int_distribution<int> d(-radius, radius);
  Weight w(n);
  for (int i = 0; i < n; ++i) w[i] = d(rng);
  return w;
}

}  // namespace

TEST_CASE("affine values and projection in A1") {
  AffineSystem a(rd_of("A1", PairKind::Untwisted), 2);
  CHECK(a.simple_value(0, Weight{0}) == 2);
  CHECK(a.simple_value(1, Weight{5}) == 5);
  CHECK(a.simple_value(0, Weight{3}) == -1);
  auto p = a.project(Weight{3});
  CHECK(p.lambda_plus == Weight{1});
  CHECK(p.word == std::vector<int>{0});
  CHECK(p.t_weight == TLaurent::t(Orbit::Long));
  auto q = a.project(Weight{-1});
  CHECK(q.lambda_plus == Weight{1});
  CHECK(q.word == std::vector<int>{1});
  CHECK(a.project(Weight{2}).word.empty());
  CHECK(a.r_set(Weight{3}) == std::vector<AffineRoot>{{1, 1}});  // -alpha_1^vee + 2
  CHECK(a.theta_count(Weight{-2}) == 1);
  CHECK(a.enumerate_Pc().size() == 3);
  CHECK_THROWS_AS(AffineSystem(rd_of("A1", PairKind::Untwisted), 1), std::invalid_argument);
}

TEST_CASE("affine root value uses m_alpha") {
  // G2 untwisted: the short root's affine translates come in steps of 3c
  auto rd = rd_of("G2", PairKind::Untwisted);
  AffineSystem a(rd, 2);
  int s = rd->simple_root(1);
  CHECK(a.value({s, 1}, rd->zero_weight()) == 6);
  CHECK(a.value({rd->simple_root(2), 1}, rd->zero_weight()) == 2);
}

TEST_CASE("alcove sizes") {
  CHECK(AffineSystem(rd_of("A2", PairKind::Untwisted), 2).enumerate_Pc().size() == 6);
  for (const char* s : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"})
    for (auto pk : {PairKind::Untwisted, PairKind::Twisted})
      for (int c = 2; c <= 5; ++c) {
        AffineSystem a(rd_of(s, pk), c);
        CAPTURE(s);
        CAPTURE(c);
        auto pc = a.enumerate_Pc();
        CHECK(pc.size() == a.enumerate_Pc_hat().size());
        std::size_t small_marks = 1;
        for (int m : a.datum().marks()) small_marks += m <= c;
        CHECK(pc.size() >= small_marks);
        for (const auto& l : pc) CHECK(a.in_alcove(l));
      }
}

TEST_CASE("projection, R[lambda] and t[lambda] agree") {
  std::mt19937 rng(11);
  for (const auto& s : kSmall)
    for (auto pk : {PairKind::Untwisted, PairKind::Twisted})
      for (int c : {2, 3}) {
        AffineSystem a(rd_of(s, pk), c);
        for (int rep = 0; rep < 100; ++rep) {
          Weight l = random_weight(rng, a.rank(), 4 * c);
          auto p = a.project(l);
          CHECK(a.in_alcove(p.lambda_plus));
          Weight cur = l;
          for (int j : p.steps) cur = a.simple_reflection(j, cur);
          CHECK(cur == p.lambda_plus);
          Weight back = p.lambda_plus;
          for (int j : p.word) back = a.simple_reflection(j, back);
          CHECK(back == l);
          auto r = a.r_set(l);
          CHECK(r.size() == p.word.size());
          CHECK(a.t_of_r_set(l) == p.t_weight);
          for (int j = 0; j <= a.rank(); ++j)
            if (a.simple_value(j, l) < 0) CHECK(a.r_set(a.simple_reflection(j, l)).size() + 1 == r.size());
          if (a.in_alcove(l)) CHECK(a.theta_count(l) == 0);
        }
      }
}

TEST_CASE("stabilizer Poincare series: product formula vs enumeration") {
  auto a1 = rd_of("A1", PairKind::Untwisted);
  CHECK(AffineSystem(a1, 2).stabilizer_poincare(Weight{2}) == 1 + TLaurent::t(Orbit::Long));
  CHECK(AffineSystem(a1, 2).stabilizer_poincare(Weight{1}) == TLaurent(1));
  for (const auto& s : kSmall)
    for (auto pk : {PairKind::Untwisted, PairKind::Twisted})
      for (int c : {2, 3, 4}) {
        AffineSystem a(rd_of(s, pk), c);
        for (const auto& l : a.enumerate_Pc()) {
          CAPTURE(l);
          CHECK(a.stabilizer_poincare(l) == a.stabilizer_poincare_brute(l));
        }
        CHECK(a.stabilizer_poincare(a.datum().zero_weight()) == finite_poincare_product(a.datum()));
      }
  CHECK_THROWS_AS(AffineSystem(a1, 2).stabilizer_poincare(Weight{3}), std::invalid_argument);
}

TEST_CASE("affine Coxeter matrix") {
  AffineSystem c2(rd_of("C2", PairKind::Untwisted), 2);
  CHECK(c2.braid_order(0, 1) == 4);
  CHECK(c2.braid_order(1, 2) == 4);
  CHECK(c2.braid_order(0, 2) == 2);
  AffineSystem a2(rd_of("A2", PairKind::Untwisted), 2);
  CHECK(a2.braid_order(0, 1) == 3);
  CHECK(a2.braid_order(0, 2) == 3);
  AffineSystem g2(rd_of("G2", PairKind::Untwisted), 2);
  CHECK(g2.braid_order(1, 2) == 6);
  CHECK(g2.braid_order(0, 2) == 3);
  CHECK(g2.braid_order(0, 1) == 2);
  AffineSystem a1(rd_of("A1", PairKind::Untwisted), 2);
  CHECK(a1.braid_order(0, 1) == 0);
}
