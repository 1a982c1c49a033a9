#include "hlfusion/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace hlfusion {

namespace {

struct Entry {
  const char* key;
  double Tolerances::*field;
};

constexpr Entry kEntries[] = {
    {"grad", &Tolerances::grad},           {"bethe", &Tolerances::bethe},
    {"separation", &Tolerances::separation}, {"limit", &Tolerances::limit},
    {"basis", &Tolerances::basis},         {"invariance", &Tolerances::invariance},
    {"pieri", &Tolerances::pieri},         {"routes", &Tolerances::routes},
    {"algebra", &Tolerances::algebra},     {"macdonald", &Tolerances::macdonald},
    {"lemma", &Tolerances::lemma},         {"integrality", &Tolerances::integrality},
};

Weight random_weight(std::mt19937_64& rng, int n, int radius) {
  std::uniform_int_distribution<int> d(-radius, radius);
  Weight w(n);
  for (int i = 0; i < n; ++i) w[i] = d(rng);
  return w;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double magnitude(const Rational& q) { return std::abs(to_double(q)); }

std::string where(const Weight& l) { return " at " + l.str(); }

// rows of the t = 0 fusion table hit by the negative coefficient of the twisted pair
std::vector<Weight> walled_weights(const AffineSystem& aff) {
  const RootDatum& rd = aff.datum();
  auto orbit = rd.weyl_orbit(rd.quasi_minuscule_weight());
  std::vector<Weight> out;
  for (const auto& l : aff.enumerate_Pc()) {
    bool walls = true;
    for (int j = 0; j <= rd.rank(); ++j)
      if (std::find(orbit.begin(), orbit.end(), aff.simple_root_weight(j)) != orbit.end())
        walls = walls && aff.simple_value(j, l) == 0;
    if (walls) out.push_back(l);
  }
  return out;
}

template <class F>
CheckResult timed(const char* name, double tolerance, F&& body) {
  CheckResult r;
  r.name = name;
  r.tolerance = tolerance;
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

void Tolerances::set(std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw std::invalid_argument("tolerance override must be key=value");
  std::string key(assignment.substr(0, eq)), value(assignment.substr(eq + 1));
  for (const auto& e : kEntries)
    if (key == e.key) {
      std::size_t used = 0;
      double v = std::stod(value, &used);
      if (used != value.size() || !(v > 0)) throw std::invalid_argument("bad tolerance value '" + value + "'");
      this->*e.field = v;
      return;
    }
  throw std::invalid_argument("unknown tolerance '" + key + "'");
}

std::vector<std::string> Tolerances::keys() {
  std::vector<std::string> out;
  for (const auto& e : kEntries) out.emplace_back(e.key);
  return out;
}

LatticeFunction<Rational> hashed_function(std::uint64_t seed) {
  return LatticeFunction<Rational>(
      [seed](const Weight& l) {
        std::uint64_t h = seed ^ 0x243F6A8885A308D3ull;
        for (int i = 0; i < l.rank(); ++i) {
          h += static_cast<std::uint64_t>(static_cast<std::int64_t>(l[i])) * 0x9E3779B97F4A7C15ull + 0x7F4A7C15ull;
          h ^= h >> 30;
          h *= 0xBF58476D1CE4E5B9ull;
          h ^= h >> 27;
          h *= 0x94D049BB133111EBull;
          h ^= h >> 31;
        }
        return Rational(static_cast<int>(h % 61) - 30, 1 + static_cast<int>((h >> 32) % 11));
      },
      "hashed");
}

Workspace::Workspace(std::shared_ptr<const AffineSystem> aff, const TParams& t, std::uint64_t seed, Tolerances tol)
    : aff_(std::move(aff)), t_(t), seed_(seed), tol_(tol), pieri_(aff_) {}

const Spherical& Workspace::spherical() const {
  if (!sph_) sph_ = std::make_unique<Spherical>(aff_->datum_ptr());
  return *sph_;
}

const BasisMatrix& Workspace::basis() const {
  if (!basis_) basis_ = std::make_unique<BasisMatrix>(build_basis_matrix(spherical(), aff_, t_));
  return *basis_;
}

const StructureTable& Workspace::table() const {
  if (!table_) table_ = std::make_unique<StructureTable>(structure_constants(basis()));
  return *table_;
}

CheckResult check_hecke_relations(const Workspace& w, int samples) {
  return timed("hecke_relations", 0, [&](CheckResult& r) {
    const AffineSystem& aff = w.affine();
    const int n = aff.rank();
    HeckeRep<Rational> rep(w.affine_ptr(), w.params());
    auto f = hashed_function(w.seed());
    std::mt19937_64 rng(w.seed());
    std::vector<Weight> pts;
    for (int i = 0; i < samples; ++i) pts.push_back(random_weight(rng, n, 2 * aff.level()));
    for (int j = 0; j <= n; ++j) {
      Rational tj = rep.t_simple(j);
      auto Tf = rep.T(j, f);
      auto TTf = rep.T(j, Tf);
      for (const auto& l : pts) {
        Rational d = TTf(l) + (1 - tj) * Tf(l) - tj * f(l);
        if (d != 0) r.fail("quadratic relation T" + std::to_string(j) + where(l));
        r.bound(magnitude(d));
      }
      for (int k = j + 1; k <= n; ++k) {
        int m = aff.braid_order(j, k);
        if (m == 0) continue;
        std::vector<int> u, v;
        for (int i = 0; i < m; ++i) {
          u.push_back(i % 2 ? k : j);
          v.push_back(i % 2 ? j : k);
        }
        auto fu = rep.T_word(u, f), fv = rep.T_word(v, f);
        for (const auto& l : pts) {
          Rational d = fu(l) - fv(l);
          if (d != 0) r.fail("braid relation T" + std::to_string(j) + ",T" + std::to_string(k) + where(l));
          r.bound(magnitude(d));
        }
      }
    }
  });
}

CheckResult check_nodes(const Workspace& w) {
  return timed("nodes", w.tol().grad, [&](CheckResult& r) {
    const Tolerances& tol = w.tol();
    NodeSolver s(w.affine_ptr(), w.params());
    auto nodes = s.solve_all();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& nd = nodes[i];
      r.bound(nd.grad_residual);
      if (!(nd.bethe_residual < tol.bethe)) r.fail("Bethe residual " + sci(nd.bethe_residual) + " at mu " + nd.mu.str());
      Eigen::VectorXd p = s.root_pairings(nd.xi);
      if (!(p.minCoeff() > 0 && p.maxCoeff() < 2 * std::numbers::pi)) r.fail("node outside the open alcove at mu " + nd.mu.str());
      if (s.recover_mu(nd.xi) != nd.mu) r.fail("node does not recover its label " + nd.mu.str());
      for (std::size_t j = 0; j < i; ++j)
        if (!((nd.xi - nodes[j].xi).norm() > tol.separation)) r.fail("nodes " + nd.mu.str() + " and " + nodes[j].mu.str() + " coincide");
    }
  });
}

CheckResult check_node_limit(const Workspace& w) {
  return timed("node_limit", w.tol().limit, [&](CheckResult& r) {
    NodeSolver s(w.affine_ptr(), TParams::uniform(w.datum(), Rational(1, 1000000)));
    for (const auto& mu : w.affine().enumerate_Pc_hat()) r.bound((s.solve(mu).xi - s.seed(mu)).norm());
  });
}

CheckResult check_basis(const Workspace& w, int samples) {
  return timed("basis", w.tol().basis, [&](CheckResult& r) {
    const AffineSystem& aff = w.affine();
    const RootDatum& rd = w.datum();
    const int c = aff.level();
    if (aff.enumerate_Pc().size() != aff.enumerate_Pc_hat().size()) r.fail("|P_c| != |P-hat_c|");
    const BasisMatrix& b = w.basis();
    r.bound(w.table().residual);
    HeckeRep<Complex> rep(w.affine_ptr(), w.params());
    for (const auto& nd : b.nodes) {
      auto Phi = Phi_xi(rep, w.spherical().weyl(), nd.xi);
      for (std::size_t i = 0; i < b.rows.size(); ++i) r.bound(std::abs(Phi(b.rows[i]) - w.spherical().msf_value(b.rows[i], nd.xi, w.params())));
    }
    // away from P_c in 50 digits
    HeckeRep<ComplexMP> rep_mp(w.affine_ptr(), w.params());
    NodeSolver solver(w.affine_ptr(), w.params());
    std::map<std::size_t, LatticeFunction<ComplexMP>> Phis;
    std::mt19937_64 rng(w.seed() + 1);
    double worst = 0;
    for (int k = 0; k < samples; ++k) {
      std::size_t idx = static_cast<std::size_t>(k) % b.nodes.size();
      auto it = Phis.find(idx);
      if (it == Phis.end()) {
        auto phi = symmetrize(rep_mp, w.spherical().weyl(), plane_wave(solver.refine_weight_pairings(b.nodes[idx])));
        it = Phis.emplace(idx, rep_mp.intertwiner(phi)).first;
      }
      const auto& Phi = it->second;
      Weight l = random_weight(rng, rd.rank(), c);
      ComplexMP v = Phi(l);
      auto add = [&](const Weight& x) { worst = std::max(worst, static_cast<double>(abs(Phi(x) - v))); };
      for (int j = 0; j <= rd.rank(); ++j) add(aff.simple_reflection(j, l));
      for (int j = 1; j <= rd.rank(); ++j) {
        const RootInfo& a = rd.root(rd.simple_root(j));
        add(l + (c * a.m_alpha) * a.weight);
      }
    }
    if (!(worst < w.tol().invariance)) r.fail("invariance defect " + sci(worst));
    r.detail += r.detail.empty() ? "" : "; ";
    r.detail += "invariance " + sci(worst);
  });
}

CheckResult check_pieri(const Workspace& w) {
  return timed("pieri", w.tol().pieri, [&](CheckResult& r) {
    const Pieri& p = w.pieri();
    for (const auto& om : p.pieri_weights())
      for (const auto& l : w.affine().enumerate_Pc()) {
        r.bound(pieri_identity_check(p, w.spherical(), w.basis(), l, om));
        if (w.datum().is_minuscule(om) && !p.U_coef(l, om).is_zero()) r.fail("U nonzero for minuscule " + om.str() + where(l));
      }
  });
}

CheckResult check_two_routes(const Workspace& w) {
  return timed("two_routes", w.tol().routes, [&](CheckResult& r) {
    const StructureTable& s = w.table();
    const Pieri& p = w.pieri();
    for (const auto& om : p.pieri_weights()) {
      const int wi = s.index(om);
      for (const auto& l : w.affine().enumerate_Pc()) {
        std::vector<Complex> expect(s.size(), 0.0);
        for (const auto& [nu, coef] : p.lr_pieri(l, om)) expect[s.index(nu)] = coef.evaluate(w.params());
        const int li = s.index(l);
        for (int k = 0; k < s.size(); ++k) r.bound(std::abs(s(li, wi, k) - expect[k]));
      }
    }
    double comm = commutativity_defect(s), assoc = associativity_defect(s);
    if (!(comm < w.tol().algebra)) r.fail("commutativity defect " + sci(comm));
    if (!(assoc < w.tol().algebra)) r.fail("associativity defect " + sci(assoc));
    r.detail += r.detail.empty() ? "" : "; ";
    r.detail += "associativity " + sci(assoc);
  });
}

CheckResult check_fusion(const Workspace& w) {
  return timed("fusion", w.tol().integrality, [&](CheckResult& r) {
    const AffineSystem& aff = w.affine();
    const RootDatum& rd = w.datum();
    const Pieri& p = w.pieri();
    StructureTable f = fusion_ring(w.spherical(), w.affine_ptr());
    r.bound(f.rounding);
    if (f.exceptional_twisted != p.exceptional_twisted()) r.fail("exceptional flag mismatch");
    if (!f.exceptional_twisted)
      for (long x : f.integers)
        if (x < 0) r.fail("negative fusion coefficient");
    for (const auto& om : p.pieri_weights())
      for (const auto& l : aff.enumerate_Pc()) {
        std::map<Weight, long> fp;
        for (const auto& [nu, k] : p.fusion_pieri(l, om)) fp[nu] = k;
        for (const auto& [nu, coef] : p.lr_pieri(l, om))
          if (coef.value_at_zero() != fp[nu]) r.fail("t -> 0 limit of the Pieri rule" + where(l));
        const int li = f.index(l), wi = f.index(om);
        for (int k = 0; k < f.size(); ++k) {
          auto it = fp.find(f.weights[k]);
          if (f.integer(li, wi, k) != (it == fp.end() ? 0 : it->second)) r.fail("Pieri rule vs table" + where(l));
        }
      }
    if (f.exceptional_twisted) {
      const Weight theta = rd.quasi_minuscule_weight();
      auto rows = walled_weights(aff);
      if (rows.empty()) r.fail("no weight on the walls of the theta orbit");
      for (const auto& l : rows)
        if (f.integer(f.index(l), f.index(theta), f.index(l)) != -1) r.fail("expected -1" + where(l));
    }
    if (rd.label() == "A1") {
      const int c = aff.level();
      for (int a = 0; a <= c; ++a)
        for (int b = 0; b <= c; ++b)
          for (int e = 0; e <= c; ++e) {
            int want = (a + b + e) % 2 == 0 && e >= std::abs(a - b) && e <= std::min(a + b, 2 * c - a - b) ? 1 : 0;
            if (f.integer(f.index(Weight{a}), f.index(Weight{b}), f.index(Weight{e})) != want) r.fail("su(2) truncation rule");
          }
    }
  });
}

CheckResult check_identities(const Workspace& w, int samples) {
  return timed("identities", w.tol().macdonald, [&](CheckResult& r) {
    const AffineSystem& aff = w.affine();
    const RootDatum& rd = w.datum();
    const Spherical& sph = w.spherical();
    const TParams& t = w.params();
    const Pieri& p = w.pieri();
    const TLaurent w0 = finite_poincare_product(rd);
    std::mt19937_64 rng(w.seed() + 2);
    for (int i = 0; i < samples; ++i) r.bound(std::abs(sph.msf_value(rd.zero_weight(), sph.sample_alcove(rng, 0.1), t) - w0.evaluate(t)));

    std::vector<int> all;
    for (int j = 1; j <= rd.rank(); ++j) all.push_back(j);
    if (poincare_series(rd, all) != w0) r.fail("Poincare product formula for W0");
    for (const auto& l : aff.enumerate_Pc())
      if (aff.stabilizer_poincare(l) != aff.stabilizer_poincare_brute(l)) r.fail("stabilizer Poincare series" + where(l));

    HeckeRep<Rational> exact(w.affine_ptr(), t);
    auto f = hashed_function(w.seed() + 3);
    for (const auto& l : aff.enumerate_Pc())
      for (const auto& nu : p.orbit_set()) {
        if (!p.theta_classification_holds(l, nu)) r.fail("theta classification" + where(l));
        if (p.iqm_defect(exact, f, l, nu) != 0) r.fail("walk lemma on a rational function" + where(l));
      }

    HeckeRep<Complex> rep(w.affine_ptr(), t);
    const auto& nd = w.basis().nodes.front();
    auto Phi = Phi_xi(rep, sph.weyl(), nd.xi);
    double worst = 0;
    for (const auto& om : p.pieri_weights())
      for (const auto& l : aff.enumerate_Pc()) {
        worst = std::max(worst, std::abs(p.L_omega(t, Phi, l, om) - sph.orbit_sum(om, nd.xi) * Phi(l)));
        for (const auto& nu : p.orbit_set()) worst = std::max(worst, std::abs(p.iqm_defect(rep, Phi, l, nu)));
      }
    if (!(worst < w.tol().lemma)) r.fail("walk lemma on Phi " + sci(worst));
    r.detail += r.detail.empty() ? "" : "; ";
    r.detail += "walk lemma " + sci(worst);
  });
}

std::vector<CheckResult> run_suite(const Workspace& w) {
  return {check_hecke_relations(w), check_nodes(w),  check_node_limit(w), check_basis(w),
          check_pieri(w),           check_two_routes(w), check_fusion(w),  check_identities(w)};
}

}  // namespace hlfusion
