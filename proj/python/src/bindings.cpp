#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hlfusion/verify.hpp"

namespace py = pybind11;
using namespace hlfusion;

namespace {

PairKind pair_of(const std::string& s) {
  if (s == "untwisted") return PairKind::Untwisted;
  if (s == "twisted") return PairKind::Twisted;
  throw py::value_error("pair must be 'untwisted' or 'twisted'");
}

// accepts 0.3, "0.3", "3/10" or fractions.Fraction
Rational rational_of(const py::object& x) { return parse_rational(py::str(x).cast<std::string>()); }

struct Config {
  std::shared_ptr<const RootDatum> rd;
  std::shared_ptr<const AffineSystem> aff;
};

Config config(const std::string& type, const std::string& pair, int level) {
  if (level <= 1) throw py::value_error("level must be > 1");
  Config c;
  c.rd = RootDatum::build(type, pair_of(pair));
  c.aff = std::make_shared<AffineSystem>(c.rd, level);
  return c;
}

TParams params(const RootDatum& rd, const py::object& t_short, const py::object& t_long, bool allow_zero) {
  Rational ts = rational_of(t_short);
  Rational tl = t_long.is_none() ? ts : rational_of(t_long);
  return TParams(rd, ts, tl, allow_zero);
}

template <class Tag>
std::vector<int> coords(const LatticePoint<Tag>& p) {
  std::vector<int> v(p.rank());
  for (int i = 0; i < p.rank(); ++i) v[i] = p[i];
  return v;
}

Weight weight_of(const std::vector<int>& v, int rank) {
  if (static_cast<int>(v.size()) != rank) throw py::value_error("weight must have " + std::to_string(rank) + " coordinates");
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w[i] = v[i];
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deformed Hall-Littlewood fusion rings";

  m.def("datum", [](const std::string& type, const std::string& pair) {
    auto rd = RootDatum::build(type, pair_of(pair));
    py::dict d;
    d["label"] = rd->label();
    d["rank"] = rd->rank();
    d["affine_type"] = rd->affine_dynkin_label();
    d["simply_laced"] = rd->simply_laced();
    d["coxeter_number"] = rd->coxeter_number();
    d["marks"] = rd->marks();
    d["positive_roots"] = rd->num_positive_roots();
    return d;
  }, py::arg("type"), py::arg("pair") = "untwisted");

  m.def("alcove", [](const std::string& type, const std::string& pair, int level) {
    auto c = config(type, pair, level);
    std::vector<std::vector<int>> out;
    for (const auto& w : c.aff->enumerate_Pc()) out.push_back(coords(w));
    return out;
  }, py::arg("type"), py::arg("pair") = "untwisted", py::arg("level"));

  m.def("nodes", [](const std::string& type, const std::string& pair, int level, const py::object& t, const py::object& t_long) {
    auto c = config(type, pair, level);
    TParams tp = params(*c.rd, t, t_long, true);
    NodeSolver s(c.aff, tp);
    py::list out;
    for (const auto& mu : c.aff->enumerate_Pc_hat()) {
      Node nd;
      if (tp.is_zero()) {
        nd.mu = mu;
        nd.xi = s.seed(mu);
        nd.grad_residual = s.morse_gradient(mu, nd.xi).norm();
        nd.bethe_residual = s.bethe_residual(nd.xi);
      } else {
        nd = s.solve(mu);
      }
      py::dict d;
      d["mu"] = coords(nd.mu);
      d["xi"] = std::vector<double>(nd.xi.data(), nd.xi.data() + nd.xi.size());
      d["grad_residual"] = nd.grad_residual;
      d["bethe_residual"] = nd.bethe_residual;
      d["iterations"] = nd.iterations;
      out.append(d);
    }
    return out;
  }, py::arg("type"), py::arg("pair") = "untwisted", py::arg("level"), py::arg("t"), py::arg("t_long") = py::none());

  m.def("pieri", [](const std::string& type, const std::string& pair, int level, const std::vector<int>& lambda,
                    const std::vector<int>& omega, const py::object& t, const py::object& t_long) {
    auto c = config(type, pair, level);
    TParams tp = params(*c.rd, t, t_long, true);
    Pieri p(c.aff);
    Weight l = weight_of(lambda, c.rd->rank()), w = weight_of(omega, c.rd->rank());
    if (!c.aff->in_alcove(l)) throw py::value_error("lambda is not in P_c");
    if (!p.is_pieri_weight(w)) throw py::value_error("omega is neither minuscule nor quasi-minuscule");
    py::list out;
    for (const auto& [nu, coef] : p.lr_pieri(l, w)) {
      double v = tp.is_zero() ? to_double(coef.value_at_zero()) : coef.evaluate(tp);
      out.append(py::make_tuple(coords(nu), coef.str(c.rd->simply_laced()), v));
    }
    return out;
  }, py::arg("type"), py::arg("pair") = "untwisted", py::arg("level"), py::arg("lam"), py::arg("omega"),
     py::arg("t") = 0, py::arg("t_long") = py::none());

  m.def("fusion_ring", [](const std::string& type, const std::string& pair, int level) {
    auto c = config(type, pair, level);
    Spherical sph(c.rd);
    StructureTable f = fusion_ring(sph, c.aff);
    const py::ssize_t n = f.size();
    py::array_t<long> table({n, n, n});
    auto a = table.mutable_unchecked<3>();
    for (py::ssize_t i = 0; i < n; ++i)
      for (py::ssize_t j = 0; j < n; ++j)
        for (py::ssize_t k = 0; k < n; ++k) a(i, j, k) = f.integer(i, j, k);
    std::vector<std::vector<int>> weights;
    for (const auto& w : f.weights) weights.push_back(coords(w));
    py::dict d;
    d["weights"] = weights;
    d["table"] = table;
    d["exceptional_twisted"] = f.exceptional_twisted;
    d["rounding"] = f.rounding;
    return d;
  }, py::arg("type"), py::arg("pair") = "untwisted", py::arg("level"));

  m.def("structure_constants", [](const std::string& type, const std::string& pair, int level, const py::object& t,
                                  const py::object& t_long) {
    auto c = config(type, pair, level);
    Spherical sph(c.rd);
    StructureTable s = structure_constants(sph, c.aff, params(*c.rd, t, t_long, false));
    const py::ssize_t n = s.size();
    py::array_t<std::complex<double>> table({n, n, n});
    auto a = table.mutable_unchecked<3>();
    for (py::ssize_t i = 0; i < n; ++i)
      for (py::ssize_t j = 0; j < n; ++j)
        for (py::ssize_t k = 0; k < n; ++k) a(i, j, k) = s(i, j, k);
    std::vector<std::vector<int>> weights;
    for (const auto& w : s.weights) weights.push_back(coords(w));
    py::dict d;
    d["weights"] = weights;
    d["table"] = table;
    d["residual"] = s.residual;
    return d;
  }, py::arg("type"), py::arg("pair") = "untwisted", py::arg("level"), py::arg("t"), py::arg("t_long") = py::none());

  m.def("verify", [](const std::string& type, const std::string& pair, int level, const py::object& t,
                     const py::object& t_long, std::uint64_t seed) {
    auto c = config(type, pair, level);
    TParams tp = params(*c.rd, t, t_long, false);
    std::vector<CheckResult> results;
    {
      py::gil_scoped_release release;
      Workspace w(c.aff, tp, seed);
      results = run_suite(w);
    }
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["check"] = r.name;
      d["passed"] = r.pass;
      d["residual"] = r.residual;
      d["tolerance"] = r.tolerance;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("type"), py::arg("pair") = "untwisted", py::arg("level"), py::arg("t"), py::arg("t_long") = py::none(),
     py::arg("seed") = 1);
}
