#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hlfusion/verify.hpp"
#include "json.hpp"

#ifndef HLFUSION_VERSION
#define HLFUSION_VERSION "0.0.0"
#endif

using namespace hlfusion;
using Json = nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::string pair = "untwisted";
  int level = 0;
  std::string t, t_short, t_long;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  std::vector<std::string> tol;
  bool timing = false;
  std::string lambda, omega;
};

struct Job {
  std::string command;
  std::shared_ptr<const RootDatum> rd;
  std::shared_ptr<const AffineSystem> aff;
  TParams t;
  Rational ts = 0, tl = 0;
  Tolerances tol;
};

Weight parse_weight(std::string text, int rank, const char* what) {
  for (char& ch : text)
    if (ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == ',') ch = ' ';
  std::istringstream in(text);
  std::vector<int> v;
  long x;
  while (in >> x) v.push_back(static_cast<int>(x));
  if (!in.eof() || static_cast<int>(v.size()) != rank)
    throw ConfigError(std::string(what) + " needs " + std::to_string(rank) + " integer coordinates");
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w[i] = v[i];
  return w;
}

template <class Tag>
Json point_json(const LatticePoint<Tag>& w) {
  Json a = Json::array();
  for (int i = 0; i < w.rank(); ++i) a.push_back(w[i]);
  return a;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Rational parse_t(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw ConfigError(std::string(what) + ": cannot parse '" + text + "' as a rational");
  }
}

bool allows_zero(const std::string& command) { return command == "nodes" || command == "pieri" || command == "fusion" || command == "structure"; }

Job configure(const Options& o, const std::string& command) {
  Job j;
  j.command = command;
  PairKind pk;
  if (o.pair == "untwisted") pk = PairKind::Untwisted;
  else if (o.pair == "twisted") pk = PairKind::Twisted;
  else throw ConfigError("--pair must be untwisted or twisted");
  try {
    j.rd = RootDatum::build(o.type, pk);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--type: ") + e.what());
  }
  if (o.level <= 1) throw ConfigError("--level must be an integer c > 1");
  j.aff = std::make_shared<AffineSystem>(j.rd, o.level);

  const bool split = !o.t_short.empty() || !o.t_long.empty();
  if (split && !o.t.empty()) throw ConfigError("give either --t or --t-short/--t-long");
  if (split && (o.t_short.empty() || o.t_long.empty())) throw ConfigError("--t-short and --t-long go together");
  if (o.t.empty() && !split) {
    if (command != "fusion") throw ConfigError("--t (or --t-short and --t-long) is required");
  } else if (split) {
    j.ts = parse_t(o.t_short, "--t-short");
    j.tl = parse_t(o.t_long, "--t-long");
  } else {
    j.ts = j.tl = parse_t(o.t, "--t");
  }
  if (command == "fusion" && (j.ts != 0 || j.tl != 0)) throw ConfigError("fusion tables are at t = 0");
  if (j.rd->simply_laced() && j.ts != j.tl) throw ConfigError(j.rd->label() + " is simply laced: t-short must equal t-long");
  for (const Rational& v : {j.ts, j.tl}) {
    if (!(v > -1 && v < 1)) throw ConfigError("t values must lie in (-1, 1)");
    if (v == 0 && !(allows_zero(command) && j.ts == 0 && j.tl == 0))
      throw ConfigError(command == "verify" ? "verify needs nonzero t" : "t-short and t-long must both be zero or both nonzero");
  }
  j.t = TParams(*j.rd, j.ts, j.tl, true);
  for (const auto& s : o.tol) {
    try {
      j.tol.set(s);
    } catch (const std::exception& e) {
      std::string keys;
      for (const auto& k : Tolerances::keys()) keys += (keys.empty() ? "" : ", ") + k;
      throw ConfigError(std::string("--tol: ") + e.what() + " (keys: " + keys + ")");
    }
  }
  return j;
}

std::string config_hash(const Options& o, const Job& j) {
  std::string s = j.command + "|" + j.rd->label() + "|" + std::string(to_string(j.rd->pair_kind())) + "|" +
                  std::to_string(o.level) + "|" + to_string(j.ts) + "|" + to_string(j.tl) + "|" + std::to_string(o.seed) +
                  "|" + o.lambda + "|" + o.omega;
  for (const auto& t : o.tol) s += "|" + t;
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json meta_of(const Options& o, const Job& j) {
  Json m;
  m["program"] = "hlfusion";
  m["version"] = HLFUSION_VERSION;
  m["command"] = j.command;
  m["type"] = j.rd->label();
  m["pair"] = std::string(to_string(j.rd->pair_kind()));
  m["affine_type"] = j.rd->affine_dynkin_label();
  m["level"] = o.level;
  m["t_short"] = to_string(j.ts);
  m["t_long"] = to_string(j.tl);
  m["seed"] = o.seed;
  m["config_hash"] = config_hash(o, j);
  return m;
}

// Pieri coefficients; lambda must lie in P_c.
Json cmd_pieri(const Options& o, const Job& j, Json& meta) {
  const RootDatum& rd = *j.rd;
  const int n = rd.rank();
  if (o.lambda.empty() || o.omega.empty()) throw ConfigError("pieri needs --lambda and --omega");
  Weight lambda = parse_weight(o.lambda, n, "--lambda");
  Weight omega = parse_weight(o.omega, n, "--omega");
  Pieri p(j.aff);
  if (!j.aff->in_alcove(lambda)) {
    std::string bound;
    const int a0 = rd.negate(rd.alpha0());
    for (int i = 1; i <= n; ++i) {
      int k = rd.pair_coroot(rd.fundamental_weight(i), a0);
      if (k) bound += (bound.empty() ? "" : " + ") + (k == 1 ? "" : std::to_string(k) + "*") + "l" + std::to_string(i);
    }
    throw ConfigError("--lambda " + lambda.str() + " is not in P_c: need l1..l" + std::to_string(n) + " >= 0 and " + bound +
                      " <= " + std::to_string(o.level) + " (|P_c| = " + std::to_string(j.aff->enumerate_Pc().size()) + ")");
  }
  if (!p.is_pieri_weight(omega)) {
    std::string ok;
    for (const auto& w : p.pieri_weights()) ok += (ok.empty() ? "" : ", ") + w.str();
    throw ConfigError("--omega " + omega.str() + " is neither minuscule nor quasi-minuscule; choose one of " + ok);
  }
  meta["lambda"] = point_json(lambda);
  meta["omega"] = point_json(omega);
  meta["minuscule"] = rd.is_minuscule(omega);
  Json rows = Json::array();
  for (const auto& [nu, coef] : p.lr_pieri(lambda, omega)) {
    Json r;
    r["nu"] = point_json(nu);
    r["diagonal"] = nu == lambda;
    r["coefficient"] = coef.str(rd.simply_laced());
    if (j.t.is_zero()) r["value"] = to_double(coef.value_at_zero());
    else r["value"] = coef.evaluate(j.t);
    rows.push_back(r);
  }
  return rows;
}

Json cmd_nodes(const Job& j) {
  NodeSolver s(j.aff, j.t);
  Json rows = Json::array();
  auto emit = [&](const CoweightHat& mu, const Eigen::VectorXd& xi, double grad, double bethe, int it) {
    Json r;
    r["mu"] = point_json(mu);
    Json x = Json::array();
    for (int i = 0; i < xi.size(); ++i) x.push_back(xi[i]);
    r["xi"] = x;
    r["grad_residual"] = grad;
    r["bethe_residual"] = bethe;
    r["iterations"] = it;
    rows.push_back(r);
  };
  if (j.t.is_zero()) {
    for (const auto& mu : j.aff->enumerate_Pc_hat()) {
      Eigen::VectorXd xi = s.seed(mu);
      emit(mu, xi, s.morse_gradient(mu, xi).norm(), s.bethe_residual(xi), 0);
    }
  } else {
    for (const auto& nd : s.solve_all()) emit(nd.mu, nd.xi, nd.grad_residual, nd.bethe_residual, nd.iterations);
  }
  return rows;
}

Json cmd_fusion(const Job& j, Json& meta) {
  Spherical sph(j.rd);
  StructureTable f = fusion_ring(sph, j.aff);
  long negative = 0;
  Json rows = Json::array();
  for (int l = 0; l < f.size(); ++l)
    for (int m = 0; m < f.size(); ++m)
      for (int k = 0; k < f.size(); ++k) {
        long v = f.integer(l, m, k);
        if (!v) continue;
        negative += v < 0;
        Json r;
        r["lambda"] = point_json(f.weights[l]);
        r["mu"] = point_json(f.weights[m]);
        r["nu"] = point_json(f.weights[k]);
        r["coefficient"] = v;
        rows.push_back(r);
      }
  meta["size"] = f.size();
  meta["rounding"] = f.rounding;
  meta["exceptional_twisted"] = f.exceptional_twisted;
  meta["negative_entries"] = negative;
  return rows;
}

Json cmd_structure(const Job& j, Json& meta) {
  constexpr double cutoff = 1e-12;
  Spherical sph(j.rd);
  BasisMatrix b = build_basis_matrix(sph, j.aff, j.t);
  StructureTable s = structure_constants(b);
  Json rows = Json::array();
  for (int l = 0; l < s.size(); ++l)
    for (int m = 0; m < s.size(); ++m)
      for (int k = 0; k < s.size(); ++k) {
        const Complex& v = s(l, m, k);
        if (std::abs(v) <= cutoff) continue;
        Json r;
        r["lambda"] = point_json(s.weights[l]);
        r["mu"] = point_json(s.weights[m]);
        r["nu"] = point_json(s.weights[k]);
        r["coefficient"] = complex_json(v);
        rows.push_back(r);
      }
  meta["size"] = s.size();
  meta["residual"] = s.residual;
  meta["condition"] = b.condition;
  meta["zero_cutoff"] = cutoff;
  return rows;
}

Json cmd_verify(const Options& o, const Job& j, Json& meta, bool& ok) {
  Workspace w(j.aff, j.t, o.seed, j.tol);
  Json tol;
  Json rows = Json::array();
  for (const auto& c : run_suite(w)) {
    Json r;
    r["check"] = c.name;
    r["status"] = c.pass ? "pass" : "fail";
    r["residual"] = c.residual;
    r["tolerance"] = c.tolerance;
    r["detail"] = c.detail;
    if (o.timing) r["seconds"] = c.seconds;
    ok = ok && c.pass;
    rows.push_back(r);
  }
  const Tolerances& t = j.tol;
  tol["grad"] = t.grad;
  tol["bethe"] = t.bethe;
  tol["separation"] = t.separation;
  tol["limit"] = t.limit;
  tol["basis"] = t.basis;
  tol["invariance"] = t.invariance;
  tol["pieri"] = t.pieri;
  tol["routes"] = t.routes;
  tol["algebra"] = t.algebra;
  tol["macdonald"] = t.macdonald;
  tol["lemma"] = t.lemma;
  tol["integrality"] = t.integrality;
  meta["tolerances"] = tol;
  meta["passed"] = ok;
  return rows;
}

std::string csv_field(const Json& v) {
  std::string s;
  if (v.is_string()) s = v.get<std::string>();
  else s = v.dump();
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string render_csv(const Json& rows) {
  std::string out;
  if (rows.empty()) return out;
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_field(cols[i]);
  out += "\r\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + (r.contains(cols[i]) ? csv_field(r[cols[i]]) : "");
    out += "\r\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed Hall-Littlewood fusion rings: nodes, Pieri coefficients, structure constants, checks."};
  app.set_version_flag("--version", HLFUSION_VERSION);
  Options o;
  app.add_option("--type", o.type, "Cartan type, e.g. A2, B3, C2, G2")->required();
  app.add_option("--pair", o.pair, "untwisted or twisted")->check(CLI::IsMember({"untwisted", "twisted"}));
  app.add_option("--level", o.level, "Level c > 1")->required();
  app.add_option("--t", o.t, "Common parameter t (rational or decimal)");
  app.add_option("--t-short", o.t_short, "Parameter on short roots");
  app.add_option("--t-long", o.t_long, "Parameter on long roots");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "Output file (default stdout)");
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--tol", o.tol, "Tolerance override key=value (repeatable)");
  app.add_flag("--timing", o.timing, "Add runtimes to the report");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_subcommand("nodes", "Node table, one row per mu in P-hat_c");
  auto* pieri = app.add_subcommand("pieri", "Pieri coefficients c^nu_{lambda,omega}");
  pieri->add_option("--lambda", o.lambda, "Weight in P_c, e.g. 1,0")->required();
  pieri->add_option("--omega", o.omega, "Minuscule or quasi-minuscule weight")->required();
  app.add_subcommand("fusion", "Fusion table at t = 0");
  app.add_subcommand("structure", "Structure constants at the given t");
  app.add_subcommand("verify", "Invariant suite for the configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  auto start = std::chrono::steady_clock::now();
  Json doc;
  bool ok = true;
  try {
    Job j = configure(o, command);
    Json meta = meta_of(o, j);
    Json rows;
    if (command == "nodes") rows = cmd_nodes(j);
    else if (command == "pieri") rows = cmd_pieri(o, j, meta);
    else if (command == "fusion") rows = cmd_fusion(j, meta);
    else if (command == "structure") rows = cmd_structure(j, meta);
    else rows = cmd_verify(o, j, meta, ok);
    meta["rows"] = rows.size();
    if (o.timing) meta["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    doc["meta"] = meta;
    doc["rows"] = rows;
  } catch (const ConfigError& e) {
    std::cerr << "hlfusion: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hlfusion: " << e.what() << "\n";
    return 1;
  }

  std::string text = o.format == "csv" ? render_csv(doc["rows"]) : doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "hlfusion: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  if (!ok) {
    for (const auto& r : doc["rows"])
      if (r["status"] == "fail") std::cerr << "hlfusion: check " << r["check"].get<std::string>() << " failed: " << r["detail"].get<std::string>() << "\n";
    return 1;
  }
  return 0;
}
