// weyl_ising_cli: constructions and checks as JSON reports.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weyl_ising/weyl_ising.hpp"

namespace wi = weyl_ising;
namespace acc = weyl_ising::acceptance;
using json = nlohmann::ordered_json;
using weyl_ising::operator*;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json exact(const wi::Rational& q) { return json{{"exact", q.get_str()}, {"decimal", q.get_d()}}; }
json exact(const wi::Integer& z) { return json{{"exact", z.get_str()}, {"decimal", z.get_d()}}; }

json root_json(const wi::HalfVec& v) {
  json a = json::array();
  for (int x : v) a.push_back(x % 2 == 0 ? std::to_string(x / 2) : std::to_string(x) + "/2");
  return a;
}

class Report {
 public:
  Report(std::string command, json parameters) {
    doc_["schema"] = 1;
    doc_["tool"] = "weyl_ising_cli";
    doc_["version"] = kVersion;
    doc_["command"] = std::move(command);
    doc_["parameters"] = std::move(parameters);
    doc_["results"] = json::object();
    doc_["checks"] = json::array();
  }

  json& results() { return doc_["results"]; }

  void check(const std::string& name, bool ok, const std::string& expected, const std::string& actual) {
    add(name, ok ? acc::Status::Pass : acc::Status::Fail, expected, actual);
  }
  template <class A, class B>
  void equal(const std::string& name, const A& expected, const B& actual) {
    check(name, expected == actual, str(expected), str(actual));
  }
  void skipped(const std::string& name, const std::string& why) { add(name, acc::Status::Skipped, "", why); }

  void add(const std::string& name, acc::Status s, const std::string& expected, const std::string& actual) {
    doc_["checks"].push_back({{"name", name}, {"status", acc::to_string(s)}, {"expected", expected}, {"actual", actual}});
    failed_ = failed_ || s == acc::Status::Fail;
  }

  bool failed() const { return failed_; }

  json finish() {
    doc_["status"] = failed_ ? "fail" : "pass";
    return doc_;
  }

 private:
  template <class T>
  static std::string str(const T& v) {
    if constexpr (std::is_same_v<T, std::string>)
      return v;
    else if constexpr (std::is_arithmetic_v<T>)
      return std::to_string(v);
    else
      return v.get_str();
  }

  json doc_;
  bool failed_ = false;
};

wi::RootKind parse_kind(std::string k) {
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) { return std::toupper(c); });
  if (k == "A") return wi::RootKind::A;
  if (k == "D") return wi::RootKind::D;
  if (k == "E") return wi::RootKind::E;
  throw UsageError("unsupported root system kind '" + k + "' (expected A, D or E)");
}

wi::RootSystem build(const std::string& kind, int rank) {
  try {
    return wi::RootSystem::build(parse_kind(kind), rank);
  } catch (const wi::Error& e) {
    throw UsageError(e.what());
  }
}

std::string profile_string(const std::map<unsigned long, std::size_t>& p) {
  std::string s;
  for (const auto& [o, c] : p) s += (s.empty() ? "" : ",") + std::to_string(o) + ":" + std::to_string(c);
  return "{" + s + "}";
}

// ---------------------------------------------------------------------------

json cmd_roots(const std::string& kind, int rank) {
  const auto rs = build(kind, rank);
  Report rep("roots", {{"kind", kind}, {"rank", rank}});
  const int h = rs.coxeter_number(), l = rs.rank();
  auto& res = rep.results();
  res["name"] = rs.name();
  res["rank"] = l;
  res["ambient_dim"] = rs.ambient_dim();
  res["roots"] = rs.roots().size();
  res["positive_roots"] = rs.positive_roots().size();
  res["coxeter_number"] = h;
  json simple = json::array();
  for (const auto& s : rs.simple_roots()) simple.push_back(root_json(s));
  res["simple_roots"] = simple;
  json m = json::object();
  bool uniform = true;
  for (const auto& a : rs.positive_roots()) {
    const int v = rs.m_alpha(a);
    uniform = uniform && v == 2 * (h - 2);
    m[wi::AxisAlgebra::format_root(a)] = v;
  }
  res["m_alpha"] = m;
  rep.equal("#roots = h*l", std::size_t(h * l), rs.roots().size());
  rep.equal("#positive = h*l/2", std::size_t(h * l / 2), rs.positive_roots().size());
  rep.check("m_alpha = 2(h-2) for every positive root", uniform, std::to_string(2 * (h - 2)), uniform ? std::to_string(2 * (h - 2)) : "varies");
  const auto type = wi::dynkin_type(rs.roots());
  rep.equal("Dynkin type", rs.name(), type.size() == 1 ? type.front() : std::string("?"));
  return rep.finish();
}

json cmd_lattice(const std::string& name, int n) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::toupper(c); });
  Report rep("lattice", {{"name", key}, {"n", n}});
  wi::IdentificationReport id;
  try {
    id = wi::verify_identification(key, n);
  } catch (const wi::Error& e) {
    throw UsageError(e.what());
  }
  auto& res = rep.results();
  res["model"] = id.name + " (x) E8";
  res["rank"] = id.rank;
  res["determinant"] = exact(id.determinant);
  res["even"] = id.even;
  rep.check("Gram matrix of the explicit basis map equals the Kronecker Gram", id.gram_matches, "true", id.gram_matches ? "true" : "false");
  rep.check("image equals the model lattice (Hermite form)", id.image_matches, "true", id.image_matches ? "true" : "false");
  rep.equal("determinant", id.expected_determinant, id.determinant);
  rep.check("even", id.even, "true", id.even ? "true" : "false");
  if (id.rank <= wi::kShellRankCap) {
    const auto rs = key == "A" ? wi::RootSystem::build(wi::RootKind::A, n - 1) : wi::RootSystem::build(wi::RootKind::D, n);
    const auto l = wi::tensor_model(rs);
    const auto s2 = wi::shell(l, wi::Rational(2)).size();
    const auto s4 = wi::shell(l, wi::Rational(4)).size();
    res["shell_norm2"] = s2;
    res["shell_norm4"] = s4;
    rep.equal("no norm-2 vectors", std::size_t{0}, s2);
  } else {
    rep.skipped("no norm-2 vectors", "rank " + std::to_string(id.rank) + " exceeds the shell enumeration cap");
  }
  return rep.finish();
}

json cmd_griess(const std::string& kind, int rank, bool oracle) {
  const auto rs = build(kind, rank);
  if (oracle && !(rs.kind() == wi::RootKind::A && rank <= 3))
    throw UsageError("--oracle is limited to A(n-1) with n <= 4");
  Report rep("griess", {{"kind", kind}, {"rank", rank}, {"oracle", oracle}});
  const auto alg = wi::AxisAlgebra::from_root_system(rs);
  const long h = rs.coxeter_number(), l = rs.rank();
  auto& res = rep.results();
  res["name"] = rs.name();
  res["dim"] = alg.size();
  const bool pd = wi::gram_positive_definite(alg);
  res["gram_positive_definite"] = pd;
  rep.equal("dim = #positive roots", rs.positive_roots().size(), alg.size());
  rep.check("Gram positive definite", pd, "true", pd ? "true" : "false");
  try {
    const auto v = wi::virasoro(alg);
    const bool symmetric = v.vector == wi::make_rational(32, h + 30) * alg.sum_of_axes();
    res["virasoro"] = {{"coefficient", exact(v.vector.front())},
                       {"uniform", symmetric},
                       {"norm", exact(v.norm)},
                       {"central_charge", exact(v.central_charge)}};
    rep.equal("central charge = 8hl/(h+30)", wi::central_charge_formula(rs), v.central_charge);
    rep.equal("<w,w> = 4hl/(h+30)", wi::make_rational(4 * h * l, h + 30), v.norm);
    rep.check("w = 32/(h+30) sum e(alpha)", symmetric, "true", symmetric ? "true" : "false");
    rep.check("w.x = 2x for every axis", v.is_conformal, "true", v.is_conformal ? "true" : "false");
  } catch (const wi::Error& e) {
    rep.check("Virasoro solve", false, "unique solution", e.what());
  }
  if (oracle) {
    const wi::Oracle o(static_cast<std::size_t>(rs.ambient_dim()));
    std::vector<wi::Weight2Element> e;
    for (const auto& a : rs.positive_roots()) e.push_back(wi::ising_vector_for_root(a));
    bool products = true, pairings = true, normal = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      normal = normal && o.product(e[i], e[i]) == wi::CycInt8Scalar(2) * e[i] &&
               o.pairing(e[i], e[i]) == wi::CycInt8Scalar(wi::make_rational(1, 4));
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const auto closed = acc::realize_axis_element(alg.product(alg.basis(i), alg.basis(j)), e, o.dim());
        products = products && o.product(e[i], e[j]) == closed;
        pairings = pairings && o.pairing(e[i], e[j]) == wi::CycInt8Scalar(alg.basis_pairing(i, j));
      }
    }
    res["oracle"] = {{"pairs", e.size() * (e.size() - 1) / 2}, {"products", products}, {"pairings", pairings}, {"ising", normal}};
    rep.check("oracle products = closed forms", products, "true", products ? "true" : "false");
    rep.check("oracle pairings = closed forms", pairings, "true", pairings ? "true" : "false");
    rep.check("oracle e.e = 2e and <e,e> = 1/4", normal, "true", normal ? "true" : "false");
  }
  return rep.finish();
}

json cmd_group(const std::string& kind, int rank) {
  const auto rs = build(kind, rank);
  Report rep("group", {{"kind", kind}, {"rank", rank}});
  const auto w = wi::weyl_group(rs);
  const bool minus = wi::contains_minus_one(rs, w);
  const auto alg = wi::AxisAlgebra::from_root_system(rs);
  const auto g = wi::miyamoto_group(alg);
  const auto profile = wi::transposition_profile(alg);
  const long h = rs.coxeter_number(), l = rs.rank();
  auto& res = rep.results();
  res["name"] = rs.name();
  res["weyl_order"] = exact(w.order());
  res["minus_one_in_weyl"] = minus;
  res["miyamoto_order"] = exact(g.order());
  json prof = json::object();
  for (const auto& [o, c] : profile) prof[std::to_string(o)] = c;
  res["transposition_profile"] = prof;
  rep.equal("|G(R)| = |W|/|W cap <-1>|", wi::Integer(w.order() / (minus ? 2 : 1)), g.order());
  bool within = true;
  for (const auto& [o, c] : profile) within = within && o >= 1 && o <= 3;
  rep.check("profile within {1,2,3}", within, "subset of {1,2,3}", profile_string(profile));
  rep.equal("order-3 pairs = (hl/2)(h-2)", std::size_t(h * l / 2 * (h - 2)), profile.count(3) ? profile.at(3) : std::size_t{0});
  return rep.finish();
}

json cmd_triality(int n) {
  if (n < 2 || n > 10) throw UsageError("triality needs 2 <= n <= 10");
  Report rep("triality", {{"n", n}});
  auto& res = rep.results();
  const auto d = wi::find_delta();
  res["delta"] = root_json(d.delta);
  res["delta_norm"] = exact(d.norm);
  res["K"] = {{"index", exact(d.index)}, {"determinant", exact(d.determinant)}, {"roots", d.root_count}, {"type", d.type}};
  rep.equal("K roots", std::size_t{72}, d.root_count);
  rep.equal("det K", wi::Rational(9), d.determinant);
  rep.equal("type K", std::string("A8"), d.type.size() == 1 ? d.type.front() : std::string("?"));
  const auto alg = wi::twisted_axis_algebra(n);
  res["axes"] = alg.size();
  const auto v = wi::virasoro(alg);
  res["central_charge"] = exact(v.central_charge);
  rep.equal("twisted central charge = 8n(n-1)/(n+9)", wi::twisted_central_charge_formula(n), v.central_charge);
  if (n >= 3) {
    const auto g = wi::twisted_group(n);
    res["group"] = {{"order", exact(g.order)},
                    {"kernel_order", exact(g.kernel_order)},
                    {"shape", "3^" + std::to_string(g.exponent_k) + ":S" + std::to_string(n)},
                    {"untwisted_order", exact(g.untwisted_order)}};
    rep.equal("order = 3^k n!", g.expected_order, g.order);
    rep.equal("kernel = 3^k", wi::pow(wi::Integer(3), g.exponent_k), g.kernel_order);
    rep.equal("<tau_(i,j,0)> = S_n", wi::factorial(n), g.untwisted_order);
    if (n <= 7) {
      const auto ab = wi::abstract_twisted_group(n);
      res["abstract_order"] = exact(ab.order);
      rep.equal("abstract model order", g.order, ab.order);
      rep.equal("abstract model kernel", g.kernel_order, ab.kernel_order);
    } else {
      rep.skipped("abstract model order", "enumeration limited to n <= 7");
    }
  }
  return rep.finish();
}

wi::Rational parse_entry(const json& v) {
  if (v.is_number_integer()) return wi::Rational(v.get<long>());
  if (v.is_string()) {
    wi::Rational q;
    if (q.set_str(v.get<std::string>(), 10) != 0) throw UsageError("bad Gram entry '" + v.get<std::string>() + "'");
    q.canonicalize();
    return q;
  }
  throw UsageError("Gram entries must be integers or rational strings");
}

json cmd_audit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.contains("gram") || !doc["gram"].is_array()) throw UsageError("expected an object with a \"gram\" array");
  const auto& rows = doc["gram"];
  wi::QMatrix g(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != rows.size()) throw UsageError("Gram matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) g(i, j) = parse_entry(rows[i][j]);
  }
  if (!g.is_symmetric()) throw UsageError("Gram matrix must be symmetric");
  Report rep("audit", {{"file", path}, {"rank", rows.size()}});
  auto& res = rep.results();
  const bool pd = wi::is_positive_definite(g);
  rep.check("positive definite", pd, "true", pd ? "true" : "false");
  if (!pd) return rep.finish();
  const auto l = wi::Lattice::from_gram(g);
  res["determinant"] = exact(l.determinant());
  res["integral"] = l.is_integral();
  res["even"] = l.is_even();
  if (l.is_integral()) {
    json inv = json::array();
    for (const auto& dv : wi::discriminant_group(l).divisors) inv.push_back(dv.get_str());
    res["discriminant_invariants"] = inv;
    res["ssd"] = wi::is_ssd(l);
    rep.equal("|D(L)| = det", l.determinant(), wi::Rational(wi::discriminant_group(l).order()));
  }
  if (l.rank() <= wi::kShellRankCap) {
    res["shell_norm2"] = wi::shell(l, wi::Rational(2)).size();
    res["shell_norm4"] = wi::shell(l, wi::Rational(4)).size();
  } else {
    rep.skipped("shells", "rank exceeds the shell enumeration cap");
  }
  return rep.finish();
}

unsigned worker_count() {
  if (const char* env = std::getenv("WEYL_ISING_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

json cmd_report(int max_n, bool timing) {
  if (max_n < 3 || max_n > 7) throw UsageError("--max-n must lie in [3, 7]");
  Report rep("report", {{"max_n", max_n}});
  const auto runs = acc::runners(max_n);
  std::vector<acc::CriterionResult> results(runs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < runs.size();) results[i] = acc::timed(runs[i]);
  };
  std::vector<std::thread> pool;
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(runs.size()));
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json criteria = json::array();
  for (const auto& r : results) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"status", acc::to_string(c.status)}, {"expected", c.expected}, {"actual", c.actual}});
    criteria.push_back({{"id", r.id},
                        {"title", r.title},
                        {"status", r.exact_pass() ? "pass" : "fail"},
                        {"budget_seconds", r.budget_seconds},
                        {"checks", checks}});
    if (timing) criteria.back()["elapsed_seconds"] = r.elapsed_seconds;
    rep.check("criterion " + std::to_string(r.id) + ": " + r.title, r.exact_pass(), "pass", r.exact_pass() ? "pass" : "fail");
  }
  rep.results()["criteria"] = criteria;
  return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Griess algebras of E8-type Ising vectors indexed by ADE roots"};
  app.require_subcommand(1);
  app.fallthrough();  // -o and --timing may follow the subcommand
  std::string out_path;
  bool timing = false;
  app.add_option("-o,--output", out_path, "write the JSON report to this file");
  app.add_flag("--timing", timing, "include wall-clock timings in the report");
  app.set_version_flag("--version", kVersion);

  std::string kind, name, file;
  int rank = 0, n = 0, max_n = 7;
  bool oracle = false;

  auto* roots = app.add_subcommand("roots", "root system data");
  roots->add_option("kind", kind)->required();
  roots->add_option("rank", rank)->required();

  auto* lattice = app.add_subcommand("lattice", "verify an explicit lattice identification (A n, D n, E8, E7, E6)");
  lattice->add_option("name", name)->required();
  lattice->add_option("n", n);

  auto* griess = app.add_subcommand("griess", "Griess algebra, Virasoro element and central charge");
  griess->add_option("kind", kind)->required();
  griess->add_option("rank", rank)->required();
  griess->add_flag("--oracle", oracle, "cross-check against the weight-2 oracle (A, rank <= 3)");

  auto* group = app.add_subcommand("group", "Weyl and Miyamoto groups");
  group->add_option("kind", kind)->required();
  group->add_option("rank", rank)->required();

  auto* triality = app.add_subcommand("triality", "twisted axes, their group and central charge");
  triality->add_option("n", n)->required();

  auto* audit = app.add_subcommand("audit", "invariants of a Gram matrix given as {\"gram\": [[...]]}");
  audit->add_option("file", file)->required();

  auto* report = app.add_subcommand("report", "run every acceptance criterion");
  report->add_option("--max-n", max_n, "largest n for the twisted constructions (3..7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  json doc;
  try {
    if (*roots) doc = cmd_roots(kind, rank);
    else if (*lattice) doc = cmd_lattice(name, n);
    else if (*griess) doc = cmd_griess(kind, rank, oracle);
    else if (*group) doc = cmd_group(kind, rank);
    else if (*triality) doc = cmd_triality(n);
    else if (*audit) doc = cmd_audit(file);
    else doc = cmd_report(max_n, timing);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const wi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  // wall-clock data only on request, so default output stays byte-identical
  if (timing) doc["timing"] = {{"elapsed_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};

  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "usage error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << text;
  }
  return doc["status"] == "pass" ? 0 : 1;
}
