#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fhq/combinat/diagram.hpp"
#include "fhq/error.hpp"
#include "fhq/fh/psi.hpp"
#include "fhq/hecke/geck_rouquier.hpp"
#include "fhq/json_io.hpp"
#include "fhq/specht/specht.hpp"
#include "fhq/store.hpp"
#include "fhq/verify.hpp"

namespace {

using fhq::combinat::Partition;
using json = nlohmann::json;
namespace io = fhq::io;

constexpr int kFormatVersion = 1;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kGuard = 3 };

struct Globals {
  std::string format = "text";
  int max_n = 0;  // 0: per-command default
  std::string cache_dir;
  bool no_cache = false;
  bool timing = false;
};

// What a command produces: JSON payload plus the text rendering.
struct Output {
  json result;
  std::string text;
  int status = kOk;
};

// "" and "()" are both the empty partition.
Partition parse_partition(const std::string& s) { return Partition::parse(s == "()" ? "" : s); }

std::string hecke_text(const fhq::hecke::HeckeElem& z) {
  if (z.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : z.terms()) {
    out << (first ? "" : " + ") << "(" << c.to_string() << ")*T" << w.to_cycle_string();
    first = false;
  }
  return out.str();
}

json fhq_json(const fhq::fh::FHqElem& x) { return io::to_json(x.terms(), "coeff"); }

json laurent_map_json(const std::map<Partition, fhq::exact::Laurent>& m, const char* key) {
  json out = json::array();
  for (const auto& [lambda, c] : m) out.push_back({{"lambda", io::to_json(lambda)}, {key, io::to_json(c)}});
  return out;
}

std::string laurent_map_text(const std::map<Partition, fhq::exact::Laurent>& m, const std::string& prefix) {
  std::ostringstream out;
  for (const auto& [lambda, c] : m) out << prefix << lambda.to_string() << ": " << c.to_string() << "\n";
  return out.str();
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("FHQ_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::string(xdg) + "/fhq";
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/fhq";
  return ".fhq-cache";
}

int guard_or(int requested, int fallback) { return requested > 0 ? requested : fallback; }

std::optional<int> parse_e(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "0") return std::nullopt;
  std::size_t used = 0;
  int e = 0;
  try {
    e = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || e < 2) throw fhq::Error(fhq::ErrorKind::InvalidArgument, "--e expects an integer >= 2 or inf");
  return e;
}

Output run_verify(const std::string& suite, const fhq::verify::Options& options) {
  std::vector<std::string> ids;
  if (suite == "paper" || suite == "all")
    for (const auto& c : fhq::verify::acceptance_checks()) ids.push_back(c.id);
  if (suite == "properties" || suite == "all")
    for (const auto& c : fhq::verify::property_checks()) ids.push_back(c.id);
  Output out;
  out.result = json::array();
  std::ostringstream text;
  for (const auto& id : ids) {
    const auto r = fhq::verify::run(id, options);
    out.result.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    text << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.title << "  (" << r.detail << ")\n";
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << " [" << r.seconds << " s]\n";
    if (!r.passed) out.status = kFailed;
  }
  out.text = text.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Hecke algebra centres and the q-Farahat-Higman algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-n", g.max_n, "Size guard for Hecke and Specht computations");
  app.add_option("--cache-dir", g.cache_dir, "On-disk cache directory (env FHQ_CACHE_DIR)");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the on-disk cache");
  app.add_flag("--timing", g.timing, "Include wall time in the output");

  std::function<Output()> action;
  std::string command;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&command, name] { command = name; });
    return s;
  };

  int n = 0;
  std::string mu, nu, lambda, e_text, suite = "paper", method = "recursive", at = "jm";
  std::optional<int> at_q;
  bool check = false;
  std::uint64_t seed = 7;
  std::string cache_action;

  auto* gr = sub("gr-basis", "Geck-Rouquier basis of Z(H_n(q))");
  gr->add_option("--n", n, "Rank")->required()->check(CLI::PositiveNumber);
  gr->add_option("--mu", mu, "Reduced cycle type");
  gr->add_option("--method", method, "recursive or linear")->check(CLI::IsMember({"recursive", "linear"}));

  auto* mul = sub("multiply", "K_mu * K_nu in FH_q, or Gamma_mu * Gamma_nu in H_n(q) with --n");
  mul->add_option("--mu", mu)->required();
  mul->add_option("--nu", nu)->required();
  mul->add_option("--n", n, "Expand in Z(H_n(q)) instead");

  auto* phi = sub("phi", "Structure constants of K_mu K_nu");
  phi->add_option("--mu", mu)->required();
  phi->add_option("--nu", nu)->required();
  phi->add_option("--at-q", at_q, "Specialise q (only 1 is supported)")->check(CLI::IsMember({1}));

  auto* fmu = sub("fmu", "f_mu = Psi^-1(K_mu)");
  fmu->add_option("--mu", mu)->required();
  fmu->add_flag("--check", check, "Re-apply Psi and require K_mu");

  auto* psi = sub("psi", "Psi(e_nu) in the K basis");
  psi->add_option("--nu", nu, "e-monomial e_nu1 e_nu2 ...")->required();

  auto* chr = sub("char", "Central character of Gamma_mu on S^lambda");
  chr->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  chr->add_option("--lambda", lambda)->required();
  chr->add_option("--mu", mu)->required();
  chr->add_option("--at", at, "jm: JM eigenvalues q[c]_q; plain: [c]_q; rep: seminormal matrices")
      ->check(CLI::IsMember({"jm", "plain", "rep"}));

  auto* table = sub("char-table", "Central character of Gamma_mu on every S^lambda, lambda |- n");
  table->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  table->add_option("--mu", mu)->required();

  auto* blk = sub("blocks", "Shapes of size n grouped into blocks");
  blk->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  blk->add_option("--e", e_text, "Integer >= 2 or inf")->required();

  auto* core = sub("core", "e-core of lambda");
  core->add_option("--lambda", lambda)->required();
  core->add_option("--e", e_text)->required();

  auto* cont = sub("contents", "Contents and q-contents of lambda");
  cont->add_option("--lambda", lambda)->required();

  auto* ver = sub("verify", "Run the verification suites");
  ver->add_option("--suite", suite)->check(CLI::IsMember({"paper", "properties", "all"}));
  ver->add_option("--seed", seed);

  auto* cache = sub("cache", "Inspect or clear the on-disk cache");
  cache->add_option("action", cache_action)->required()->check(CLI::IsMember({"list", "clear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (g.cache_dir.empty()) g.cache_dir = default_cache_dir();
  std::shared_ptr<fhq::Store> store;
  if (!g.no_cache || command == "cache") {
    try {
      store = std::make_shared<fhq::Store>(g.cache_dir);
    } catch (const std::exception& e) {
      std::cerr << "warning: cache disabled: " << e.what() << "\n";
    }
  }
  if (!g.no_cache) fhq::set_default_store(store);

  const int hecke_guard = guard_or(g.max_n, fhq::hecke::kDefaultHeckeGuard);
  const int specht_guard = guard_or(g.max_n, fhq::specht::kDefaultSpechtGuard);
  fhq::fh::StructureOptions structure;
  structure.use_cache = !g.no_cache;

  auto body = [&]() -> Output {
    Output out;
    std::ostringstream text;
    if (command == "gr-basis") {
      const auto m = method == "linear" ? fhq::hecke::GrMethod::LinearSolve : fhq::hecke::GrMethod::Recursive;
      std::map<Partition, fhq::hecke::HeckeElem> basis;
      if (gr->count("--mu"))
        basis.emplace(parse_partition(mu), fhq::hecke::gr_element(n, parse_partition(mu), m, hecke_guard));
      else
        basis = fhq::hecke::geck_rouquier_basis(n, m, hecke_guard);
      out.result = {{"n", n}, {"basis", json::array()}};
      for (const auto& [p, z] : basis) {
        out.result["basis"].push_back({{"mu", io::to_json(p)}, {"element", io::to_json(z)}});
        text << "Gamma" << p.to_string() << " = " << hecke_text(z) << "\n";
      }
    } else if (command == "multiply") {
      const Partition a = parse_partition(mu), b = parse_partition(nu);
      if (n > 0) {
        if (n > hecke_guard) throw fhq::Error(fhq::ErrorKind::SizeGuard, "n exceeds --max-n");
        const auto z = fhq::hecke::gr_element(n, a, fhq::hecke::GrMethod::Recursive, hecke_guard) *
                       fhq::hecke::gr_element(n, b, fhq::hecke::GrMethod::Recursive, hecke_guard);
        const auto c = fhq::hecke::gamma_expand(z);
        out.result = {{"n", n}, {"mu", io::to_json(a)}, {"nu", io::to_json(b)}, {"terms", laurent_map_json(c, "coeff")}};
        text << laurent_map_text(c, "Gamma");
      } else {
        const auto x = fhq::fh::fhq_mul(fhq::fh::FHqElem::basis(a), fhq::fh::FHqElem::basis(b), structure);
        out.result = {{"mu", io::to_json(a)}, {"nu", io::to_json(b)}, {"terms", fhq_json(x)}};
        text << x.to_string() << "\n";
      }
    } else if (command == "phi") {
      const Partition a = parse_partition(mu), b = parse_partition(nu);
      auto c = fhq::fh::structure_constants(a, b, structure);
      if (at_q) {
        fhq::fh::Coefficients classical;
        for (const auto& [p, v] : c)
          if (!v.at_q_one().is_zero()) classical.emplace(p, v.at_q_one());
        c = std::move(classical);
      }
      out.result = {{"mu", io::to_json(a)}, {"nu", io::to_json(b)}, {"terms", io::to_json(c, "phi")}};
      if (at_q) out.result["at_q"] = *at_q;
      for (const auto& [p, v] : c) text << (at_q ? "X" : "K") << p.to_string() << ": " << v.to_string() << "\n";
    } else if (command == "fmu") {
      const Partition p = parse_partition(mu);
      const auto f = fhq::fh::psi_inverse(p, structure);
      const auto e = fhq::symfunc::m_to_e(f);
      out.result = {{"mu", io::to_json(p)}, {"m_basis", io::to_json(f)}, {"e_basis", io::to_json(e)}};
      text << "f" << p.to_string() << " = " << e.to_string() << "\n  = " << f.to_string() << "\n";
      if (check) {
        const bool ok = fhq::fh::psi(f, structure) == fhq::fh::FHqElem::basis(p);
        out.result["check"] = ok;
        text << "round trip: " << (ok ? "ok" : "FAILED") << "\n";
        if (!ok) out.status = kFailed;
      }
    } else if (command == "psi") {
      const Partition p = parse_partition(nu);
      const auto x = fhq::fh::psi(fhq::symfunc::EPolyElem::product(p), structure);
      out.result = {{"nu", io::to_json(p)}, {"terms", fhq_json(x)}};
      text << x.to_string() << "\n";
    } else if (command == "char") {
      const Partition l = parse_partition(lambda), p = parse_partition(mu);
      if (l.size() != n) throw fhq::Error(fhq::ErrorKind::InvalidArgument, "lambda must be a partition of n");
      if (n > specht_guard) throw fhq::Error(fhq::ErrorKind::SizeGuard, "n exceeds --max-n");
      const auto v = at == "plain" ? fhq::specht::central_character_at_q_contents(l, p)
                     : at == "rep" ? fhq::specht::central_character_by_representation(l, p)
                                   : fhq::specht::central_character(l, p);
      out.result = {{"n", n}, {"lambda", io::to_json(l)}, {"mu", io::to_json(p)}, {"at", at}, {"value", io::to_json(v)}};
      text << v.to_string() << "\n";
    } else if (command == "char-table") {
      if (n > specht_guard) throw fhq::Error(fhq::ErrorKind::SizeGuard, "n exceeds --max-n");
      const Partition p = parse_partition(mu);
      const auto t = fhq::specht::character_table(n, p);
      out.result = {{"n", n}, {"mu", io::to_json(p)}, {"values", laurent_map_json(t, "value")}};
      text << laurent_map_text(t, "S");
    } else if (command == "blocks") {
      const auto b = fhq::specht::blocks(n, parse_e(e_text));
      out.result = {{"n", n}, {"e", b.e ? json(*b.e) : json("inf")}, {"blocks", json::array()}};
      for (const auto& block : b.blocks) {
        json shapes = json::array();
        for (const auto& l : block) {
          shapes.push_back(io::to_json(l));
          text << l.to_string() << " ";
        }
        out.result["blocks"].push_back(shapes);
        text << "\n";
      }
    } else if (command == "core") {
      const Partition l = parse_partition(lambda);
      const auto e = parse_e(e_text);
      const Partition c = e ? fhq::combinat::e_core(l, *e) : l;
      out.result = {{"lambda", io::to_json(l)}, {"e", e ? json(*e) : json("inf")}, {"core", io::to_json(c)}};
      text << c.to_csv() << "\n";
    } else if (command == "contents") {
      const Partition l = parse_partition(lambda);
      const auto c = fhq::combinat::contents(l);
      const auto qc = fhq::combinat::q_contents(l);
      json qs = json::array();
      for (const auto& x : qc) qs.push_back(io::to_json(x));
      out.result = {{"lambda", io::to_json(l)}, {"contents", c}, {"q_contents", qs}};
      for (std::size_t i = 0; i < c.size(); ++i) text << c[i] << "  " << qc[i].to_string() << "\n";
    } else if (command == "verify") {
      fhq::verify::Options o;
      o.seed = seed;
      o.max_n = guard_or(g.max_n, 5);
      return run_verify(suite, o);
    } else if (command == "cache") {
      if (!store) throw fhq::Error(fhq::ErrorKind::Io, "no usable cache directory");
      if (cache_action == "list") {
        out.result = {{"dir", store->dir().string()}, {"records", json::array()}};
        for (const auto& [kind, key] : store->list()) {
          out.result["records"].push_back({{"kind", kind}, {"key", key}});
          text << kind << "  " << key << "\n";
        }
      } else {
        const auto removed = store->clear();
        out.result = {{"dir", store->dir().string()}, {"removed", removed}};
        text << "removed " << removed << " records\n";
      }
    }
    out.text = text.str();
    return out;
  };

  const auto start = std::chrono::steady_clock::now();
  Output out;
  try {
    out = body();
  } catch (const fhq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == fhq::ErrorKind::SizeGuard) return kGuard;
    if (e.kind() == fhq::ErrorKind::InvalidArgument) return kUsage;
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (g.format == "json") {
    json envelope = {{"format_version", kFormatVersion}, {"command", command}, {"result", out.result}};
    if (g.timing) envelope["timing"] = {{"seconds", seconds}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << out.text;
    if (g.timing) std::cout << "time: " << seconds << " s\n";
  }
  return out.status;
}
