#include "gdual/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gdual/duality.hpp"
#include "gdual/error.hpp"
#include "gdual/inequalities.hpp"
#include "json.hpp"

namespace gdual {

namespace {

using nlohmann::json;

FiniteGroup load_group(const std::string& descriptor) {
  const std::string prefix = "builtin:";
  if (descriptor.rfind(prefix, 0) == 0) return make_builtin(descriptor.substr(prefix.size()));
  return read_gtab_file(descriptor);
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json group_json(const std::string& descriptor, const FiniteGroup& g) {
  json j;
  j["descriptor"] = descriptor;
  j["order"] = g.order;
  j["hash"] = group_hash(g);
  j["abelian"] = g.is_abelian();
  return j;
}

json config_json(const RunConfig& cfg) {
  json j;
  j["tol"] = cfg.tol;
  j["eps"] = cfg.certificate_eps;
  j["restarts"] = cfg.restarts;
  j["max_iters"] = cfg.max_iters;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  return j;
}

void emit(std::ostream& out, const std::string& out_path, const json& j, RunConfig::Format fmt,
          const std::string& text_summary) {
  std::string payload =
      fmt == RunConfig::Format::json ? j.dump(2) + "\n" : text_summary;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) fail(Errc::UsageError, "cannot write '" + out_path + "'");
    f << payload;
  } else {
    out << payload;
  }
}

struct CommonArgs {
  std::string group;
  std::string out_path;
  std::string format = "json";
  RunConfig cfg;
  bool timings = false;

  void attach(CLI::App* cmd, bool needs_group = true) {
    auto* opt = cmd->add_option("--group", group, "builtin:<name> or path to a .gtab file");
    if (needs_group) opt->required();
    cmd->add_option("-o,--output", out_path, "write the report to a file instead of stdout");
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--tol", cfg.tol, "PSD tolerance scale");
    cmd->add_option("--eps", cfg.certificate_eps, "certificate depth threshold");
    cmd->add_option("--restarts", cfg.restarts, "optimizer restarts");
    cmd->add_option("--max-iters", cfg.max_iters, "optimizer alternation cap");
    cmd->add_option("--samples", cfg.samples, "sampling target per family");
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_flag("--timings", timings, "include wall-clock timings (breaks byte determinism)");
  }

  RunConfig::Format fmt() const {
    return format == "text" ? RunConfig::Format::text : RunConfig::Format::json;
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void maybe_add_timing(json& j, const CommonArgs& a, const Stopwatch& sw) {
  if (a.timings) j["timings"] = {{"seconds", sw.seconds()}};
}

int cmd_gen(const CommonArgs& a, std::ostream& out) {
  const FiniteGroup g = load_group(a.group);
  std::vector<std::string> comments = {a.group,
                                       "element orders: " + [&] {
                                         std::string s;
                                         for (int o : element_orders(g))
                                           s += (s.empty() ? "" : " ") + std::to_string(o);
                                         return s;
                                       }()};
  if (!a.out_path.empty()) {
    std::ofstream f(a.out_path);
    if (!f) fail(Errc::UsageError, "cannot write '" + a.out_path + "'");
    write_gtab(f, g, comments);
  } else {
    write_gtab(out, g, comments);
  }
  return 0;
}

int cmd_info(const CommonArgs& a, int dump_element, std::ostream& out) {
  const Stopwatch sw;
  const FiniteGroup g = load_group(a.group);
  json j;
  j["command"] = "info";
  j["group"] = group_json(a.group, g);
  j["identity"] = g.identity;
  j["element_orders"] = element_orders(g);
  j["inverses"] = g.inverses;
  if (dump_element >= 0) {
    if (dump_element >= g.order) fail(Errc::IndexOutOfRange, "dump element");
    const CMatrix m = cayley_natural(g).matrix(dump_element);
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
      rows.push_back(row);
    }
    j["matrix"] = rows;
  }
  maybe_add_timing(j, a, sw);

  std::ostringstream text;
  text << "group " << a.group << ": order " << g.order << ", "
       << (g.is_abelian() ? "abelian" : "nonabelian") << ", hash " << group_hash(g) << "\n";
  emit(out, a.out_path, j, a.fmt(), text.str());
  return 0;
}

int cmd_verify_abelian(const CommonArgs& a, std::ostream& out) {
  const Stopwatch sw;
  const FiniteGroup g = load_group(a.group);
  if (!g.is_abelian()) fail(Errc::NotAbelian, "verify-abelian needs an abelian group");

  int pass = 0;
  json failures = json::array();
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      const std::vector<int> cands = candidate_products(g, x, y, a.cfg);
      if (cands == std::vector<int>{g.mul(x, y)}) {
        ++pass;
      } else {
        failures.push_back({{"a", x}, {"b", y}, {"candidates", cands}});
      }
    }

  json j;
  j["command"] = "verify-abelian";
  j["group"] = group_json(a.group, g);
  j["config"] = config_json(a.cfg);
  j["pairs"] = g.order * g.order;
  j["singleton_product_pairs"] = pass;
  j["failures"] = failures;
  maybe_add_timing(j, a, sw);
  const bool ok = failures.empty();

  std::ostringstream text;
  text << "verify-abelian " << a.group << ": " << pass << "/" << g.order * g.order
       << " pairs with the unique product, " << (ok ? "PASS" : "FAIL") << "\n";
  emit(out, a.out_path, j, a.fmt(), text.str());
  return ok ? 0 : 1;
}

int cmd_verify_products(const CommonArgs& a, std::ostream& out) {
  const Stopwatch sw;
  const FiniteGroup g = load_group(a.group);
  const auto blurred = reconstruct_blurred(g, a.cfg);

  int pass = 0;
  json failures = json::array();
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      std::vector<int> expected = {g.mul(x, y)};
      if (g.mul(y, x) != expected[0]) expected.push_back(g.mul(y, x));
      std::sort(expected.begin(), expected.end());
      if (blurred[x][y] == expected) {
        ++pass;
      } else {
        failures.push_back(
            {{"a", x}, {"b", y}, {"candidates", blurred[x][y]}, {"expected", expected}});
      }
    }

  json j;
  j["command"] = "verify-products";
  j["group"] = group_json(a.group, g);
  j["config"] = config_json(a.cfg);
  j["pairs"] = g.order * g.order;
  j["matching_pairs"] = pass;
  j["failures"] = failures;
  maybe_add_timing(j, a, sw);
  const bool ok = failures.empty();

  std::ostringstream text;
  text << "verify-products " << a.group << ": " << pass << "/" << g.order * g.order
       << " pairs equal {ab, ba}, " << (ok ? "PASS" : "FAIL") << "\n";
  emit(out, a.out_path, j, a.fmt(), text.str());
  return ok ? 0 : 1;
}

int cmd_certify(const CommonArgs& a, int ea, int eb, int ex, std::ostream& out) {
  const Stopwatch sw;
  const FiniteGroup g = load_group(a.group);
  const UniversalResult res = universal_positivity(g, ea, eb, ex, a.cfg);

  json j;
  j["command"] = "certify";
  j["group"] = group_json(a.group, g);
  j["config"] = config_json(a.cfg);
  j["a"] = ea;
  j["b"] = eb;
  j["x"] = ex;
  j["holds"] = res.holds;
  j["best_value"] = res.best_value;
  if (res.certificate) j["certificate"] = json::parse(certificate_to_json(*res.certificate));
  maybe_add_timing(j, a, sw);

  std::ostringstream text;
  text << "certify (" << ea << "," << eb << "," << ex << ") on " << a.group << ": "
       << (res.holds ? "holds" : "refuted") << " (best value " << res.best_value << ")\n";
  emit(out, a.out_path, j, a.fmt(), text.str());
  return res.holds ? 0 : 1;
}

int cmd_recheck(const CommonArgs& a, const std::string& cert_path, std::ostream& out) {
  const Stopwatch sw;
  std::ifstream f(cert_path);
  if (!f) fail(Errc::ParseError, "cannot open '" + cert_path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const Certificate cert = certificate_from_json(buf.str());

  const double revalue = certificate_value(cert);
  bool value_matches = std::abs(revalue - cert.value) <= 1e-10;
  bool deep_enough = revalue <= -a.cfg.certificate_eps;
  bool state_ok = true;
  bool hash_ok = true;
  bool vector_ok = true;
  if (!a.group.empty()) {
    const FiniteGroup g = load_group(a.group);
    hash_ok = group_hash(g) == cert.group_hash;
    state_ok = static_cast<int>(cert.state.size()) == g.order &&
               is_positive_definite(g, cert.state, a.cfg.tol);
    if (cert.vector.size() == cert.state.size() && hash_ok) {
      // The recorded unit vector must reproduce the recorded state values.
      const PermutationRep rep = cayley_natural(g);
      for (int e = 0; e < g.order; ++e)
        if (std::abs(rep.vector_state_value(e, cert.vector) - cert.state[e]) > 1e-9)
          vector_ok = false;
    }
  }
  const bool valid = value_matches && deep_enough && state_ok && hash_ok && vector_ok;

  json j;
  j["command"] = "recheck";
  j["certificate_file"] = cert_path;
  j["stored_value"] = cert.value;
  j["recomputed_value"] = revalue;
  j["value_matches"] = value_matches;
  j["deep_enough"] = deep_enough;
  j["state_positive_definite"] = state_ok;
  j["hash_matches"] = hash_ok;
  j["vector_reproduces_state"] = vector_ok;
  j["valid"] = valid;
  maybe_add_timing(j, a, sw);

  std::ostringstream text;
  text << "recheck " << cert_path << ": " << (valid ? "VALID" : "INVALID") << " (value " << revalue
       << ")\n";
  emit(out, a.out_path, j, a.fmt(), text.str());
  return valid ? 0 : 1;
}

int cmd_inequalities(const CommonArgs& a, std::ostream& out) {
  const Stopwatch sw;
  const FiniteGroup g = load_group(a.group);
  const GapSummary s = sample_inequality_gaps(g, a.cfg);
  const bool ok = s.overall_min() >= -a.cfg.tol;

  json j;
  j["command"] = "inequalities";
  j["group"] = group_json(a.group, g);
  j["config"] = config_json(a.cfg);
  j["min_gap"] = {{"nash", s.min_nash},
                  {"sharp_nash", s.min_sharp},
                  {"coord_nash", s.min_coord},
                  {"second_derivative", s.min_second}};
  j["samples"] = s.samples_per_family;
  j["seed"] = s.seed;
  j["pass"] = ok;
  maybe_add_timing(j, a, sw);

  std::ostringstream text;
  text << "inequalities " << a.group << ": min gaps nash=" << s.min_nash
       << " sharp=" << s.min_sharp << " coord=" << s.min_coord << " second=" << s.min_second
       << " over " << s.samples_per_family << " samples/family, " << (ok ? "PASS" : "FAIL")
       << "\n";
  emit(out, a.out_path, j, a.fmt(), text.str());
  return ok ? 0 : 1;
}

int cmd_dual(const CommonArgs& a, std::ostream& out) {
  const Stopwatch sw;
  const FiniteGroup g = load_group(a.group);
  const DualGroupResult res = dual_group(g, a.cfg.seed);
  const bool ok = !res.isomorphism.empty();

  json j;
  j["command"] = "dual";
  j["group"] = group_json(a.group, g);
  j["config"] = config_json(a.cfg);
  j["dual_table"] = res.dual.table;
  j["isomorphism"] = ok ? json(res.isomorphism) : json(nullptr);
  j["min_separation"] = res.min_separation;
  maybe_add_timing(j, a, sw);

  std::ostringstream text;
  text << "dual " << a.group << ": reconstructed order " << res.dual.order << ", isomorphic "
       << (ok ? "yes" : "NO") << ", fingerprint separation " << res.min_separation << "\n";
  emit(out, a.out_path, j, a.fmt(), text.str());
  return ok ? 0 : 1;
}

int cmd_reconstruct(const CommonArgs& a, const std::string& mode, std::ostream& out) {
  const Stopwatch sw;
  const FiniteGroup g = load_group(a.group);
  json j;
  j["command"] = "reconstruct";
  j["group"] = group_json(a.group, g);
  j["config"] = config_json(a.cfg);
  j["mode"] = mode;
  bool ok = false;
  std::ostringstream text;

  if (mode == "abelian") {
    const AbelianStateOracle oracle = make_hidden_oracle(g, a.cfg.seed);
    const FiniteGroup rec = reconstruct_abelian(oracle, a.cfg.tol);
    const auto iso = find_isomorphism(rec, g);
    ok = iso.has_value();
    j["recovered_table"] = rec.table;
    j["isomorphism"] = ok ? json(*iso) : json(nullptr);
    text << "reconstruct abelian " << a.group << ": " << (ok ? "isomorphic" : "MISMATCH") << "\n";
  } else {
    const auto blurred = reconstruct_blurred(g, a.cfg);
    ok = true;
    for (int x = 0; x < g.order && ok; ++x)
      for (int y = 0; y < g.order && ok; ++y) {
        std::vector<int> expected = {g.mul(x, y)};
        if (g.mul(y, x) != expected[0]) expected.push_back(g.mul(y, x));
        std::sort(expected.begin(), expected.end());
        ok = blurred[x][y] == expected;
      }
    j["blurred_table"] = blurred;
    j["matches_products"] = ok;
    text << "reconstruct blurred " << a.group << ": " << (ok ? "{ab, ba} everywhere" : "MISMATCH")
         << "\n";
  }
  maybe_add_timing(j, a, sw);
  emit(out, a.out_path, j, a.fmt(), text.str());
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"positive definite functions, 3x3 positivity, and duality on finite groups"};
  app.require_subcommand(1);

  CommonArgs gen_a, info_a, va_a, vp_a, cert_a, re_a, ineq_a, dual_a, rec_a;
  int dump_element = -1;
  int ea = 0, eb = 0, ex = 0;
  std::string cert_path, mode = "blurred";

  gen_a.attach(app.add_subcommand("gen", "write a builtin group as a .gtab file"));
  auto* info = app.add_subcommand("info", "group structure summary");
  info_a.attach(info);
  info->add_option("--dump", dump_element, "include the Cayley matrix of one element");
  va_a.attach(app.add_subcommand("verify-abelian",
                                 "every pair admits exactly the product, by characters"));
  vp_a.attach(app.add_subcommand("verify-products",
                                 "every pair blurs to {ab, ba}, by certificate search"));
  auto* certify = app.add_subcommand("certify", "decide one triple, emitting a certificate");
  cert_a.attach(certify);
  certify->add_option("--a", ea, "first element")->required();
  certify->add_option("--b", eb, "second element")->required();
  certify->add_option("--x", ex, "candidate product")->required();
  auto* recheck = app.add_subcommand("recheck", "re-validate a certificate file");
  re_a.attach(recheck, /*needs_group=*/false);
  recheck->add_option("--cert", cert_path, "certificate JSON file")->required();
  ineq_a.attach(app.add_subcommand("inequalities", "sample the eigenstate inequality families"));
  dual_a.attach(app.add_subcommand("dual", "reconstruct the group from its dual"));
  auto* reconstruct = app.add_subcommand("reconstruct", "recover structure from states alone");
  rec_a.attach(reconstruct);
  reconstruct->add_option("--mode", mode, "abelian or blurred")
      ->check(CLI::IsMember({"abelian", "blurred"}));

  std::vector<const char*> argv;
  argv.push_back("gdual");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand("gen")) return cmd_gen(gen_a, out);
    if (app.got_subcommand("info")) return cmd_info(info_a, dump_element, out);
    if (app.got_subcommand("verify-abelian")) return cmd_verify_abelian(va_a, out);
    if (app.got_subcommand("verify-products")) return cmd_verify_products(vp_a, out);
    if (app.got_subcommand("certify")) return cmd_certify(cert_a, ea, eb, ex, out);
    if (app.got_subcommand("recheck")) return cmd_recheck(re_a, cert_path, out);
    if (app.got_subcommand("inequalities")) return cmd_inequalities(ineq_a, out);
    if (app.got_subcommand("dual")) return cmd_dual(dual_a, out);
    if (app.got_subcommand("reconstruct")) return cmd_reconstruct(rec_a, mode, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return (e.code() == Errc::UsageError || e.code() == Errc::ParseError) ? 2 : 1;
  }
  err << "no subcommand dispatched\n";
  return 2;
}

}  // namespace gdual
