#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "liegra/enumerate.hpp"
#include "liegra/growth.hpp"
#include "liegra/io.hpp"
#include "liegra/lie_theory.hpp"
#include "liegra/verify.hpp"

using namespace liegra;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

class UsageError : public Error {
public:
  using Error::Error;
};

struct RunConfig {
  int K = 4;
  std::string format = "json";
  std::vector<std::string> gens;
  std::string out;
  int cap_labeled = 0;
  int cap_iso = 0;
};

std::vector<Generator> parse_generators(const std::vector<std::string>& specs) {
  std::vector<Generator> gens;
  for (const std::string& s : specs) {
    const auto colon = s.find(':');
    Generator g;
    g.name = s.substr(0, colon);
    if (colon != std::string::npos) {
      try {
        std::size_t used = 0;
        g.degree = std::stoi(s.substr(colon + 1), &used);
        if (used != s.size() - colon - 1) throw std::invalid_argument(s);
      } catch (const std::exception&) {
        throw UsageError("bad generator '" + s + "', expected name:degree");
      }
    }
    gens.push_back(g);
  }
  return gens;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_enumerate(const RunConfig& cfg, int n, const std::string& flavor_name, bool iso, bool count_only) {
  const Flavor flavor = parse_flavor(flavor_name);
  const EnumerationCaps& caps = default_caps();
  std::vector<std::string> lines;
  nlohmann::json items = nlohmann::json::array();
  std::size_t count = 0;
  if (iso) {
    if (flavor == Flavor::Multi || flavor == Flavor::Oriented) throw UsageError("--iso needs a simple flavor");
    for (const IsoClass& c : enumerate_iso_classes(n, flavor, caps)) {
      ++count;
      if (count_only) continue;
      lines.push_back(format_graph(c.graph) + "  aut=" + std::to_string(c.aut_order) +
                      "  multiplicity=" + std::to_string(c.multiplicity));
      items.push_back({{"graph", to_json(c.graph)}, {"aut", c.aut_order}, {"multiplicity", c.multiplicity}});
    }
  } else if (flavor == Flavor::Multi) {
    for (const MultiGraph& g : enumerate_labeled_multi(n, caps)) {
      ++count;
      if (count_only) continue;
      lines.push_back(format_graph(g));
      items.push_back(to_json(g));
    }
  } else {
    for (const DirectedGraph& g : enumerate_labeled(n, flavor, caps)) {
      ++count;
      if (count_only) continue;
      lines.push_back(format_graph(g));
      items.push_back(to_json(g));
    }
  }
  if (cfg.format == "json") {
    nlohmann::json j{{"n", n}, {"flavor", flavor_name}, {"iso", iso}, {"count", count}};
    if (!count_only) j["graphs"] = items;
    emit(cfg, dump(j));
  } else {
    std::string text = count_only ? std::to_string(count) + "\n" : "";
    for (const std::string& l : lines) text += l + "\n";
    emit(cfg, text);
  }
  return 0;
}

std::vector<Generator> default_generators(const std::string& which) {
  if (which == "exp" || which == "log" || which == "inverse") return {{"x", 0}};
  if (which == "bowtie") return {{"x", 0}, {"a", -1}, {"y", 0}};
  if (which == "action") return {{"l", 0}, {"a", -1}};
  return {{"x", 0}, {"y", 0}};
}

int cmd_series(const RunConfig& cfg, const std::string& which, const std::string& route) {
  std::vector<Generator> gens = cfg.gens.empty() ? default_generators(which) : parse_generators(cfg.gens);
  const std::size_t need = which == "bowtie" ? 3 : (which == "exp" || which == "log" || which == "inverse") ? 1 : 2;
  if (gens.size() < need) throw UsageError(which + " needs " + std::to_string(need) + " generators");
  const AlgebraPtr alg = Algebra::make(gens, cfg.K, which == "product-nc");
  std::vector<Series> g;
  for (const Generator& gen : gens) g.push_back(Series::generator(alg, gen.name));
  auto group = [](const Series& s) { return GroupElement::from_series(s); };
  Series result(alg);
  if (which == "exp") {
    result = exp_series(g[0], route == "flow" ? ExpRoute::Flow : ExpRoute::Direct);
  } else if (which == "log") {
    result = log_series(g[0]);
  } else if (which == "inverse") {
    result = gp_inverse(group(g[0])).x();
  } else if (which == "product") {
    result = gp_product_series(g[0], g[1], route == "labeled" ? ProductRoute::Labeled : ProductRoute::IsoClasses);
  } else if (which == "product-nc") {
    result = gp_product_nc_series(g[0], g[1], route == "assembly" ? NcRoute::Assembly : NcRoute::Direct);
  } else if (which == "bch") {
    result = route == "log" ? bch_via_log(g[0], g[1]) : bch(g[0], g[1]);
  } else if (which == "bowtie") {
    result = bowtie_series(g[0], g[1], g[2]);
  } else if (which == "action") {
    result = gauge_action(g[0], g[1]);
  } else {
    throw UsageError("unknown series '" + which + "'");
  }
  const bool group_valued = which == "exp" || which == "inverse" || which == "product" || which == "product-nc";
  if (cfg.format == "json") {
    nlohmann::json j = to_json(result);
    j["series"] = which;
    if (group_valued) j["unit"] = true;
    emit(cfg, dump(j));
  } else {
    emit(cfg, (group_valued ? std::string("1/1  1\n") : std::string()) + to_text(result));
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, bool k_given) {
  VerifyOptions opts;
  if (k_given) opts.K = cfg.K;
  const std::vector<std::string> suites = expand_suite(suite);
  bool ok = true;
  nlohmann::json j = nlohmann::json::array();
  std::string text;
  for (const std::string& s : suites) {
    for (const IdentityReport& r : run_suite(s, opts)) {
      if (!r.pass && !r.informational) ok = false;
      nlohmann::json jr = to_json(r);
      jr["suite"] = s;
      j.push_back(jr);
      text += "[" + s + "] " + to_text(r) + "\n";
    }
  }
  emit(cfg, cfg.format == "json" ? dump(nlohmann::json{{"pass", ok}, {"reports", j}}) : text);
  return ok ? 0 : kExitFail;
}

int cmd_growth(const RunConfig& cfg, int n_max, const std::string& b, int exact_cap) {
  std::optional<BigInt> bound;
  if (!b.empty()) {
    try {
      bound = BigInt(b);
    } catch (const std::exception&) {
      throw UsageError("bad --b value '" + b + "'");
    }
  }
  const GrowthReport r = growth_report(n_max, bound, exact_cap);
  if (cfg.format == "csv") {
    emit(cfg, to_csv(r));
  } else if (cfg.format == "text") {
    emit(cfg, to_text(r));
  } else {
    emit(cfg, dump(to_json(r)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-graph algebras: enumeration, series, identity checks and growth tables"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);
  RunConfig cfg;
  bool k_given = false;
  std::map<CLI::App*, std::string> formats;
  auto add_common = [&](CLI::App* sub, const std::vector<std::string>& allowed, const std::string& default_format) {
    sub->add_option("--K", cfg.K, "truncation weight")->check(CLI::Range(1, kMaxVertices));
    formats[sub] = default_format;
    sub->add_option("--format", formats[sub], "output format")->check(CLI::IsMember(allowed))->capture_default_str();
    sub->add_option("--out", cfg.out, "write output to FILE");
    sub->add_option("--cap-labeled", cfg.cap_labeled, "labeled enumeration cap")->check(CLI::Range(1, 8));
    sub->add_option("--cap-iso", cfg.cap_iso, "iso-class enumeration cap")->check(CLI::Range(1, 8));
  };

  int n = 3;
  std::string flavor = "connected-simple";
  bool iso = false;
  bool count_only = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list or count graphs");
  enumerate->add_option("--n", n, "vertex count")->required()->check(CLI::Range(1, kMaxVertices));
  enumerate->add_option("--flavor", flavor, "connected-simple, nc-simple, oriented or multi");
  enumerate->add_flag("--iso", iso, "isomorphism classes instead of labeled graphs");
  enumerate->add_flag("--count", count_only, "print the count only");
  add_common(enumerate, {"json", "text"}, "text");

  std::string which;
  std::string route;
  CLI::App* series = app.add_subcommand("series", "compute a series in the free algebra");
  series->add_option("which", which, "exp, log, inverse, product, product-nc, bch, bowtie or action")
      ->required()
      ->check(CLI::IsMember({"exp", "log", "inverse", "product", "product-nc", "bch", "bowtie", "action"}));
  series->add_option("-g,--gen", cfg.gens, "generator name:degree (repeatable)")->allow_extra_args(false);
  series->add_option("--route", route, "second route: flow (exp), labeled (product), assembly (product-nc), log (bch)");
  add_common(series, {"json", "text"}, "json");

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "check identities");
  verify->add_option("--suite", suite, "suite name, exp-log or all");
  add_common(verify, {"json", "text"}, "text");

  int n_max = 20;
  std::string b;
  int exact_cap = 6;
  CLI::App* growth = app.add_subcommand("growth", "growth table");
  growth->add_option("--n-max,--n", n_max, "largest n")->check(CLI::Range(1, 400));
  growth->add_option("--b", b, "b in the shuffle-tree bound (default: largest exact count)");
  growth->add_option("--exact-cap", exact_cap, "exact counts up to this n")->check(CLI::Range(0, 8));
  add_common(growth, {"csv", "json", "text"}, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  for (CLI::App* sub : {enumerate, series, verify, growth}) {
    if (!sub->parsed()) continue;
    k_given = sub->count("--K") > 0;
    cfg.format = formats[sub];
  }
  if (cfg.cap_labeled > 0) default_caps().labeled = cfg.cap_labeled;
  if (cfg.cap_iso > 0) default_caps().iso = cfg.cap_iso;

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg, n, flavor, iso, count_only);
    if (series->parsed()) return cmd_series(cfg, which, route);
    if (verify->parsed()) return cmd_verify(cfg, suite, k_given);
    if (growth->parsed()) {
      if (cfg.cap_labeled > 0) exact_cap = std::min(exact_cap, cfg.cap_labeled);
      return cmd_growth(cfg, n_max, b, exact_cap);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
