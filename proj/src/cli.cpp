#include "upg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "upg/claims.hpp"

namespace upg {
namespace {

struct Options {
  std::string ring;
  std::string graph = "upg";
  std::string format;
  std::string claims = "all";
  std::size_t zmod_max = 60;
  std::string include;
  bool no_defaults = false;
  std::size_t order_cap = kDefaultOrderCap;
  std::string out;
  std::string family = "zmod";
  std::size_t max = 24;
  std::size_t threads = 0;
};

class Refusal : public std::runtime_error {
 public:
  Refusal(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Refusal(kExitUsage, "cannot write '" + o.out + "'");
  f << text;
}

SimpleGraph selected_graph(const Options& o, const FiniteRing& ring) {
  if (!ring.has_unity()) throw Refusal(kExitNoUnity, "ring " + ring.label() + " has no unity; Γ' is undefined");
  auto g = unity_product_graph(units(ring));
  return o.graph == "complement" ? complement(g) : g;
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto ring = RingFamilySpec::parse(o.ring).build(o.order_cap);
  const auto g = selected_graph(o, ring);
  emit(o, o.format == "json" ? export_json(g) : export_dot(g), out);
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto ring = RingFamilySpec::parse(o.ring).build(o.order_cap);
  const auto g = selected_graph(o, ring);
  const auto report = full_report(g);
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["ring"] = ring.label();
    doc["graph"] = o.graph;
    doc["report"] = nlohmann::ordered_json::parse(report_json(report));
    emit(o, doc.dump(2) + "\n", out);
  } else {
    emit(o, "ring   " + ring.label() + "\ngraph  " + o.graph + "\n\n" + report_text(report), out);
  }
  return kExitOk;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  std::stringstream ss(s);
  for (std::string id; std::getline(ss, id, ',');) {
    id.erase(0, id.find_first_not_of(" \t"));
    id.erase(id.find_last_not_of(" \t") + 1);
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto claims = select_claims(split_ids(o.claims));
  std::vector<RingFamilySpec> specs;
  if (!o.no_defaults) specs = default_sweep_specs(o.zmod_max);
  if (!o.include.empty()) {
    auto extra = parse_spec_list(o.include);
    specs.insert(specs.end(), extra.begin(), extra.end());
  }
  SweepOptions so;
  so.order_cap = o.order_cap;
  so.threads = o.threads;
  const auto verdicts = run_sweep(claims, specs, so);
  ReportFormat fmt = ReportFormat::text;
  if (o.format == "json") fmt = ReportFormat::json;
  if (o.format == "csv") fmt = ReportFormat::csv;
  emit(o, render_report(verdicts, fmt), out);
  const bool failed = std::any_of(verdicts.begin(), verdicts.end(),
                                  [](const ClaimVerdict& v) { return v.outcome == Outcome::fail; });
  return failed ? kExitClaimFailed : kExitOk;
}

// Checks every order against the cap before any ring is built.
std::vector<RingFamilySpec> survey_specs(const Options& o) {
  const std::size_t cap = std::min(o.order_cap, kHardOrderLimit);
  std::size_t largest = o.max;
  if (o.family == "bool") largest = o.max >= 17 ? kHardOrderLimit + 1 : std::size_t{1} << o.max;
  if (largest > cap) throw OrderBoundError(largest, cap);
  std::vector<RingFamilySpec> specs;
  auto add = [&](const std::string& s) { specs.push_back(RingFamilySpec::parse(s)); };
  if (o.family == "zmod") {
    for (std::size_t n = 1; n <= o.max; ++n) add("zmod:" + std::to_string(n));
  } else if (o.family == "bool") {
    for (std::size_t k = 1; k <= o.max; ++k) add("bool:" + std::to_string(k));
  } else {
    // Prime powers q = p^k <= max, ascending.
    for (std::size_t q = 2; q <= o.max; ++q)
      for (std::size_t p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        std::size_t k = 0, r = q;
        while (r % p == 0) r /= p, ++k;
        if (r == 1) add("gf:" + std::to_string(p) + "^" + std::to_string(k));
        if (q % p == 0) break;
      }
  }
  return specs;
}

int cmd_survey(const Options& o, std::ostream& out) {
  const auto specs = survey_specs(o);
  std::vector<FiniteRing> rings;
  for (const auto& s : specs) rings.push_back(s.build(o.order_cap));

  std::vector<std::optional<RingFacts>> facts(rings.size());
  std::atomic<std::size_t> next{0};
  std::size_t threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(rings.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rings.size(); i = next++) facts[i] = analyze_ring(rings[i]);
      });
  }

  std::ostringstream os;
  os << "ring,order,units,s,t";
  for (const char* g : {"upg", "cmp"})
    for (const char* c : {"girth", "diam", "rad", "gamma", "chi", "omega", "planar", "hamiltonian"})
      os << "," << g << "_" << c;
  os << "\n";
  for (const auto& f : facts) {
    if (!f->has_unity) throw Refusal(kExitNoUnity, "ring " + f->ring.label() + " has no unity");
    if (!f->upg_report) throw Refusal(kExitBound, f->report_error);
    os << f->ring.label() << "," << f->ring.order() << "," << f->unit_count << "," << f->self_inverse << ","
       << f->inverse_pairs;
    for (const auto* r : {&*f->upg_report, &*f->cmp_report})
      os << "," << r->girth.to_string() << "," << r->diameter.to_string() << "," << r->radius.to_string() << ","
         << r->domination_number << "," << r->chromatic_number << "," << r->clique_number << ","
         << (r->planar ? "true" : "false") << "," << (r->hamiltonian ? "true" : "false");
    os << "\n";
  }
  emit(o, os.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unity product graphs of finite commutative rings", "upg"};
  app.require_subcommand(1);
  Options o;

  auto cap_opt = [&](CLI::App* sc) {
    sc->add_option("--order-cap", o.order_cap, "Largest ring order to construct")
        ->check(CLI::Range(std::size_t{1}, kHardOrderLimit));
    sc->add_option("--out", o.out, "Output path (default standard output)");
  };
  auto graph_opts = [&](CLI::App* sc) {
    sc->add_option("--ring", o.ring, "Ring spec, e.g. zmod:11, gf:2^2, bool:3, prod:(zmod:2,zmod:3), table:@f.json")
        ->required();
    sc->add_option("--graph", o.graph, "upg or complement")->check(CLI::IsMember({"upg", "complement"}));
    cap_opt(sc);
  };

  auto* build = app.add_subcommand("build", "Write Γ' or Γ'ᶜ as DOT or JSON");
  graph_opts(build);
  build->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* analyze = app.add_subcommand("analyze", "Compute every invariant of Γ' or Γ'ᶜ");
  graph_opts(analyze);
  analyze->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Check registered claims over a ring sweep");
  verify->add_option("--claims", o.claims, "Comma-separated claim ids, or all");
  verify->add_option("--zmod-max", o.zmod_max, "Largest n of the Z/n sweep")->check(CLI::PositiveNumber);
  verify->add_option("--include", o.include, "Extra ring specs, comma-separated");
  verify->add_flag("--no-default-families", o.no_defaults, "Sweep only the --include rings");
  verify->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  cap_opt(verify);

  auto* survey = app.add_subcommand("survey", "CSV table of invariants over one ring family");
  survey->add_option("--family", o.family, "zmod, gf or bool")->check(CLI::IsMember({"zmod", "gf", "bool"}));
  survey->add_option("--max", o.max, "zmod: largest n; gf: largest order; bool: most copies");
  survey->add_option("--format", o.format, "csv")->check(CLI::IsMember({"csv"}));
  survey->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  cap_opt(survey);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_survey(o, out);
  } catch (const Refusal& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  } catch (const NoUnityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoUnity;
  } catch (const OrderBoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const VertexBoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const UnknownClaimError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace upg
