#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "upg/claims.hpp"

using namespace upg;

namespace {

std::vector<ClaimVerdict> sweep(const std::string& ids, const std::vector<std::string>& specs) {
  std::vector<RingFamilySpec> rs;
  for (const auto& s : specs) rs.push_back(RingFamilySpec::parse(s));
  return run_sweep(select_claims({ids}), rs);
}

std::vector<ClaimVerdict> zmod_sweep(const std::string& ids, std::size_t lo, std::size_t hi) {
  std::vector<std::string> specs;
  for (std::size_t n = lo; n <= hi; ++n) specs.push_back("zmod:" + std::to_string(n));
  return sweep(ids, specs);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& claims = builtin_claims();
  CHECK(claims.size() >= 26);
  std::set<std::string> ids;
  for (const auto& c : claims) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
  }
  for (const char* id : {"thm-3.1", "thm-3.2", "thm-3.3", "thm-3.4", "thm-3.5", "prop-3.1", "prop-3.2-2",
                         "prop-3.3-2", "thm-3.6", "thm-3.7", "thm-4.1", "thm-4.2", "thm-4.3", "thm-4.4", "prop-4.1",
                         "thm-4.5", "thm-5.1", "thm-5.3", "thm-5.4", "thm-5.5", "prop-5.2-1", "prop-5.2-2",
                         "thm-5.7-1", "thm-5.7-2", "thm-6.1", "thm-6.2", "thm-6.3", "thm-6.4"})
    CHECK(ids.count(id));
  CHECK_THROWS_AS(lookup_claim("nonexistent"), UnknownClaimError);
  CHECK_THROWS_AS(select_claims({"thm-9.9"}), UnknownClaimError);
  CHECK(select_claims({"all"}).size() == claims.size());
  CHECK(select_claims({"prop-5.2"}).size() == 2);
  CHECK(select_claims({"thm-5.7", "thm-5.7-1"}).size() == 2);
}

TEST_CASE("hypothesis filters") {
  CHECK_FALSE(lookup_claim("thm-3.4").applicable(analyze_ring(zmod(2))));
  CHECK(lookup_claim("thm-3.4").applicable(analyze_ring(zmod(7))));
  CHECK(lookup_claim("prop-3.2-2").applicable(analyze_ring(zmod(12))));
  CHECK_FALSE(lookup_claim("prop-3.2-2").applicable(analyze_ring(zmod(5))));
  CHECK_FALSE(lookup_claim("prop-3.3-2").applicable(analyze_ring(zmod(2))));
  CHECK_FALSE(lookup_claim("thm-3.5").applicable(analyze_ring(zmod(4))));
  CHECK(lookup_claim("thm-3.5").applicable(analyze_ring(zmod(32))));
  CHECK_FALSE(lookup_claim("thm-5.7-1").applicable(analyze_ring(zmod(3))));
  CHECK(lookup_claim("thm-5.7-1").applicable(analyze_ring(gf(5, 1))));

  auto f7 = analyze_ring(zmod(7));
  auto v = evaluate(lookup_claim("thm-6.2"), f7);
  CHECK(v.outcome == Outcome::pass);
  CHECK_FALSE(f7.cmp_report->planar);
}

TEST_CASE("rings without unity are not applicable everywhere") {
  std::vector<std::vector<Element>> a{{0, 1}, {1, 0}}, m{{0, 0}, {0, 0}};
  auto f = analyze_ring(table_ring(a, m, 0, "null2"));
  CHECK_FALSE(f.has_unity);
  for (const auto& c : builtin_claims()) CHECK(evaluate(c, f).outcome == Outcome::not_applicable);
}

TEST_CASE("sweeps over Z/n") {
  for (const auto& v : zmod_sweep("thm-4.1", 2, 60)) CHECK(v.outcome == Outcome::pass);

  auto gaps = zmod_sweep("thm-3.6", 2, 120);
  std::vector<std::string> gap_rings;
  for (const auto& v : gaps) {
    CHECK(v.outcome != Outcome::fail);
    if (v.outcome == Outcome::hypothesis_gap) {
      gap_rings.push_back(v.ring_label);
      CHECK_FALSE(v.witness.empty());
    }
  }
  const std::vector<std::string> expected{"Z/40", "Z/48", "Z/56", "Z/60", "Z/72", "Z/80", "Z/84",
                                          "Z/88", "Z/96", "Z/104", "Z/105", "Z/112", "Z/120"};
  CHECK(gap_rings == expected);
  auto it = std::find_if(gaps.begin(), gaps.end(), [](const ClaimVerdict& v) { return v.ring_label == "Z/105"; });
  REQUIRE(it != gaps.end());
  CHECK(it->witness.find("isolated count 8") != std::string::npos);

  auto p31 = zmod_sweep("prop-3.1", 2, 200);
  std::vector<std::string> fails;
  for (const auto& v : p31)
    if (v.outcome == Outcome::fail) fails.push_back(v.ring_label);
  CHECK(fails == std::vector<std::string>{"Z/18", "Z/30"});
}

TEST_CASE("boundary at |U| = 3") {
  auto v = sweep("thm-6.4", {"gf:2^2"});
  REQUIRE(v.size() == 1);
  CHECK(v[0].outcome == Outcome::fail);
  CHECK(v[0].witness.find("Γ'ᶜ = P₃, no Hamiltonian cycle") != std::string::npos);

  auto g42 = sweep("thm-4.2", {"gf:2^2"});
  auto g43 = sweep("thm-4.3", {"gf:2^2"});
  CHECK(g42[0].outcome == Outcome::not_applicable);
  CHECK(g43[0].outcome == Outcome::hypothesis_gap);
  CHECK(g43[0].witness.find("girth(Γ'ᶜ) = inf") != std::string::npos);
}

TEST_CASE("iff claims name the failing direction") {
  auto v = sweep("prop-4.1", {"prod:(zmod:3,zmod:3)", "zmod:8", "zmod:5"});
  std::map<std::string, ClaimVerdict> by;
  for (const auto& x : v) by.emplace(x.ring_label, x);
  CHECK(by.at("Z/8").outcome == Outcome::pass);
  CHECK(by.at("Z/5").outcome == Outcome::pass);
  CHECK(by.at("Z/3 × Z/3").outcome == Outcome::fail);
  CHECK(by.at("Z/3 × Z/3").witness.rfind("converse direction", 0) == 0);
}

TEST_CASE("default sweep coverage and zero-fail claims") {
  auto verdicts = run_sweep(select_claims({"all"}), default_sweep_specs());
  std::map<std::string, std::map<Outcome, std::size_t>> counts;
  for (const auto& v : verdicts) {
    ++counts[v.claim_id][v.outcome];
    if (v.outcome == Outcome::fail || v.outcome == Outcome::hypothesis_gap) CHECK_FALSE(v.witness.empty());
  }
  for (const auto& c : builtin_claims()) {
    INFO(c.id);
    auto& k = counts[c.id];
    CHECK(k[Outcome::pass] + k[Outcome::fail] + k[Outcome::hypothesis_gap] >= 1);
    CHECK(k[Outcome::skipped] == 0);
  }
  for (const char* id : {"thm-3.1", "thm-3.2", "thm-3.3", "thm-3.4", "thm-3.5", "thm-4.1", "thm-4.4", "thm-4.5",
                         "thm-5.1", "thm-5.3", "thm-5.5", "thm-6.1", "thm-6.3"}) {
    INFO(id);
    CHECK(counts[id][Outcome::fail] == 0);
  }
  // Sorted by claim id, then ring label, naturally.
  for (std::size_t i = 1; i < verdicts.size(); ++i) {
    const auto& a = verdicts[i - 1];
    const auto& b = verdicts[i];
    CHECK((natural_less(a.claim_id, b.claim_id) ||
           (a.claim_id == b.claim_id && !natural_less(b.ring_label, a.ring_label))));
  }
}

TEST_CASE("determinism across thread counts") {
  SweepOptions one;
  one.threads = 1;
  SweepOptions many;
  many.threads = 8;
  auto a = run_sweep(select_claims({"all"}), default_sweep_specs(40), one);
  auto b = run_sweep(select_claims({"all"}), default_sweep_specs(40), many);
  CHECK(a == b);
  CHECK(render_report(a, ReportFormat::json) == render_report(b, ReportFormat::json));
}

TEST_CASE("duplicate rings are swept once") {
  auto v = sweep("thm-4.1", {"zmod:5", "zmod:5", "zmod:7"});
  CHECK(v.size() == 2);
}

TEST_CASE("natural ordering") {
  CHECK(natural_less("Z/9", "Z/10"));
  CHECK(natural_less("thm-3.2", "thm-3.10"));
  CHECK_FALSE(natural_less("Z/10", "Z/9"));
  CHECK(natural_less("prop-3.1", "thm-3.1"));
}

TEST_CASE("report rendering") {
  const std::vector<ClaimVerdict> none;
  CHECK(render_report(none, ReportFormat::csv) == "claim_id,ring,outcome,witness\n");
  auto j = nlohmann::json::parse(render_report(none, ReportFormat::json));
  CHECK(j["summary"]["verdicts"] == 0);
  CHECK(j["claims"].empty());
  CHECK(render_report(none, ReportFormat::text).find("total") != std::string::npos);

  auto v = sweep("thm-6.4", {"gf:2^2", "zmod:5"});
  auto csv = render_report(v, ReportFormat::csv);
  CHECK(csv ==
        "claim_id,ring,outcome,witness\n"
        "thm-6.4,GF(4),fail,forward direction: |U| = 3 > 2 but Γ'ᶜ = P₃; no Hamiltonian cycle\n"
        "thm-6.4,Z/5,pass,\n");
  auto doc = nlohmann::json::parse(render_report(v, ReportFormat::json));
  CHECK(doc["summary"]["fail"] == 1);
  CHECK(doc["claims"][0]["id"] == "thm-6.4");
  CHECK(doc["claims"][0]["verdicts"][0]["witness"] ==
        "forward direction: |U| = 3 > 2 but Γ'ᶜ = P₃, no Hamiltonian cycle");
}

TEST_CASE("pinned fixture: small sweep CSV") {
  auto v = run_sweep(select_claims({"all"}),
                     std::vector<RingFamilySpec>{RingFamilySpec::parse("zmod:5"), RingFamilySpec::parse("gf:2^2"),
                                                 RingFamilySpec::parse("prod:(zmod:3,zmod:3)")});
  CHECK(render_report(v, ReportFormat::csv) == read_file(UPG_FIXTURE_DIR "/small_sweep.csv"));
}

TEST_CASE("docs claims table is generated from the registry") {
  const auto doc = read_file(UPG_DOCS_DIR "/claims.md");
  CHECK(doc.find(claims_table_markdown()) != std::string::npos);
}
