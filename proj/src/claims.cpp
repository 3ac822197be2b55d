#include "upg/claims.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace upg {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::not_applicable: return "not_applicable";
    case Outcome::hypothesis_gap: return "hypothesis_gap";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

RingFacts analyze_ring(const FiniteRing& ring, const SolverLimits& limits) {
  RingFacts f(ring);
  f.has_unity = ring.has_unity();
  f.characteristic = characteristic(ring);
  f.boolean = is_boolean(ring);
  f.field = is_field(ring);
  f.residues = cyclic_residues(ring);
  if (!f.has_unity) return f;

  f.units = units(ring);
  f.unit_count = f.units->size();
  f.self_inverse = self_inverse_count(*f.units);
  f.inverse_pairs = (f.unit_count - f.self_inverse) / 2;
  f.upg = unity_product_graph(*f.units);
  f.cmp = complement(*f.upg);
  f.decomposition = decompose_matching_structure(*f.upg);
  f.profile = recognize_complete_multipartite(*f.cmp);
  try {
    f.upg_report = full_report(*f.upg, limits);
    f.cmp_report = full_report(*f.cmp, limits);
  } catch (const VertexBoundError& e) {
    f.upg_report.reset();
    f.cmp_report.reset();
    f.report_error = e.what();
  }
  return f;
}

namespace {

ClaimResult pass() { return {Outcome::pass, {}}; }
ClaimResult fail(std::string w) { return {Outcome::fail, std::move(w)}; }
ClaimResult gap(std::string w) { return {Outcome::hypothesis_gap, std::move(w)}; }

std::string str(std::size_t v) { return std::to_string(v); }

bool is_composite(std::size_t k) { return k >= 4 && !is_prime(k); }

bool cyclic_order_divides_24(const RingFacts& f, std::size_t min_order) {
  const std::size_t n = f.ring.order();
  return f.residues && n >= min_order && 24 % n == 0;
}

std::string subscript(std::size_t v) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s = std::to_string(v), out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

// Short structural description of a small graph for witnesses.
std::string shape(const SimpleGraph& g) {
  const std::size_t n = g.size(), m = g.edge_count();
  if (m == n * (n - 1) / 2) return "K" + subscript(n);
  bool path = n >= 2 && m == n - 1 && components(g).size() == 1;
  for (Vertex v = 0; v < n && path; ++v) path = g.degree(v) <= 2;
  if (path) return "P" + subscript(n);
  return str(n) + " vertices and " + str(m) + " edges";
}

std::string units_text(const RingFacts& f) { return "|U| = " + str(f.unit_count); }

const std::string kUpg = "Γ'";
const std::string kCmp = "Γ'ᶜ";

std::vector<Claim> make_claims() {
  std::vector<Claim> c;
  auto any_unity = [](const RingFacts&) { return true; };
  auto units_at_least = [](std::size_t k) { return [k](const RingFacts& f) { return f.unit_count >= k; }; };

  c.push_back({"thm-3.1", "Boolean ring (or finite product of Boolean rings): Γ' is the trivial graph",
               [](const RingFacts& f) { return f.boolean; },
               [](const RingFacts& f) {
                 if (f.upg_report->n == 1) return pass();
                 return fail(kUpg + " has " + str(f.upg_report->n) + " vertices");
               },
               {}});
  c.push_back({"thm-3.2", "|U| >= 2: Γ' is disconnected", units_at_least(2),
               [](const RingFacts& f) {
                 if (!f.upg_report->connected) return pass();
                 return fail(kUpg + " is connected with " + units_text(f));
               },
               {}});
  c.push_back({"thm-3.3", "|U| >= 2: Γ'ᶜ is connected", units_at_least(2),
               [](const RingFacts& f) {
                 if (f.cmp_report->connected) return pass();
                 return fail(kCmp + " has " + str(f.cmp_report->component_count) + " components");
               },
               {}});
  c.push_back({"thm-3.4", "R ≅ Z/p with p an odd prime: Γ' has exactly two isolated vertices",
               [](const RingFacts& f) { return f.ring.order() > 2 && is_prime(f.ring.order()); },
               [](const RingFacts& f) {
                 if (f.upg_report->isolated_count == 2) return pass();
                 return fail("isolated count " + str(f.upg_report->isolated_count));
               },
               {}});
  c.push_back({"thm-3.5", "R ≅ Z/2^m with m >= 3: Γ' has exactly four isolated vertices",
               [](const RingFacts& f) {
                 const std::size_t n = f.ring.order();
                 return f.residues && n >= 8 && (n & (n - 1)) == 0;
               },
               [](const RingFacts& f) {
                 if (f.upg_report->isolated_count == 4) return pass();
                 return fail("isolated count " + str(f.upg_report->isolated_count));
               },
               {}});
  c.push_back({"prop-3.1",
               "R ≅ Z/n and no unit is composite (as a residue in 1..n-1): every unit is self-inverse",
               [](const RingFacts& f) {
                 if (!f.residues) return false;
                 for (Element x : f.units->elements())
                   if (is_composite((*f.residues)[x])) return false;
                 return true;
               },
               [](const RingFacts& f) {
                 for (Element x : f.units->elements()) {
                   const Element y = f.units->inverse_of(x);
                   if (y != x)
                     return fail(str((*f.residues)[x]) + "·" + str((*f.residues)[y]) + " = 1 so " +
                                 str((*f.residues)[x]) + " is not self-inverse");
                 }
                 return pass();
               },
               {}});
  c.push_back({"prop-3.2-2", "R ≅ Z/n with n > 1 dividing 24: Γ' is edgeless",
               [](const RingFacts& f) { return cyclic_order_divides_24(f, 2); },
               [](const RingFacts& f) {
                 if (f.upg_report->edge_count == 0) return pass();
                 return fail(kUpg + " has " + str(f.upg_report->edge_count) + " edges");
               },
               {}});
  c.push_back({"prop-3.3-2", "R ≅ Z/n with n > 2 dividing 24: Γ'ᶜ is complete",
               [](const RingFacts& f) { return cyclic_order_divides_24(f, 3); },
               [](const RingFacts& f) {
                 const auto& r = *f.cmp_report;
                 if (r.edge_count == r.n * (r.n - 1) / 2) return pass();
                 return fail(kCmp + " misses " + str(r.n * (r.n - 1) / 2 - r.edge_count) + " edges");
               },
               {}});
  c.push_back({"thm-3.6", "Γ' is 2K1 + (m-2)K2 or 4K1 + (m-4)K2 or mK1 (m = number of inverse classes)",
               any_unity,
               [](const RingFacts& f) {
                 const auto& d = f.decomposition;
                 if (!d.valid) return fail(kUpg + " is not a union of K1 and K2 components");
                 if (d.t == 0 || d.s == 2 || d.s == 4) return pass();
                 return gap("isolated count " + str(d.s) + " with " + str(d.t) +
                            (d.t == 1 ? " K2 component" : " K2 components") + ": no branch of the trichotomy applies");
               },
               {}});
  c.push_back({"thm-3.7", "Γ'ᶜ is K(2,...,2,1,1) or K(2,...,2,1,1,1,1) or complete K_m", any_unity,
               [](const RingFacts& f) {
                 const auto& p = f.profile;
                 if (!p.valid) return fail(kCmp + " is not complete multipartite");
                 const auto ones = static_cast<std::size_t>(std::count(p.part_sizes.begin(), p.part_sizes.end(), 1));
                 const bool pairs_only = std::all_of(p.part_sizes.begin(), p.part_sizes.end(),
                                                     [](std::size_t s) { return s <= 2; });
                 if (!pairs_only) return fail(kCmp + " has a part larger than 2");
                 if (ones == p.part_sizes.size() || ones == 2 || ones == 4) return pass();
                 return gap(str(ones) + " singleton parts and " + str(p.part_sizes.size() - ones) +
                            " parts of size 2: matches none of the three shapes");
               },
               {}});
  c.push_back({"thm-4.1", "girth(Γ') = inf", any_unity,
               [](const RingFacts& f) {
                 if (f.upg_report->girth.is_infinite()) return pass();
                 return fail("girth(Γ') = " + f.upg_report->girth.to_string());
               },
               {}});
  c.push_back({"thm-4.2", "|U| <= 2: girth(Γ'ᶜ) = inf",
               [](const RingFacts& f) { return f.unit_count <= 2; },
               [](const RingFacts& f) {
                 if (f.cmp_report->girth.is_infinite()) return pass();
                 return fail("girth(Γ'ᶜ) = " + f.cmp_report->girth.to_string());
               },
               {}});
  c.push_back({"thm-4.3", "|U| > 3: girth(Γ'ᶜ) = 3",
               [](const RingFacts& f) { return f.unit_count > 3; },
               [](const RingFacts& f) {
                 if (f.cmp_report->girth == 3) return pass();
                 return fail("girth(Γ'ᶜ) = " + f.cmp_report->girth.to_string());
               },
               [](const RingFacts& f) -> std::optional<std::string> {
                 if (f.unit_count != 3 || !f.cmp_report) return std::nullopt;
                 return "|U| = 3 is covered by neither girth statement; girth(Γ'ᶜ) = " +
                        f.cmp_report->girth.to_string();
               }});
  c.push_back({"thm-4.4", "|U| >= 2: diam(Γ') = rad(Γ') = inf", units_at_least(2),
               [](const RingFacts& f) {
                 const auto& r = *f.upg_report;
                 if (r.diameter.is_infinite() && r.radius.is_infinite()) return pass();
                 return fail("diam = " + r.diameter.to_string() + " rad = " + r.radius.to_string());
               },
               {}});
  c.push_back({"prop-4.1", "diam(Γ'ᶜ) = rad(Γ'ᶜ) = 1 if and only if R ≅ Z/n with n > 2 dividing 24", any_unity,
               [](const RingFacts& f) {
                 const bool lhs = cyclic_order_divides_24(f, 3);
                 const bool rhs = f.cmp_report->diameter == 1 && f.cmp_report->radius == 1;
                 if (lhs == rhs) return pass();
                 if (lhs) return fail("forward direction: diam = " + f.cmp_report->diameter.to_string() +
                                      " rad = " + f.cmp_report->radius.to_string());
                 return fail("converse direction: diam = rad = 1 with " + units_text(f) +
                             " but the ring is not Z/n for a divisor n of 24");
               },
               {}});
  c.push_back({"thm-4.5", "Γ'ᶜ not complete: diam(Γ'ᶜ) = 2 and rad(Γ'ᶜ) = 1",
               [](const RingFacts& f) { return f.cmp->edge_count() != f.unit_count * (f.unit_count - 1) / 2; },
               [](const RingFacts& f) {
                 const auto& r = *f.cmp_report;
                 if (r.diameter == 2 && r.radius == 1) return pass();
                 return fail("diam = " + r.diameter.to_string() + " rad = " + r.radius.to_string());
               },
               {}});
  c.push_back({"thm-5.1", "γ(Γ') = m, the number of inverse classes", any_unity,
               [](const RingFacts& f) {
                 const std::size_t m = f.self_inverse + f.inverse_pairs;
                 if (f.upg_report->domination_number == m) return pass();
                 return fail("γ = " + str(f.upg_report->domination_number) + " but m = " + str(m));
               },
               {}});
  c.push_back({"thm-5.3", "γ(Γ'ᶜ) = 1", any_unity,
               [](const RingFacts& f) {
                 if (f.cmp_report->domination_number == 1) return pass();
                 return fail("γ(Γ'ᶜ) = " + str(f.cmp_report->domination_number));
               },
               {}});
  c.push_back({"thm-5.4", "ω(Γ') ∈ {2, m}", any_unity,
               [](const RingFacts& f) {
                 const std::size_t m = f.self_inverse + f.inverse_pairs;
                 const std::size_t w = f.upg_report->clique_number;
                 if (w == 2 || w == m) return pass();
                 return fail("ω(Γ') = " + str(w) + " for edgeless Γ' on m = " + str(m) +
                             " vertices; counting isolated vertices as separate 1-cliques gives " +
                             str(clique_number_isolated_convention(*f.upg)));
               },
               {}});
  c.push_back({"thm-5.5", "χ(Γ') ∈ {1, 2}", any_unity,
               [](const RingFacts& f) {
                 const auto x = f.upg_report->chromatic_number;
                 if (x == 1 || x == 2) return pass();
                 return fail("χ(Γ') = " + str(x));
               },
               {}});
  c.push_back({"prop-5.2-1", "R ≅ Z/n with n > 2 dividing 24: χ(Γ'ᶜ) ∈ {2, 4, 8}",
               [](const RingFacts& f) { return cyclic_order_divides_24(f, 3); },
               [](const RingFacts& f) {
                 const auto x = f.cmp_report->chromatic_number;
                 if (x == 2 || x == 4 || x == 8) return pass();
                 return fail("χ(Γ'ᶜ) = " + str(x));
               },
               {}});
  c.push_back({"prop-5.2-2", "R ≅ Z/n with n > 2 dividing 24: ω(Γ'ᶜ) ∈ {2, 4, 8}",
               [](const RingFacts& f) { return cyclic_order_divides_24(f, 3); },
               [](const RingFacts& f) {
                 const auto x = f.cmp_report->clique_number;
                 if (x == 2 || x == 4 || x == 8) return pass();
                 return fail("ω(Γ'ᶜ) = " + str(x));
               },
               {}});
  auto field_char_ge5 = [](const RingFacts& f) { return f.field && f.characteristic >= 5; };
  c.push_back({"thm-5.7-1", "finite field of characteristic p >= 5: χ(Γ'ᶜ) = |V| - (number of parts of size 2)",
               field_char_ge5,
               [](const RingFacts& f) {
                 const auto pairs = static_cast<std::size_t>(
                     std::count(f.profile.part_sizes.begin(), f.profile.part_sizes.end(), 2));
                 const std::size_t expected = f.unit_count - pairs;
                 if (f.cmp_report->chromatic_number == expected) return pass();
                 return fail("χ(Γ'ᶜ) = " + str(f.cmp_report->chromatic_number) + " expected " + str(expected));
               },
               {}});
  c.push_back({"thm-5.7-2", "finite field of characteristic p >= 5: ω(Γ'ᶜ) = (p+1)/2", field_char_ge5,
               [](const RingFacts& f) {
                 const std::size_t expected = (f.characteristic + 1) / 2;
                 if (f.cmp_report->clique_number == expected) return pass();
                 return fail("ω(Γ'ᶜ) = " + str(f.cmp_report->clique_number) + " but (p+1)/2 = " + str(expected));
               },
               {}});
  c.push_back({"thm-6.1", "Γ' is planar", any_unity,
               [](const RingFacts& f) { return f.upg_report->planar ? pass() : fail(kUpg + " is not planar"); },
               {}});
  c.push_back({"thm-6.2", "Γ'ᶜ is planar if and only if |U| <= 4", any_unity,
               [](const RingFacts& f) {
                 const bool planar = f.cmp_report->planar;
                 const bool small = f.unit_count <= 4;
                 if (planar == small) return pass();
                 if (small) return fail("forward direction: " + units_text(f) + " but Γ'ᶜ is not planar");
                 return fail("converse direction: Γ'ᶜ is planar with " + units_text(f));
               },
               {}});
  c.push_back({"thm-6.3", "Γ' is not Hamiltonian", any_unity,
               [](const RingFacts& f) { return f.upg_report->hamiltonian ? fail(kUpg + " is Hamiltonian") : pass(); },
               {}});
  c.push_back({"thm-6.4", "Γ'ᶜ is Hamiltonian if and only if |U| > 2", any_unity,
               [](const RingFacts& f) {
                 const bool ham = f.cmp_report->hamiltonian;
                 const bool large = f.unit_count > 2;
                 if (ham == large) return pass();
                 if (large)
                   return fail("forward direction: " + units_text(f) + " > 2 but Γ'ᶜ = " + shape(*f.cmp) +
                               ", no Hamiltonian cycle");
                 return fail("converse direction: Γ'ᶜ is Hamiltonian with " + units_text(f));
               },
               {}});
  return c;
}

}  // namespace

const std::vector<Claim>& builtin_claims() {
  static const std::vector<Claim> claims = make_claims();
  return claims;
}

const Claim& lookup_claim(std::string_view id) {
  for (const auto& c : builtin_claims())
    if (c.id == id) return c;
  throw UnknownClaimError(std::string(id));
}

std::vector<const Claim*> select_claims(const std::vector<std::string>& filter) {
  std::vector<const Claim*> out;
  auto add = [&](const Claim& c) {
    if (std::find(out.begin(), out.end(), &c) == out.end()) out.push_back(&c);
  };
  for (const auto& id : filter) {
    if (id == "all") {
      for (const auto& c : builtin_claims()) add(c);
      continue;
    }
    bool matched = false;
    for (const auto& c : builtin_claims()) {
      if (c.id == id || (c.id.size() > id.size() && c.id.compare(0, id.size(), id) == 0 && c.id[id.size()] == '-')) {
        add(c);
        matched = true;
      }
    }
    if (!matched) throw UnknownClaimError(id);
  }
  return out;
}

ClaimVerdict evaluate(const Claim& claim, const RingFacts& f) {
  ClaimVerdict v{claim.id, f.ring.label(), Outcome::not_applicable, {}};
  if (!f.has_unity) return v;
  if (!claim.applicable(f)) {
    if (claim.coverage_gap) {
      if (auto w = claim.coverage_gap(f)) {
        v.outcome = Outcome::hypothesis_gap;
        v.witness = *w;
      }
    }
    return v;
  }
  if (!f.upg_report || !f.cmp_report) {
    v.outcome = Outcome::skipped;
    v.witness = f.report_error;
    return v;
  }
  auto r = claim.check(f);
  v.outcome = r.outcome;
  v.witness = std::move(r.witness);
  return v;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

std::vector<RingFamilySpec> default_sweep_specs(std::size_t zmod_max) {
  std::vector<RingFamilySpec> out;
  for (std::size_t n = 2; n <= zmod_max; ++n) out.push_back(RingFamilySpec::parse("zmod:" + std::to_string(n)));
  for (const char* s : {"gf:2^1", "gf:2^2", "gf:2^3", "gf:2^4", "gf:3^1", "gf:3^2", "gf:5^1", "gf:7^1",
                        "gf:11^1", "gf:13^1"})
    out.push_back(RingFamilySpec::parse(s));
  for (std::size_t k = 1; k <= 6; ++k) out.push_back(RingFamilySpec::parse("bool:" + std::to_string(k)));
  for (const char* s : {"prod:(zmod:2,zmod:3)", "prod:(zmod:3,zmod:3)", "prod:(zmod:2,zmod:2,zmod:3)",
                        "prod:(zmod:3,zmod:5)", "prod:(zmod:4,zmod:3)", "prod:(zmod:3,zmod:4,zmod:5)",
                        "prod:(gf:2^2,zmod:3)", "prod:(gf:2^2,bool:1)", "prod:(zmod:5,zmod:5)",
                        "prod:(zmod:8,zmod:3)"})
    out.push_back(RingFamilySpec::parse(s));
  return out;
}

std::vector<ClaimVerdict> run_sweep(const std::vector<const Claim*>& claims,
                                    const std::vector<FiniteRing>& input, const SweepOptions& options) {
  std::vector<FiniteRing> rings;
  for (const auto& r : input) {
    const bool dup = std::any_of(rings.begin(), rings.end(),
                                 [&](const FiniteRing& x) { return x.label() == r.label(); });
    if (!dup) rings.push_back(r);
  }

  std::vector<std::optional<RingFacts>> facts(rings.size());
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(rings.size(), 1));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rings.size(); i = next++) facts[i] = analyze_ring(rings[i], options.limits);
      });
  }

  std::vector<ClaimVerdict> out;
  out.reserve(claims.size() * rings.size());
  for (const Claim* c : claims)
    for (const auto& f : facts) out.push_back(evaluate(*c, *f));
  std::stable_sort(out.begin(), out.end(), [](const ClaimVerdict& a, const ClaimVerdict& b) {
    if (a.claim_id != b.claim_id) return natural_less(a.claim_id, b.claim_id);
    return natural_less(a.ring_label, b.ring_label);
  });
  return out;
}

std::vector<ClaimVerdict> run_sweep(const std::vector<const Claim*>& claims,
                                    const std::vector<RingFamilySpec>& specs, const SweepOptions& options) {
  std::vector<FiniteRing> rings;
  rings.reserve(specs.size());
  for (const auto& s : specs) rings.push_back(s.build(options.order_cap));
  return run_sweep(claims, rings, options);
}

namespace {

struct Counts {
  std::size_t by[5] = {0, 0, 0, 0, 0};
  std::size_t& operator[](Outcome o) { return by[static_cast<int>(o)]; }
};

constexpr Outcome kOrder[] = {Outcome::pass, Outcome::fail, Outcome::hypothesis_gap, Outcome::not_applicable,
                              Outcome::skipped};

std::string csv_field(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string render_report(const std::vector<ClaimVerdict>& verdicts, ReportFormat format) {
  // Group by claim, keeping the sorted order of first appearance.
  std::vector<std::string> ids;
  std::map<std::string, Counts> counts;
  Counts total;
  for (const auto& v : verdicts) {
    if (!counts.count(v.claim_id)) ids.push_back(v.claim_id);
    ++counts[v.claim_id][v.outcome];
    ++total[v.outcome];
  }
  std::ostringstream os;
  if (format == ReportFormat::csv) {
    os << "claim_id,ring,outcome,witness\n";
    for (const auto& v : verdicts)
      os << v.claim_id << "," << csv_field(v.ring_label) << "," << outcome_name(v.outcome) << ","
         << csv_field(v.witness) << "\n";
    return os.str();
  }
  if (format == ReportFormat::json) {
    nlohmann::ordered_json doc;
    auto sum = nlohmann::ordered_json::object();
    sum["verdicts"] = verdicts.size();
    for (auto o : kOrder) sum[std::string(outcome_name(o))] = total[o];
    doc["summary"] = sum;
    auto claims = nlohmann::ordered_json::array();
    for (const auto& id : ids) {
      nlohmann::ordered_json cj;
      cj["id"] = id;
      auto cc = nlohmann::ordered_json::object();
      for (auto o : kOrder) cc[std::string(outcome_name(o))] = counts[id][o];
      cj["counts"] = cc;
      auto vs = nlohmann::ordered_json::array();
      for (const auto& v : verdicts) {
        if (v.claim_id != id) continue;
        nlohmann::ordered_json vj;
        vj["ring"] = v.ring_label;
        vj["outcome"] = outcome_name(v.outcome);
        vj["witness"] = v.witness;
        vs.push_back(std::move(vj));
      }
      cj["verdicts"] = std::move(vs);
      claims.push_back(std::move(cj));
    }
    doc["claims"] = std::move(claims);
    return doc.dump(2) + "\n";
  }

  auto row = [&](const std::string& name, Counts& c) {
    std::ostringstream line;
    line << std::left << std::setw(12) << name;
    for (auto o : kOrder) line << std::setw(6) << c[o];
    std::string l = line.str();
    l.erase(l.find_last_not_of(' ') + 1);
    os << l << "\n";
  };
  os << "claim       pass  fail  gap   n/a   skip\n";
  for (const auto& id : ids) row(id, counts[id]);
  row("total", total);
  bool header = false;
  for (const auto& v : verdicts) {
    if (v.outcome == Outcome::pass || v.outcome == Outcome::not_applicable) continue;
    if (!header) {
      os << "\nfindings:\n";
      header = true;
    }
    os << "  " << outcome_name(v.outcome) << "  " << v.claim_id << "  " << v.ring_label << ": " << v.witness << "\n";
  }
  return os.str();
}

std::string claims_table_markdown() {
  std::ostringstream os;
  os << "| id | statement |\n|---|---|\n";
  for (const auto& c : builtin_claims()) {
    std::string st;
    for (char ch : c.statement) st += ch == '|' ? std::string("\\|") : std::string(1, ch);
    os << "| " << c.id << " | " << st << " |\n";
  }
  return os.str();
}

}  // namespace upg
