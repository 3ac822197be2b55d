#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "upg/invariants.hpp"
#include "upg/ring_spec.hpp"

namespace upg {

enum class Outcome { pass, fail, not_applicable, hypothesis_gap, skipped };
std::string_view outcome_name(Outcome o);

/// Everything a claim predicate may inspect about one ring.
struct RingFacts {
  explicit RingFacts(FiniteRing r) : ring(std::move(r)) {}

  FiniteRing ring;
  bool has_unity = false;
  std::size_t unit_count = 0;
  std::size_t self_inverse = 0;  ///< s: isolated vertices of Γ'
  std::size_t inverse_pairs = 0; ///< t: K2 components of Γ'
  std::size_t characteristic = 0;
  bool boolean = false;
  bool field = false;
  /// residue[x] = k with x = k·e, when the ring is isomorphic to Z/n.
  std::optional<std::vector<std::size_t>> residues;
  std::optional<UnitGroup> units;
  std::optional<SimpleGraph> upg;
  std::optional<SimpleGraph> cmp;
  StructureDecomposition decomposition;
  MultipartiteProfile profile;
  std::optional<InvariantReport> upg_report;
  std::optional<InvariantReport> cmp_report;
  std::string report_error;  ///< set when a bounded solver refused
};

RingFacts analyze_ring(const FiniteRing& ring, const SolverLimits& limits = {});

struct ClaimResult {
  Outcome outcome = Outcome::pass;
  std::string witness;
};

struct Claim {
  std::string id;
  std::string statement;
  /// Hypothesis. Rings without unity never reach it.
  std::function<bool(const RingFacts&)> applicable;
  /// Conclusion; only invoked when applicable() holds and reports exist.
  std::function<ClaimResult(const RingFacts&)> check;
  /// Optional: for rings outside the hypothesis, a witness when the ring
  /// falls into a case no neighbouring statement covers.
  std::function<std::optional<std::string>(const RingFacts&)> coverage_gap;
};

struct ClaimVerdict {
  std::string claim_id;
  std::string ring_label;
  Outcome outcome = Outcome::pass;
  std::string witness;

  friend bool operator==(const ClaimVerdict&, const ClaimVerdict&) = default;
};

class UnknownClaimError : public std::invalid_argument {
 public:
  explicit UnknownClaimError(const std::string& id) : std::invalid_argument("unknown claim id '" + id + "'") {}
};

const std::vector<Claim>& builtin_claims();
/// Exact id lookup; throws UnknownClaimError.
const Claim& lookup_claim(std::string_view id);
/// "all", or ids; an id also selects its "-N" sub-claims.
std::vector<const Claim*> select_claims(const std::vector<std::string>& filter);

/// Evaluates one claim on one analysed ring.
ClaimVerdict evaluate(const Claim& claim, const RingFacts& facts);

struct SweepOptions {
  std::size_t order_cap = kDefaultOrderCap;
  SolverLimits limits;
  std::size_t threads = 0;  ///< 0 = hardware concurrency
};

/// Ring families of the default sweep: zmod 2..zmod_max, fields up to order
/// 16, Boolean products up to 2^6 and a fixed set of direct products.
std::vector<RingFamilySpec> default_sweep_specs(std::size_t zmod_max = 60);

/// Rings with identical labels are swept once. Verdicts are sorted by claim
/// id, then ring label (natural order). Throws RingError for unbuildable specs.
std::vector<ClaimVerdict> run_sweep(const std::vector<const Claim*>& claims,
                                    const std::vector<RingFamilySpec>& rings,
                                    const SweepOptions& options = {});
std::vector<ClaimVerdict> run_sweep(const std::vector<const Claim*>& claims,
                                    const std::vector<FiniteRing>& rings,
                                    const SweepOptions& options = {});

/// Natural ordering: digit runs compare numerically.
bool natural_less(std::string_view a, std::string_view b);

enum class ReportFormat { text, json, csv };
std::string render_report(const std::vector<ClaimVerdict>& verdicts, ReportFormat format);

/// Markdown table of every registered claim.
std::string claims_table_markdown();

}  // namespace upg
