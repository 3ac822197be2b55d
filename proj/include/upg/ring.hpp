#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace upg {

/// Dense element index in 0..order-1.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 4096;
/// Tables are stored as 16-bit indices, so no ring may exceed this.
inline constexpr std::size_t kHardOrderLimit = 65536;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested ring would exceed the configured order cap.
class OrderBoundError : public RingError {
 public:
  OrderBoundError(std::size_t requested, std::size_t cap);
  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// A ring axiom failed on an explicit table; carries the first witness found.
class AxiomError : public RingError {
 public:
  AxiomError(std::string axiom, std::vector<Element> witness);
  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<Element> witness_;
};

class NoUnityError : public RingError {
 public:
  explicit NoUnityError(const std::string& ring_label);
};

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> witness;
};

/// Finite commutative ring over the index domain 0..order-1 with explicit
/// Cayley tables. Copies share the immutable tables.
class FiniteRing {
 public:
  /// Validates every axiom exhaustively and locates the unity by scan.
  /// Throws AxiomError naming the first violated axiom.
  static FiniteRing from_tables(std::size_t order, std::span<const Element> add,
                                std::span<const Element> mul, Element zero,
                                std::string label,
                                std::size_t order_cap = kDefaultOrderCap);

  std::size_t order() const noexcept { return tables_->order; }
  Element add(Element a, Element b) const noexcept {
    return tables_->add[static_cast<std::size_t>(a) * tables_->order + b];
  }
  Element mul(Element a, Element b) const noexcept {
    return tables_->mul[static_cast<std::size_t>(a) * tables_->order + b];
  }
  Element zero() const noexcept { return tables_->zero; }
  std::optional<Element> unity() const noexcept { return tables_->unity; }
  bool has_unity() const noexcept { return tables_->unity.has_value(); }

  const std::string& label() const noexcept { return tables_->label; }
  /// Display name of an element ("7", "a+1", "(1,0,1)").
  const std::string& element_name(Element x) const { return tables_->names.at(x); }

 private:
  friend class RingBuilder;
  struct Tables {
    std::size_t order = 0;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    Element zero = 0;
    std::optional<Element> unity;
    std::string label;
    std::vector<std::string> names;
  };
  explicit FiniteRing(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}

  std::shared_ptr<const Tables> tables_;
};

/// Returns the first violated axiom, or nullopt when (R,+,·) is a commutative
/// ring. Exhaustive, O(order^3).
std::optional<AxiomViolation> find_axiom_violation(const FiniteRing& ring);

FiniteRing zmod(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
FiniteRing gf(std::size_t p, std::size_t k, std::size_t order_cap = kDefaultOrderCap);
FiniteRing boolean_ring(std::size_t n_copies, std::size_t order_cap = kDefaultOrderCap);
FiniteRing direct_product(std::span<const FiniteRing> components,
                          std::size_t order_cap = kDefaultOrderCap);
/// Row-major square tables; `label` defaults to "table(n)".
FiniteRing table_ring(std::span<const std::vector<Element>> add_table,
                      std::span<const std::vector<Element>> mul_table, Element zero,
                      std::string label = {}, std::size_t order_cap = kDefaultOrderCap);

bool is_boolean(const FiniteRing& ring);
std::size_t characteristic(const FiniteRing& ring);
/// Ring with unity and |U| = order - 1 > 0.
bool is_field(const FiniteRing& ring);

/// For a ring isomorphic to Z/n (has unity and characteristic == order),
/// returns residue[x] = k such that x = k·e. Otherwise nullopt.
std::optional<std::vector<std::size_t>> cyclic_residues(const FiniteRing& ring);

bool is_prime(std::size_t n);

/// Coefficients (low degree first) of the lexicographically smallest monic
/// irreducible polynomial of degree k over Z/p.
std::vector<std::size_t> smallest_monic_irreducible(std::size_t p, std::size_t k);

}  // namespace upg
