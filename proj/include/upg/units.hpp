#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "upg/ring.hpp"

namespace upg {

/// Units of a ring with unity together with the inverse involution.
class UnitGroup {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  /// Unit element indices in ascending order.
  const std::vector<Element>& elements() const noexcept { return units_; }
  std::size_t size() const noexcept { return units_.size(); }

  bool contains(Element x) const { return x < inverse_.size() && inverse_[x] != kNone; }
  /// Throws RingError when x is not a unit.
  Element inverse_of(Element x) const;
  /// Position of x in elements(), if x is a unit.
  std::optional<std::size_t> position(Element x) const;

 private:
  friend UnitGroup units(const FiniteRing& ring);
  static constexpr Element kNone = static_cast<Element>(-1);

  explicit UnitGroup(FiniteRing r) : ring_(std::move(r)) {}
  FiniteRing ring_;
  std::vector<Element> units_;
  std::vector<Element> inverse_;   // indexed by element, kNone for non-units
  std::vector<std::size_t> pos_;
};

/// Exhaustive unit scan; throws NoUnityError for rings without unity.
UnitGroup units(const FiniteRing& ring);

/// |{x in U : x·x = e}|
std::size_t self_inverse_count(const UnitGroup& ug);

}  // namespace upg
