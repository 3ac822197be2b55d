#include "upg/units.hpp"

namespace upg {

UnitGroup units(const FiniteRing& ring) {
  if (!ring.has_unity()) throw NoUnityError(ring.label());
  const Element e = *ring.unity();
  const auto n = static_cast<Element>(ring.order());
  UnitGroup ug(ring);
  ug.inverse_.assign(n, UnitGroup::kNone);
  ug.pos_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (ring.mul(x, y) == e) {
        ug.inverse_[x] = y;
        break;
      }
    }
    if (ug.inverse_[x] != UnitGroup::kNone) {
      ug.pos_[x] = ug.units_.size();
      ug.units_.push_back(x);
    }
  }
  return ug;
}

Element UnitGroup::inverse_of(Element x) const {
  if (!contains(x))
    throw RingError("element " + std::to_string(x) + " is not a unit of " + ring_.label());
  return inverse_[x];
}

std::optional<std::size_t> UnitGroup::position(Element x) const {
  if (!contains(x)) return std::nullopt;
  return pos_[x];
}

std::size_t self_inverse_count(const UnitGroup& ug) {
  const FiniteRing& r = ug.ring();
  std::size_t count = 0;
  for (Element x : ug.elements())
    if (r.mul(x, x) == *r.unity()) ++count;
  return count;
}

}  // namespace upg
