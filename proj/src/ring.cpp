#include "upg/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace upg {

OrderBoundError::OrderBoundError(std::size_t requested, std::size_t cap)
    : RingError("ring order " + std::to_string(requested) + " exceeds order cap " +
                std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

namespace {

std::string witness_text(const std::vector<Element>& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  os << ")";
  return os.str();
}

// Saturating multiply so that order checks on huge products cannot overflow.
std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kHardOrderLimit * 2 / a) return kHardOrderLimit * 2;
  return a * b;
}

void check_order(std::size_t order, std::size_t cap) {
  const std::size_t effective = std::min(cap, kHardOrderLimit);
  if (order > effective) throw OrderBoundError(order, effective);
}

}  // namespace

AxiomError::AxiomError(std::string axiom, std::vector<Element> witness)
    : RingError("ring axiom violated: " + axiom + " at " + witness_text(witness)),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

NoUnityError::NoUnityError(const std::string& ring_label)
    : RingError("ring " + ring_label + " has no unity; units are undefined") {}

class RingBuilder {
 public:
  RingBuilder(std::size_t order, std::string label) {
    t_.order = order;
    t_.add.assign(order * order, 0);
    t_.mul.assign(order * order, 0);
    t_.label = std::move(label);
    t_.names.resize(order);
    for (std::size_t i = 0; i < order; ++i) t_.names[i] = std::to_string(i);
  }

  void set(std::size_t a, std::size_t b, std::size_t sum, std::size_t prod) {
    t_.add[a * t_.order + b] = static_cast<std::uint16_t>(sum);
    t_.mul[a * t_.order + b] = static_cast<std::uint16_t>(prod);
  }
  void name(std::size_t x, std::string s) { t_.names[x] = std::move(s); }
  void zero(Element z) { t_.zero = z; }
  void unity(std::optional<Element> e) { t_.unity = e; }

  /// Scan for a two-sided multiplicative identity.
  void locate_unity() {
    const std::size_t n = t_.order;
    t_.unity.reset();
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        ok = t_.mul[e * n + x] == x && t_.mul[x * n + e] == x;
      if (ok) {
        // In a ring with more than one element the unity differs from zero.
        if (n == 1 || e != t_.zero) t_.unity = static_cast<Element>(e);
        return;
      }
    }
  }

  FiniteRing finish() { return FiniteRing(std::make_shared<const FiniteRing::Tables>(std::move(t_))); }

 private:
  FiniteRing::Tables t_;
};

std::optional<AxiomViolation> find_axiom_violation(const FiniteRing& r) {
  const auto n = static_cast<Element>(r.order());
  const Element z = r.zero();
  for (Element a = 0; a < n; ++a) {
    if (r.add(z, a) != a || r.add(a, z) != a) return AxiomViolation{"additive identity", {z, a}};
    bool has_neg = false;
    for (Element b = 0; b < n && !has_neg; ++b) has_neg = r.add(a, b) == z;
    if (!has_neg) return AxiomViolation{"additive inverse", {a}};
    for (Element b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return AxiomViolation{"additive commutativity", {a, b}};
      if (r.mul(a, b) != r.mul(b, a))
        return AxiomViolation{"multiplicative commutativity", {a, b}};
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          return AxiomViolation{"additive associativity", {a, b, c}};
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          return AxiomViolation{"multiplicative associativity", {a, b, c}};
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          return AxiomViolation{"left distributivity", {a, b, c}};
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
          return AxiomViolation{"right distributivity", {a, b, c}};
      }
  return std::nullopt;
}

FiniteRing FiniteRing::from_tables(std::size_t order, std::span<const Element> add,
                                   std::span<const Element> mul, Element zero,
                                   std::string label, std::size_t order_cap) {
  if (order == 0) throw RingError("ring order must be positive");
  check_order(order, order_cap);
  if (add.size() != order * order || mul.size() != order * order)
    throw RingError("operation tables must be " + std::to_string(order) + "x" +
                    std::to_string(order));
  if (zero >= order) throw RingError("zero index out of range");
  for (std::size_t i = 0; i < order * order; ++i)
    if (add[i] >= order || mul[i] >= order)
      throw RingError("table entry out of range at row " + std::to_string(i / order) +
                      ", column " + std::to_string(i % order));

  RingBuilder b(order, label.empty() ? "table(" + std::to_string(order) + ")" : std::move(label));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) b.set(x, y, add[x * order + y], mul[x * order + y]);
  b.zero(zero);
  b.locate_unity();
  FiniteRing ring = b.finish();
  if (auto v = find_axiom_violation(ring)) throw AxiomError(v->axiom, v->witness);
  return ring;
}

FiniteRing table_ring(std::span<const std::vector<Element>> add_table,
                      std::span<const std::vector<Element>> mul_table, Element zero,
                      std::string label, std::size_t order_cap) {
  const std::size_t n = add_table.size();
  if (mul_table.size() != n) throw RingError("add and mul tables differ in dimension");
  std::vector<Element> add, mul;
  add.reserve(n * n);
  mul.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (add_table[i].size() != n || mul_table[i].size() != n)
      throw RingError("tables must be square; row " + std::to_string(i) + " has wrong length");
    add.insert(add.end(), add_table[i].begin(), add_table[i].end());
    mul.insert(mul.end(), mul_table[i].begin(), mul_table[i].end());
  }
  return FiniteRing::from_tables(n, add, mul, zero, std::move(label), order_cap);
}

FiniteRing zmod(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw RingError("zmod requires n >= 1");
  check_order(n, order_cap);
  RingBuilder b(n, "Z/" + std::to_string(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) b.set(x, y, (x + y) % n, (x * y) % n);
  b.zero(0);
  b.unity(n == 1 ? 0 : 1);
  return b.finish();
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::size_t>;  // low degree first

// Remainder of a modulo monic m over Z/p.
Poly poly_mod(Poly a, const Poly& m, std::size_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::size_t lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i <= dm; ++i)
        a[shift + i] = (a[shift + i] + p * p - (lead * m[i]) % p) % p;
    a.pop_back();
  }
  return a;
}

// Decode the index of the n-th monic polynomial of degree d in lex order on
// (c_{d-1}, ..., c_0).
Poly monic_from_rank(std::size_t rank, std::size_t d, std::size_t p) {
  Poly f(d + 1, 0);
  f[d] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    f[i] = rank % p;
    rank /= p;
  }
  return f;
}

bool divides(const Poly& m, const Poly& f, std::size_t p) {
  Poly r = poly_mod(f, m, p);
  return std::all_of(r.begin(), r.end(), [](std::size_t c) { return c == 0; });
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r = checked_mul(r, b);
  return r;
}

}  // namespace

std::vector<std::size_t> smallest_monic_irreducible(std::size_t p, std::size_t k) {
  if (!is_prime(p)) throw RingError("gf requires prime p, got " + std::to_string(p));
  if (k == 0) throw RingError("gf requires k >= 1");
  const std::size_t count = ipow(p, k);
  for (std::size_t rank = 0; rank < count; ++rank) {
    Poly f = monic_from_rank(rank, k, p);
    bool reducible = false;
    for (std::size_t d = 1; d <= k / 2 && !reducible; ++d)
      for (std::size_t r2 = 0, c = ipow(p, d); r2 < c && !reducible; ++r2)
        reducible = divides(monic_from_rank(r2, d, p), f, p);
    if (!reducible) return f;
  }
  throw RingError("no irreducible polynomial found");  // unreachable for prime p
}

FiniteRing gf(std::size_t p, std::size_t k, std::size_t order_cap) {
  if (!is_prime(p)) throw RingError("gf requires prime p, got " + std::to_string(p));
  if (k == 0) throw RingError("gf requires k >= 1");
  const std::size_t q = ipow(p, k);
  check_order(q, order_cap);
  const Poly modulus = smallest_monic_irreducible(p, k);

  auto decode = [&](std::size_t x) {
    Poly c(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = x % p;
      x /= p;
    }
    return c;
  };
  auto encode = [&](const Poly& c) {
    std::size_t x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i] % p;
    return x;
  };

  RingBuilder b(q, "GF(" + std::to_string(q) + ")");
  std::vector<Poly> polys(q);
  for (std::size_t x = 0; x < q; ++x) polys[x] = decode(x);
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = 0; y < q; ++y) {
      Poly s(k), prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i) s[i] = (polys[x][i] + polys[y][i]) % p;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + polys[x][i] * polys[y][j]) % p;
      b.set(x, y, encode(s), encode(poly_mod(prod, modulus, p)));
    }
  }
  if (k > 1) {
    for (std::size_t x = 0; x < q; ++x) {
      std::string s;
      for (std::size_t d = k; d-- > 0;) {
        const std::size_t c = polys[x][d];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (d == 0 || c != 1) s += std::to_string(c);
        if (d >= 1) s += "a";
        if (d >= 2) s += "^" + std::to_string(d);
      }
      b.name(x, s.empty() ? "0" : s);
    }
  }
  b.zero(0);
  b.unity(1);
  return b.finish();
}

FiniteRing direct_product(std::span<const FiniteRing> comps, std::size_t order_cap) {
  if (comps.empty()) throw RingError("direct product needs at least one component");
  std::size_t order = 1;
  for (const auto& c : comps) order = checked_mul(order, c.order());
  check_order(order, order_cap);
  if (comps.size() == 1) return comps.front();

  // Mixed radix with the first component most significant.
  const std::size_t m = comps.size();
  std::vector<std::size_t> stride(m, 1);
  for (std::size_t i = m - 1; i-- > 0;) stride[i] = stride[i + 1] * comps[i + 1].order();
  auto digit = [&](std::size_t x, std::size_t i) { return (x / stride[i]) % comps[i].order(); };

  std::string label;
  for (std::size_t i = 0; i < m; ++i) label += (i ? " × " : "") + comps[i].label();
  RingBuilder b(order, label);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t s = 0, p = 0;
      for (std::size_t i = 0; i < m; ++i) {
        const auto dx = static_cast<Element>(digit(x, i));
        const auto dy = static_cast<Element>(digit(y, i));
        s += comps[i].add(dx, dy) * stride[i];
        p += comps[i].mul(dx, dy) * stride[i];
      }
      b.set(x, y, s, p);
    }
    std::string name = "(";
    for (std::size_t i = 0; i < m; ++i)
      name += (i ? "," : "") + comps[i].element_name(static_cast<Element>(digit(x, i)));
    b.name(x, name + ")");
  }
  std::size_t z = 0, e = 0;
  bool all_unity = true;
  for (std::size_t i = 0; i < m; ++i) {
    z += comps[i].zero() * stride[i];
    if (auto u = comps[i].unity()) e += *u * stride[i];
    else all_unity = false;
  }
  b.zero(static_cast<Element>(z));
  b.unity(all_unity ? std::optional<Element>(static_cast<Element>(e)) : std::nullopt);
  return b.finish();
}

FiniteRing boolean_ring(std::size_t n_copies, std::size_t order_cap) {
  if (n_copies == 0) throw RingError("boolean ring needs at least one copy");
  if (n_copies >= 17) throw OrderBoundError(kHardOrderLimit * 2, std::min(order_cap, kHardOrderLimit));
  check_order(std::size_t{1} << n_copies, order_cap);
  std::vector<FiniteRing> comps(n_copies, zmod(2));
  return direct_product(comps, order_cap);
}

bool is_boolean(const FiniteRing& r) {
  if (!r.has_unity()) return false;
  for (Element x = 0; x < r.order(); ++x)
    if (r.mul(x, x) != x) return false;
  return true;
}

std::size_t characteristic(const FiniteRing& r) {
  std::size_t result = 1;
  for (Element x = 0; x < r.order(); ++x) {
    std::size_t ord = 1;
    for (Element acc = x; acc != r.zero(); acc = r.add(acc, x)) ++ord;
    result = std::lcm(result, ord);
  }
  return result;
}

bool is_field(const FiniteRing& r) {
  if (!r.has_unity() || r.order() < 2) return false;
  const Element e = *r.unity();
  for (Element x = 0; x < r.order(); ++x) {
    if (x == r.zero()) continue;
    bool unit = false;
    for (Element y = 0; y < r.order() && !unit; ++y) unit = r.mul(x, y) == e;
    if (!unit) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> cyclic_residues(const FiniteRing& r) {
  if (!r.has_unity()) return std::nullopt;
  const std::size_t n = r.order();
  std::vector<std::size_t> residue(n, n);
  Element acc = r.zero();
  for (std::size_t k = 0; k < n; ++k) {
    if (residue[acc] != n) return std::nullopt;
    residue[acc] = k;
    acc = r.add(acc, *r.unity());
  }
  return residue;
}

}  // namespace upg
