#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "upg/graph.hpp"

namespace upg {

/// Non-negative integer or infinity. Only comparison and printing are defined.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr explicit ExtendedNat(std::uint64_t v) : value_(v) {}
  static constexpr ExtendedNat infinity() {
    ExtendedNat x;
    x.infinite_ = true;
    return x;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Throws std::logic_error on infinity.
  std::uint64_t value() const;
  /// Decimal digits, or "inf".
  std::string to_string() const;

  friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const ExtendedNat& a, std::uint64_t b) {
    return !a.infinite_ && a.value_ == b;
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/// An exact search refused to run because the graph exceeds its size bound.
class VertexBoundError : public std::runtime_error {
 public:
  VertexBoundError(std::string invariant, std::size_t n, std::size_t bound);
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

struct SolverLimits {
  std::size_t hamiltonian_max_vertices = 256;
  std::size_t planarity_max_vertices = 512;
};

std::vector<std::vector<Vertex>> components(const SimpleGraph& g);
std::vector<Vertex> isolated_vertices(const SimpleGraph& g);

/// Shortest cycle length; infinity for forests.
ExtendedNat girth(const SimpleGraph& g);

struct EccentricityProfile {
  ExtendedNat diameter;
  ExtendedNat radius;
  std::vector<ExtendedNat> eccentricity;
};
/// Distances across components are infinite, so a disconnected graph with at
/// least two vertices has diameter = radius = infinity. K1 gives 0/0.
EccentricityProfile eccentricity_profile(const SimpleGraph& g);

/// Minimum dominating set size. Isolated vertices must be chosen.
std::size_t domination_number(const SimpleGraph& g);
/// A maximum clique, vertices ascending.
std::vector<Vertex> maximum_clique(const SimpleGraph& g);
std::size_t clique_number(const SimpleGraph& g);
/// Clique count under the convention that each isolated vertex of an edgeless
/// graph is a separate 1-clique: n for edgeless graphs, clique_number otherwise.
std::size_t clique_number_isolated_convention(const SimpleGraph& g);
std::size_t chromatic_number(const SimpleGraph& g);
/// Greedy DSATUR colouring; colours are 0-based.
std::vector<std::size_t> dsatur_colouring(const SimpleGraph& g);

bool is_planar(const SimpleGraph& g, const SolverLimits& limits = {});
/// Convention: graphs with fewer than 3 vertices are not Hamiltonian.
bool is_hamiltonian(const SimpleGraph& g, const SolverLimits& limits = {});

namespace detail {
/// Path-addition planarity test on every biconnected block, without the
/// quick accept/reject shortcuts or the multipartite closed form.
bool planar_by_path_addition(const SimpleGraph& g);
/// Backtracking search without the Dirac shortcut.
bool hamiltonian_by_search(const SimpleGraph& g);
}  // namespace detail

namespace closed_form {
/// Planarity of the complete multipartite graph with these part sizes.
bool multipartite_planar(std::vector<std::size_t> parts);
/// n >= 3 and the largest part is at most the sum of the others.
bool multipartite_hamiltonian(const std::vector<std::size_t>& parts);
}  // namespace closed_form

struct InvariantReport {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  std::size_t isolated_count = 0;
  bool connected = true;
  ExtendedNat girth;
  ExtendedNat diameter;
  ExtendedNat radius;
  std::size_t domination_number = 0;
  std::size_t chromatic_number = 0;
  std::size_t clique_number = 0;
  bool planar = true;
  bool hamiltonian = false;
};

/// Every invariant of g. Throws VertexBoundError from the bounded searches and
/// std::logic_error if the report is internally inconsistent.
InvariantReport full_report(const SimpleGraph& g, const SolverLimits& limits = {});

/// Ordered JSON object; infinite values are the string "inf".
std::string report_json(const InvariantReport& r);
/// Two-column aligned table.
std::string report_text(const InvariantReport& r);

}  // namespace upg
