#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "json.hpp"
#include "oracles.hpp"
#include "upg/invariants.hpp"
#include "upg/ring_spec.hpp"

using namespace upg;

namespace {

SimpleGraph upg_of(const FiniteRing& r) { return unity_product_graph(units(r)); }
SimpleGraph cmp_of(const FiniteRing& r) { return complement(upg_of(r)); }
const auto kInf = ExtendedNat::infinity();

std::vector<SimpleGraph> fixture_graphs() {
  std::vector<SimpleGraph> gs;
  for (std::size_t n = 1; n <= 8; ++n) {
    gs.push_back(make_complete(n));
    gs.push_back(make_path(n));
    gs.push_back(SimpleGraph(n, {}));
  }
  for (std::size_t n = 3; n <= 12; ++n) gs.push_back(make_cycle(n));
  for (std::size_t rim = 3; rim <= 8; ++rim) gs.push_back(oracle::wheel(rim));
  gs.push_back(oracle::petersen());
  gs.push_back(oracle::cube());
  gs.push_back(oracle::grotzsch());
  for (auto parts : std::vector<std::vector<std::size_t>>{{3, 3}, {2, 2, 2}, {2, 2, 1, 1}, {3, 3, 3}, {4, 4},
                                                          {1, 1, 1, 1, 1}, {2, 1, 1, 1}, {5, 1}, {2, 2, 2, 2, 1, 1}})
    gs.push_back(make_complete_multipartite(parts));
  for (std::size_t n = 1; n <= 40; ++n) {
    auto r = zmod(n);
    if (units(r).size() > 12) continue;
    gs.push_back(upg_of(r));
    gs.push_back(cmp_of(r));
  }
  return gs;
}

// Rotation systems the planarity oracle may have to enumerate.
double rotation_count(const SimpleGraph& g) {
  double r = 1;
  for (Vertex v = 0; v < g.size(); ++v)
    for (std::size_t k = 2; k < g.degree(v); ++k) r *= static_cast<double>(k);
  return r;
}

void check_against_oracles(const SimpleGraph& g) {
  CHECK(domination_number(g) == oracle::domination(g));
  CHECK(clique_number(g) == oracle::clique(g));
  CHECK(chromatic_number(g) == oracle::chromatic(g));
  CHECK(is_hamiltonian(g) == oracle::hamiltonian(g));
  CHECK(detail::hamiltonian_by_search(g) == oracle::hamiltonian(g));
  auto q = maximum_clique(g);
  CHECK(q.size() == clique_number(g));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) CHECK(g.adjacent(q[i], q[j]));
  auto col = dsatur_colouring(g);
  for (auto [u, v] : g.edges()) CHECK(col[u] != col[v]);
}

}  // namespace

TEST_CASE("extended naturals") {
  CHECK(kInf > ExtendedNat(1000000));
  CHECK(ExtendedNat(2) < ExtendedNat(3));
  CHECK(kInf == kInf);
  CHECK(kInf.to_string() == "inf");
  CHECK(ExtendedNat(7).to_string() == "7");
  CHECK_THROWS_AS(kInf.value(), std::logic_error);
  CHECK_FALSE(kInf == 3u);
}

TEST_CASE("components and isolated vertices") {
  auto g = upg_of(zmod(11));
  CHECK(components(g).size() == 6);
  auto iso = isolated_vertices(g);
  REQUIRE(iso.size() == 2);
  CHECK(g.label(iso[0]) == "1");
  CHECK(g.label(iso[1]) == "10");
  CHECK(components(cmp_of(zmod(11))).size() == 1);
  CHECK(components(SimpleGraph(5, {})).size() == 5);
  CHECK(isolated_vertices(SimpleGraph(5, {})).size() == 5);
}

TEST_CASE("girth") {
  for (std::size_t p : {3, 5, 7, 11, 13, 97}) CHECK(girth(upg_of(zmod(p))) == kInf);
  CHECK(girth(cmp_of(zmod(11))) == 3u);
  CHECK(girth(make_cycle(5)) == 5u);
  CHECK(girth(oracle::petersen()) == 5u);
  CHECK(girth(oracle::cube()) == 4u);
  CHECK(girth(make_path(7)) == kInf);
  CHECK(girth(cmp_of(gf(2, 2))) == kInf);
}

TEST_CASE("eccentricity") {
  auto e13 = eccentricity_profile(upg_of(zmod(13)));
  CHECK(e13.diameter == kInf);
  CHECK(e13.radius == kInf);
  auto e11 = eccentricity_profile(cmp_of(zmod(11)));
  CHECK(e11.diameter == 2u);
  CHECK(e11.radius == 1u);
  auto e8 = eccentricity_profile(cmp_of(zmod(8)));
  CHECK(e8.diameter == 1u);
  CHECK(e8.radius == 1u);
  auto k1 = eccentricity_profile(make_complete(1));
  CHECK(k1.diameter == 0u);
  CHECK(k1.radius == 0u);
  auto p5 = eccentricity_profile(make_path(5));
  CHECK(p5.diameter == 4u);
  CHECK(p5.radius == 2u);
}

TEST_CASE("domination") {
  CHECK(domination_number(upg_of(zmod(11))) == 6);
  CHECK(domination_number(cmp_of(zmod(16))) == 1);
  CHECK(domination_number(make_complete(1)) == 1);
  CHECK(domination_number(make_cycle(9)) == 3);
  CHECK(domination_number(oracle::petersen()) == 3);
}

TEST_CASE("clique number and its isolated-vertex convention") {
  CHECK(clique_number(upg_of(zmod(11))) == 2);
  CHECK(clique_number(cmp_of(zmod(11))) == 6);
  // Γ'(Z/24) is 8K1: the true clique number is 1; counting each isolated
  // vertex as its own 1-clique gives m = 8.
  CHECK(clique_number(upg_of(zmod(24))) == 1);
  CHECK(clique_number_isolated_convention(upg_of(zmod(24))) == 8);
  CHECK(clique_number_isolated_convention(upg_of(zmod(11))) == 2);
  CHECK(clique_number(oracle::grotzsch()) == 2);
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(upg_of(zmod(24))) == 1);
  CHECK(chromatic_number(upg_of(zmod(11))) == 2);
  CHECK(chromatic_number(cmp_of(zmod(11))) == 6);
  CHECK(chromatic_number(oracle::grotzsch()) == 4);
  CHECK(chromatic_number(oracle::petersen()) == 3);
  CHECK(chromatic_number(make_cycle(7)) == 3);
}

TEST_CASE("planarity") {
  for (std::size_t n = 1; n <= 40; ++n) CHECK(is_planar(upg_of(zmod(n))));
  CHECK(is_planar(cmp_of(zmod(8))));
  CHECK_FALSE(is_planar(cmp_of(zmod(7))));
  CHECK_FALSE(is_planar(make_complete(5)));
  CHECK_FALSE(is_planar(make_complete_multipartite({3, 3})));
  CHECK_FALSE(is_planar(oracle::petersen()));
  CHECK(is_planar(make_complete(4)));
  CHECK(is_planar(oracle::cube()));
  CHECK(is_planar(make_complete_multipartite({2, 2, 2})));
  CHECK(is_planar(oracle::wheel(8)));
  CHECK_FALSE(detail::planar_by_path_addition(make_complete(5)));
  CHECK_FALSE(detail::planar_by_path_addition(oracle::petersen()));
  CHECK(detail::planar_by_path_addition(make_complete_multipartite({2, 2, 2})));
}

TEST_CASE("planarity agrees with the rotation-system oracle on fixtures") {
  for (const auto& g : fixture_graphs()) {
    if (g.size() > 12) continue;
    if (rotation_count(g) > 2e5 && g.edge_count() <= 3 * g.size() - 6) continue;
    CHECK(is_planar(g) == oracle::planar(g));
    CHECK(detail::planar_by_path_addition(g) == is_planar(g));
  }
}

TEST_CASE("planarity agrees with the rotation-system oracle on random graphs") {
  std::mt19937_64 rng(11);
  int checked = 0, hard = 0;
  for (int i = 0; i < 150; ++i) {
    auto g = oracle::random_graph(rng, 4 + i % 5, 0.3 + 0.05 * (i % 6));
    INFO(export_json(g));
    if (g.size() >= 3 && g.edge_count() > 3 * g.size() - 6) CHECK_FALSE(is_planar(g));
    if (rotation_count(g) > 2e5) continue;
    const bool expected = oracle::planar(g);
    CHECK(is_planar(g) == expected);
    CHECK(detail::planar_by_path_addition(g) == expected);
    ++checked;
    hard += !expected && g.edge_count() <= 3 * g.size() - 6;
  }
  CHECK(checked >= 100);
  // Non-planar graphs that pass the Euler bound exercise the real procedure.
  CHECK(hard >= 3);
}

TEST_CASE("multipartite closed forms agree with the general procedures") {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= a; ++b)
      for (std::size_t c = 0; c <= b; ++c)
        for (std::size_t d = 0; d <= (c ? c : 0); ++d) {
          std::vector<std::size_t> parts{a, b};
          if (c) parts.push_back(c);
          if (d) parts.push_back(d);
          auto g = make_complete_multipartite(parts);
          INFO(a << "," << b << "," << c << "," << d);
          CHECK(closed_form::multipartite_planar(parts) == detail::planar_by_path_addition(g));
          CHECK(closed_form::multipartite_hamiltonian(parts) ==
                (g.size() <= 12 ? oracle::hamiltonian(g) : detail::hamiltonian_by_search(g)));
        }
}

TEST_CASE("hamiltonicity") {
  for (std::size_t n = 1; n <= 40; ++n) CHECK_FALSE(is_hamiltonian(upg_of(zmod(n))));
  CHECK(is_hamiltonian(cmp_of(zmod(11))));
  CHECK_FALSE(is_hamiltonian(cmp_of(gf(2, 2))));
  CHECK_FALSE(is_hamiltonian(make_complete(2)));
  CHECK(is_hamiltonian(make_complete(3)));
  CHECK_FALSE(is_hamiltonian(oracle::petersen()));
  CHECK(is_hamiltonian(oracle::cube()));
}

TEST_CASE("oracle equivalence on fixture graphs") {
  for (const auto& g : fixture_graphs()) {
    if (g.size() > 12) continue;
    INFO(export_json(g));
    check_against_oracles(g);
  }
}

TEST_CASE("oracle equivalence on 100 random graphs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng, size(rng), density(rng));
    INFO(export_json(g));
    check_against_oracles(g);
  }
}

TEST_CASE("vertex bounds") {
  SolverLimits tight{4, 4};
  CHECK_THROWS_AS(is_hamiltonian(oracle::petersen(), tight), VertexBoundError);
  CHECK_THROWS_AS(is_planar(oracle::petersen(), tight), VertexBoundError);
  // Shortcuts apply before the bound.
  CHECK(is_hamiltonian(make_complete(9), tight));
  CHECK_FALSE(is_planar(make_complete(9), tight));
}

TEST_CASE("full reports") {
  auto r16 = full_report(upg_of(zmod(16)));
  CHECK(r16.n == 8);
  CHECK(r16.edge_count == 2);
  CHECK(r16.isolated_count == 4);
  CHECK(r16.girth == kInf);
  CHECK(r16.diameter == kInf);
  CHECK(r16.domination_number == 6);
  CHECK(r16.chromatic_number == 2);
  CHECK(r16.clique_number == 2);
  CHECK(r16.planar);
  CHECK_FALSE(r16.hamiltonian);

  auto k1 = full_report(make_complete(1));
  CHECK(k1.n == 1);
  CHECK(k1.diameter == 0u);
  CHECK(k1.radius == 0u);
  CHECK(k1.domination_number == 1);
  CHECK(k1.chromatic_number == 1);
  CHECK(k1.clique_number == 1);
  CHECK(k1.planar);
  CHECK_FALSE(k1.hamiltonian);

  auto c24 = full_report(cmp_of(zmod(24)));
  CHECK(c24.edge_count == 28);
  CHECK(c24.diameter == 1u);
  CHECK(c24.chromatic_number == 8);
  CHECK(c24.clique_number == 8);
  CHECK_FALSE(c24.planar);
  CHECK(c24.hamiltonian);

  auto doc = nlohmann::json::parse(report_json(r16));
  CHECK(doc["girth"] == "inf");
  CHECK(doc["diameter"] == "inf");
  CHECK(doc["domination_number"] == 6);
  CHECK(report_json(k1) ==
        "{\n  \"n\": 1,\n  \"edge_count\": 0,\n  \"component_count\": 1,\n  \"isolated_count\": 1,\n"
        "  \"connected\": true,\n  \"girth\": \"inf\",\n  \"diameter\": 0,\n  \"radius\": 0,\n"
        "  \"domination_number\": 1,\n  \"chromatic_number\": 1,\n  \"clique_number\": 1,\n"
        "  \"planar\": true,\n  \"hamiltonian\": false\n}\n");
  CHECK(report_text(k1).find("diameter     0\n") != std::string::npos);
}

TEST_CASE("property: sweep invariants over Z/n") {
  for (std::size_t n = 2; n <= 60; ++n) {
    INFO(n);
    auto ug = units(zmod(n));
    auto g = unity_product_graph(ug);
    auto c = complement(g);
    const auto s = self_inverse_count(ug), t = (ug.size() - s) / 2;
    auto a = full_report(g), b = full_report(c);
    CHECK(a.girth == kInf);
    if (ug.size() >= 2) {
      CHECK(a.diameter == kInf);
      CHECK(a.radius == kInf);
      CHECK(b.connected);
      CHECK(b.domination_number == 1);
    }
    CHECK(a.domination_number == s + t);
    CHECK(a.chromatic_number == (t == 0 ? 1u : 2u));
    if (t >= 1) CHECK(a.clique_number == 2);
    CHECK(b.chromatic_number == s + t);
    CHECK(b.clique_number == s + t);
    CHECK(a.radius <= a.diameter);
    if (b.diameter.is_finite() && b.n > 1) CHECK(b.diameter.value() <= 2 * b.radius.value());
  }
}
