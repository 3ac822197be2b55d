#include "upg/invariants.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <limits>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace upg {

std::uint64_t ExtendedNat::value() const {
  if (infinite_) throw std::logic_error("value() of infinite ExtendedNat");
  return value_;
}

std::string ExtendedNat::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

VertexBoundError::VertexBoundError(std::string invariant, std::size_t n, std::size_t bound)
    : std::runtime_error(invariant + ": graph has " + std::to_string(n) +
                         " vertices, search bound is " + std::to_string(bound)),
      invariant_(std::move(invariant)) {}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex root) {
  std::vector<std::size_t> dist(g.size(), kUnreached);
  std::queue<Vertex> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    const Bitset& nb = g.neighbors(v);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

// Runs `solve` on each component and combines the results.
template <typename Solve, typename Combine>
std::size_t per_component(const SimpleGraph& g, std::size_t init, Solve solve, Combine combine) {
  std::size_t acc = init;
  for (const auto& comp : components(g)) acc = combine(acc, solve(g.induced(comp)));
  return acc;
}

// ---------------------------------------------------------------- domination

class DominationSearch {
 public:
  explicit DominationSearch(const SimpleGraph& g) : n_(g.size()) {
    closed_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      Bitset c = g.neighbors(v);
      c.set(v);
      closed_.push_back(std::move(c));
    }
  }

  std::size_t solve() {
    Bitset all(n_);
    all.set();
    best_ = greedy(all);
    search(all, 0);
    return best_;
  }

 private:
  std::size_t greedy(Bitset undominated) const {
    std::size_t picks = 0;
    while (undominated.any()) {
      Vertex pick = 0;
      std::size_t cover = 0;
      for (Vertex v = 0; v < n_; ++v) {
        const auto c = (closed_[v] & undominated).count();
        if (c > cover) {
          cover = c;
          pick = v;
        }
      }
      undominated -= closed_[pick];
      ++picks;
    }
    return picks;
  }

  void search(const Bitset& undominated, std::size_t chosen) {
    const std::size_t left = undominated.count();
    if (left == 0) {
      best_ = std::min(best_, chosen);
      return;
    }
    std::size_t max_cover = 0;
    for (Vertex v = 0; v < n_; ++v) max_cover = std::max(max_cover, (closed_[v] & undominated).count());
    const std::size_t lower = (left + max_cover - 1) / max_cover;
    if (chosen + lower >= best_) return;

    // Branch on the undominated vertex with the fewest possible dominators.
    Vertex target = undominated.find_first();
    std::size_t fewest = closed_[target].count();
    for (auto v = undominated.find_next(target); v != Bitset::npos; v = undominated.find_next(v)) {
      if (closed_[v].count() < fewest) {
        fewest = closed_[v].count();
        target = v;
      }
    }
    std::vector<std::pair<std::size_t, Vertex>> options;
    const Bitset& cand = closed_[target];
    for (auto c = cand.find_first(); c != Bitset::npos; c = cand.find_next(c))
      options.emplace_back((closed_[c] & undominated).count(), c);
    std::sort(options.begin(), options.end(), std::greater<>());
    for (auto [_, c] : options) search(undominated - closed_[c], chosen + 1);
  }

  std::size_t n_;
  std::vector<Bitset> closed_;
  std::size_t best_ = 0;
};

// -------------------------------------------------------------------- clique

class CliqueSearch {
 public:
  explicit CliqueSearch(const SimpleGraph& g) : g_(g) {}

  std::vector<Vertex> solve() {
    Bitset p(g_.size());
    p.set();
    std::vector<Vertex> current;
    expand(current, p);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy colour classes give an upper bound on any clique inside P.
  void colour_sort(const Bitset& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
    Bitset q = p;
    std::size_t colour = 0;
    while (q.any()) {
      ++colour;
      Bitset r = q;
      while (r.any()) {
        const Vertex v = r.find_first();
        r.reset(v);
        r -= g_.neighbors(v);
        q.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(std::vector<Vertex>& current, Bitset p) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    colour_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      Bitset next = p & g_.neighbors(v);
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      p.reset(v);
    }
  }

  const SimpleGraph& g_;
  std::vector<Vertex> best_;
};

// ---------------------------------------------------------------- colouring

class ColouringSearch {
 public:
  ColouringSearch(const SimpleGraph& g, std::size_t upper, std::vector<Vertex> clique)
      : g_(g), n_(g.size()), best_(upper), colour_(n_, kNone),
        nb_count_(n_, std::vector<std::size_t>(n_ + 1, 0)), saturation_(n_, 0),
        clique_(std::move(clique)) {}

  std::size_t solve() {
    // A maximum clique needs distinct colours in every colouring; fixing them
    // first removes colour-permutation symmetry.
    for (std::size_t i = 0; i < clique_.size(); ++i) assign(clique_[i], i);
    search(clique_.size(), clique_.size());
    return best_;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  void assign(Vertex v, std::size_t c) {
    colour_[v] = c;
    const Bitset& nb = g_.neighbors(v);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w))
      if (nb_count_[w][c]++ == 0) ++saturation_[w];
  }
  void unassign(Vertex v) {
    const std::size_t c = colour_[v];
    colour_[v] = kNone;
    const Bitset& nb = g_.neighbors(v);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w))
      if (--nb_count_[w][c] == 0) --saturation_[w];
  }

  void search(std::size_t coloured, std::size_t used) {
    if (used >= best_) return;
    if (coloured == n_) {
      best_ = used;
      return;
    }
    Vertex pick = kNone;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour_[v] != kNone) continue;
      if (pick == kNone || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick)))
        pick = v;
    }
    for (std::size_t c = 0; c < used; ++c) {
      if (nb_count_[pick][c] != 0) continue;
      assign(pick, c);
      search(coloured + 1, used);
      unassign(pick);
    }
    if (used + 1 < best_) {
      assign(pick, used);
      search(coloured + 1, used + 1);
      unassign(pick);
    }
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::size_t best_;
  std::vector<std::size_t> colour_;
  std::vector<std::vector<std::size_t>> nb_count_;
  std::vector<std::size_t> saturation_;
  std::vector<Vertex> clique_;
};

// --------------------------------------------------------------- hamiltonian

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const SimpleGraph& g) : g_(g), n_(g.size()), visited_(n_) {}

  bool solve() {
    visited_.set(0);
    return extend(0, 1);
  }

 private:
  // Every unvisited vertex needs two usable neighbours, and the unvisited
  // vertices plus both path ends must stay connected.
  bool feasible(Vertex end) const {
    Bitset open = ~visited_;
    Bitset usable = open;
    usable.set(end);
    usable.set(0);
    for (auto v = open.find_first(); v != Bitset::npos; v = open.find_next(v))
      if ((g_.neighbors(v) & usable).count() < 2) return false;
    Bitset reached(n_), frontier(n_);
    frontier.set(end);
    reached.set(end);
    Bitset region = open;
    region.set(0);
    while (frontier.any()) {
      Bitset next(n_);
      for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
        next |= g_.neighbors(v);
      next &= region;
      next -= reached;
      reached |= next;
      frontier = std::move(next);
    }
    return region.is_subset_of(reached);
  }

  bool extend(Vertex end, std::size_t length) {
    if (length == n_) return g_.adjacent(end, 0);
    if (!feasible(end)) return false;
    Bitset cand = g_.neighbors(end) - visited_;
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (auto w = cand.find_first(); w != Bitset::npos; w = cand.find_next(w))
      order.emplace_back((g_.neighbors(w) - visited_).count(), w);
    std::sort(order.begin(), order.end());
    for (auto [_, w] : order) {
      visited_.set(w);
      if (extend(w, length + 1)) return true;
      visited_.reset(w);
    }
    return false;
  }

  const SimpleGraph& g_;
  std::size_t n_;
  Bitset visited_;
};

// ---------------------------------------------------------------- planarity

// Biconnected blocks as vertex lists (Hopcroft–Tarjan edge stack).
std::vector<std::vector<Vertex>> biconnected_blocks(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> disc(n, kUnreached), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Vertex>> blocks;
  std::size_t timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    const Bitset& nb = g.neighbors(v);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      if (w == parent) continue;
      if (disc[w] == kUnreached) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<Vertex> block;
          Edge e;
          do {
            e = stack.back();
            stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
          } while (e != Edge{v, w});
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] == kUnreached) dfs(v, kUnreached);
  return blocks;
}

// Demoucron–Malgrange–Pertuiset path addition on a 2-connected graph.
bool planar_biconnected(const SimpleGraph& b) {
  const std::size_t n = b.size();
  if (n < 5 || b.edge_count() <= n) return true;
  if (b.edge_count() > 3 * n - 6) return false;

  std::vector<bool> placed(n, false);
  std::vector<Bitset> placed_edges(n, Bitset(n));
  std::size_t remaining = b.edge_count();
  auto place_edge = [&](Vertex u, Vertex v) {
    placed_edges[u].set(v);
    placed_edges[v].set(u);
    --remaining;
  };

  // Initial cycle from a DFS back edge.
  std::vector<Vertex> cycle;
  {
    std::vector<Vertex> parent(n, kUnreached), depth(n, kUnreached);
    std::vector<Vertex> st{0};
    depth[0] = 0;
    std::function<bool(Vertex)> dfs = [&](Vertex v) {
      const Bitset& nb = b.neighbors(v);
      for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
        if (w == parent[v]) continue;
        if (depth[w] == kUnreached) {
          parent[w] = v;
          depth[w] = depth[v] + 1;
          if (dfs(w)) return true;
        } else if (depth[w] < depth[v]) {
          for (Vertex x = v; x != w; x = parent[x]) cycle.push_back(x);
          cycle.push_back(w);
          return true;
        }
      }
      return false;
    };
    dfs(0);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    placed[cycle[i]] = true;
    place_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  std::vector<std::vector<Vertex>> faces{cycle, cycle};

  struct Fragment {
    std::vector<Vertex> inner;   // unplaced vertices (empty for a chord)
    Bitset contacts;
  };

  while (remaining > 0) {
    std::vector<Fragment> frags;
    for (Vertex u = 0; u < n; ++u) {
      if (!placed[u]) continue;
      Bitset chords = b.neighbors(u) - placed_edges[u];
      for (auto v = chords.find_next(u); v != Bitset::npos; v = chords.find_next(v)) {
        if (!placed[v]) continue;
        Fragment f{{}, Bitset(n)};
        f.contacts.set(u);
        f.contacts.set(v);
        frags.push_back(std::move(f));
      }
    }
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
      if (placed[s] || seen[s]) continue;
      Fragment f{{}, Bitset(n)};
      std::queue<Vertex> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        f.inner.push_back(v);
        const Bitset& nb = b.neighbors(v);
        for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
          if (placed[w]) f.contacts.set(w);
          else if (!seen[w]) {
            seen[w] = true;
            q.push(w);
          }
        }
      }
      frags.push_back(std::move(f));
    }

    std::vector<Bitset> face_sets;
    for (const auto& face : faces) {
      Bitset fs(n);
      for (Vertex v : face) fs.set(v);
      face_sets.push_back(std::move(fs));
    }
    std::size_t chosen = frags.size(), chosen_face = 0;
    for (std::size_t i = 0; i < frags.size(); ++i) {
      std::size_t count = 0, first = 0;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        if (frags[i].contacts.is_subset_of(face_sets[f])) {
          if (count++ == 0) first = f;
        }
      }
      if (count == 0) return false;
      if (count == 1 || chosen == frags.size()) {
        chosen = i;
        chosen_face = first;
        if (count == 1) break;
      }
    }

    // Path through the chosen fragment between two distinct contacts.
    const Fragment& frag = frags[chosen];
    std::vector<Vertex> path;
    const Vertex a = frag.contacts.find_first();
    if (frag.inner.empty()) {
      path = {a, frag.contacts.find_next(a)};
    } else {
      Bitset inner(n);
      for (Vertex v : frag.inner) inner.set(v);
      std::vector<Vertex> parent(n, kUnreached);
      std::queue<Vertex> q;
      Bitset starts = b.neighbors(a) & inner;
      for (auto v = starts.find_first(); v != Bitset::npos; v = starts.find_next(v)) {
        parent[v] = a;
        q.push(v);
      }
      Vertex end = kUnreached, target = kUnreached;
      while (!q.empty() && end == kUnreached) {
        const Vertex v = q.front();
        q.pop();
        Bitset out = b.neighbors(v) & frag.contacts;
        out.reset(a);
        if (out.any()) {
          end = v;
          target = out.find_first();
          break;
        }
        Bitset nb = b.neighbors(v) & inner;
        for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
          if (parent[w] == kUnreached) {
            parent[w] = v;
            q.push(w);
          }
        }
      }
      if (end == kUnreached) throw std::logic_error("fragment with a single contact in a 2-connected block");
      path.push_back(target);
      for (Vertex v = end; v != a; v = parent[v]) path.push_back(v);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }

    const std::vector<Vertex> face = faces[chosen_face];
    const Vertex bv = path.back();
    const std::size_t i = static_cast<std::size_t>(std::find(face.begin(), face.end(), a) - face.begin());
    const std::size_t j = static_cast<std::size_t>(std::find(face.begin(), face.end(), bv) - face.begin());
    const std::size_t len = face.size();
    std::vector<Vertex> f1, f2;
    for (std::size_t k = i;; k = (k + 1) % len) {
      f1.push_back(face[k]);
      if (k == j) break;
    }
    for (std::size_t k = path.size() - 1; k-- > 1;) f1.push_back(path[k]);
    for (std::size_t k = j;; k = (k + 1) % len) {
      f2.push_back(face[k]);
      if (k == i) break;
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);

    for (std::size_t k = 0; k + 1 < path.size(); ++k) place_edge(path[k], path[k + 1]);
    for (Vertex v : path) placed[v] = true;
    faces[chosen_face] = std::move(f1);
    faces.push_back(std::move(f2));
  }
  return true;
}

bool is_forest(const SimpleGraph& g) {
  return g.edge_count() + components(g).size() == g.size();
}

}  // namespace

std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.size(), false);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Bitset& nb = g.neighbors(comp[i]);
      for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Vertex> isolated_vertices(const SimpleGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

ExtendedNat girth(const SimpleGraph& g) {
  std::size_t best = kUnreached;
  for (Vertex root = 0; root < g.size(); ++root) {
    std::vector<std::size_t> dist(g.size(), kUnreached);
    std::vector<Vertex> parent(g.size(), kUnreached);
    std::queue<Vertex> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) break;
      const Bitset& nb = g.neighbors(v);
      for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best == kUnreached ? ExtendedNat::infinity() : ExtendedNat(best);
}

EccentricityProfile eccentricity_profile(const SimpleGraph& g) {
  EccentricityProfile p;
  const std::size_t n = g.size();
  if (n == 0) return p;
  p.eccentricity.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    const auto far = *std::max_element(dist.begin(), dist.end());
    p.eccentricity.push_back(far == kUnreached ? ExtendedNat::infinity() : ExtendedNat(far));
  }
  p.diameter = *std::max_element(p.eccentricity.begin(), p.eccentricity.end());
  p.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  return p;
}

std::size_t domination_number(const SimpleGraph& g) {
  return per_component(
      g, 0, [](const SimpleGraph& c) { return DominationSearch(c).solve(); }, std::plus<>());
}

std::vector<Vertex> maximum_clique(const SimpleGraph& g) { return CliqueSearch(g).solve(); }

std::size_t clique_number(const SimpleGraph& g) { return maximum_clique(g).size(); }

std::size_t clique_number_isolated_convention(const SimpleGraph& g) {
  return g.edge_count() == 0 ? g.size() : clique_number(g);
}

std::vector<std::size_t> dsatur_colouring(const SimpleGraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> colour(n, kNone);
  std::vector<Bitset> seen_colours(n, Bitset(n + 1));
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = kNone;
    for (Vertex v = 0; v < n; ++v) {
      if (colour[v] != kNone) continue;
      if (pick == kNone) {
        pick = v;
        continue;
      }
      const auto sv = seen_colours[v].count(), sp = seen_colours[pick].count();
      if (sv > sp || (sv == sp && g.degree(v) > g.degree(pick))) pick = v;
    }
    std::size_t c = 0;
    while (seen_colours[pick].test(c)) ++c;
    colour[pick] = c;
    const Bitset& nb = g.neighbors(pick);
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) seen_colours[w].set(c);
  }
  return colour;
}

std::size_t chromatic_number(const SimpleGraph& g) {
  return per_component(
      g, 0,
      [](const SimpleGraph& c) -> std::size_t {
        auto clique = maximum_clique(c);
        const auto greedy = dsatur_colouring(c);
        const std::size_t upper = greedy.empty() ? 0 : *std::max_element(greedy.begin(), greedy.end()) + 1;
        if (upper == clique.size()) return upper;
        return ColouringSearch(c, upper, std::move(clique)).solve();
      },
      [](std::size_t a, std::size_t b) { return std::max(a, b); });
}

namespace detail {

bool planar_by_path_addition(const SimpleGraph& g) {
  for (const auto& block : biconnected_blocks(g))
    if (!planar_biconnected(g.induced(block))) return false;
  return true;
}

bool hamiltonian_by_search(const SimpleGraph& g) {
  if (g.size() < 3) return false;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) < 2) return false;
  if (components(g).size() != 1) return false;
  return HamiltonSearch(g).solve();
}

}  // namespace detail

namespace closed_form {

bool multipartite_planar(std::vector<std::size_t> parts) {
  std::sort(parts.begin(), parts.end());
  switch (parts.size()) {
    case 0:
    case 1: return true;
    case 2: return parts[0] <= 2;
    case 3: return parts[2] <= 2 || (parts[0] == 1 && parts[1] == 1);
    case 4: return parts[0] == 1 && parts[1] == 1 && parts[2] == 1 && parts[3] <= 2;
    default: return false;
  }
}

bool multipartite_hamiltonian(const std::vector<std::size_t>& parts) {
  std::size_t total = 0, largest = 0;
  for (auto p : parts) {
    total += p;
    largest = std::max(largest, p);
  }
  return total >= 3 && largest <= total - largest;
}

}  // namespace closed_form

bool is_planar(const SimpleGraph& g, const SolverLimits& limits) {
  const std::size_t n = g.size();
  if (n <= 4 || is_forest(g)) return true;
  if (g.edge_count() > 3 * n - 6) return false;
  if (auto prof = recognize_complete_multipartite(g); prof.valid)
    return closed_form::multipartite_planar(prof.part_sizes);
  if (n > limits.planarity_max_vertices)
    throw VertexBoundError("planar", n, limits.planarity_max_vertices);
  return detail::planar_by_path_addition(g);
}

bool is_hamiltonian(const SimpleGraph& g, const SolverLimits& limits) {
  const std::size_t n = g.size();
  if (n < 3) return false;
  std::size_t min_degree = n;
  for (Vertex v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));
  if (min_degree < 2 || components(g).size() != 1) return false;
  // Dirac: minimum degree at least n/2 forces a Hamiltonian cycle.
  if (2 * min_degree >= n) return true;
  if (n > limits.hamiltonian_max_vertices)
    throw VertexBoundError("hamiltonian", n, limits.hamiltonian_max_vertices);
  return HamiltonSearch(g).solve();
}

InvariantReport full_report(const SimpleGraph& g, const SolverLimits& limits) {
  InvariantReport r;
  r.n = g.size();
  r.edge_count = g.edge_count();
  r.component_count = components(g).size();
  r.isolated_count = isolated_vertices(g).size();
  r.connected = r.component_count <= 1;
  r.girth = girth(g);
  const auto ecc = eccentricity_profile(g);
  r.diameter = ecc.diameter;
  r.radius = ecc.radius;
  r.domination_number = domination_number(g);
  r.chromatic_number = chromatic_number(g);
  r.clique_number = clique_number(g);
  r.planar = is_planar(g, limits);
  r.hamiltonian = is_hamiltonian(g, limits);

  if (r.radius > r.diameter) throw std::logic_error("report: radius exceeds diameter");
  if (r.clique_number > r.chromatic_number) throw std::logic_error("report: clique exceeds chromatic number");
  if (r.hamiltonian && (!r.connected || r.n < 3)) throw std::logic_error("report: inconsistent Hamiltonicity");
  return r;
}

std::string report_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["edge_count"] = r.edge_count;
  j["component_count"] = r.component_count;
  j["isolated_count"] = r.isolated_count;
  j["connected"] = r.connected;
  auto ext = [](const ExtendedNat& x) -> nlohmann::ordered_json {
    if (x.is_infinite()) return "inf";
    return x.value();
  };
  j["girth"] = ext(r.girth);
  j["diameter"] = ext(r.diameter);
  j["radius"] = ext(r.radius);
  j["domination_number"] = r.domination_number;
  j["chromatic_number"] = r.chromatic_number;
  j["clique_number"] = r.clique_number;
  j["planar"] = r.planar;
  j["hamiltonian"] = r.hamiltonian;
  return j.dump(2) + "\n";
}

std::string report_text(const InvariantReport& r) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"vertices", std::to_string(r.n)},
      {"edges", std::to_string(r.edge_count)},
      {"components", std::to_string(r.component_count)},
      {"isolated", std::to_string(r.isolated_count)},
      {"connected", r.connected ? "yes" : "no"},
      {"girth", r.girth.to_string()},
      {"diameter", r.diameter.to_string()},
      {"radius", r.radius.to_string()},
      {"domination", std::to_string(r.domination_number)},
      {"chromatic", std::to_string(r.chromatic_number)},
      {"clique", std::to_string(r.clique_number)},
      {"planar", r.planar ? "yes" : "no"},
      {"hamiltonian", r.hamiltonian ? "yes" : "no"},
  };
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(12) << k << " " << v << "\n";
  return os.str();
}

}  // namespace upg
