#include "rank74/graph.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace rank74 {

Graph::Graph(std::size_t num_nodes) : adjacency_(num_nodes) {}

EdgeId Graph::add_edge(Node u, Node v) {
  if (u >= num_nodes() || v >= num_nodes()) {
    throw std::out_of_range("edge endpoint is not a node of the graph");
  }
  EdgeId id = edges_.size();
  edges_.emplace_back(u, v);
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  return id;
}

std::size_t Graph::multiplicity(Node u, Node v) const {
  std::size_t count = 0;
  for (const auto& inc : adjacency_.at(u)) {
    if (inc.neighbor == v) ++count;
  }
  // a loop appears twice in its node's adjacency
  return u == v ? count / 2 : count;
}

std::optional<EdgeId> Graph::edge_between(Node u, Node v) const {
  for (const auto& inc : adjacency_.at(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

bool Graph::is_simple() const {
  for (Node u = 0; u < num_nodes(); ++u) {
    std::vector<Node> seen;
    for (const auto& inc : adjacency_[u]) {
      if (inc.neighbor == u) return false;
      if (std::find(seen.begin(), seen.end(), inc.neighbor) != seen.end()) return false;
      seen.push_back(inc.neighbor);
    }
  }
  return true;
}

bool Graph::is_regular(std::size_t d) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(), [d](const auto& a) { return a.size() == d; });
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Node i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph mk_reference() {
  Graph g = cycle_graph(16);
  for (Node j = 0; j < 8; ++j) g.add_edge(2 * j, (2 * j + 5) % 16);
  return g;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (Node s = 0; s < n; ++s) {
    std::queue<Node> frontier;
    dist[s][s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      Node u = frontier.front();
      frontier.pop();
      for (const auto& inc : g.incident(u)) {
        if (dist[s][inc.neighbor] < 0) {
          dist[s][inc.neighbor] = dist[s][u] + 1;
          frontier.push(inc.neighbor);
        }
      }
    }
  }
  return dist;
}

std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  auto improve = [&best](std::size_t len) {
    if (!best || len < *best) best = len;
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (u == v) {
      improve(1);
      continue;
    }
    // shortest u-v path avoiding edge e, plus e itself
    std::vector<int> dist(g.num_nodes(), -1);
    std::queue<Node> frontier;
    dist[u] = 0;
    frontier.push(u);
    while (!frontier.empty()) {
      Node w = frontier.front();
      frontier.pop();
      for (const auto& inc : g.incident(w)) {
        if (inc.edge == e || dist[inc.neighbor] >= 0) continue;
        dist[inc.neighbor] = dist[w] + 1;
        frontier.push(inc.neighbor);
      }
    }
    if (dist[v] >= 0) improve(static_cast<std::size_t>(dist[v]) + 1);
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.num_nodes(), -1);
  for (Node s = 0; s < g.num_nodes(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Node> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      Node u = frontier.front();
      frontier.pop();
      for (const auto& inc : g.incident(u)) {
        if (color[inc.neighbor] < 0) {
          color[inc.neighbor] = 1 - color[u];
          frontier.push(inc.neighbor);
        } else if (color[inc.neighbor] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Backtracking matcher pruned by degree, sorted distance profile, and
// multiplicity/distance agreement with every node already mapped.
class Matcher {
public:
  Matcher(const Graph& g, const Graph& h)
      : g_(g), h_(h), dist_g_(distance_matrix(g)), dist_h_(distance_matrix(h)) {
    mult_g_ = multiplicities(g);
    mult_h_ = multiplicities(h);
    profile_g_ = profiles(g, dist_g_, mult_g_);
    profile_h_ = profiles(h, dist_h_, mult_h_);
    order_ = search_order(g);
  }

  // Calls visit(mapping) for each isomorphism until visit returns false.
  void run(const std::function<bool(const Permutation&)>& visit) {
    const std::size_t n = g_.num_nodes();
    if (n != h_.num_nodes() || g_.num_edges() != h_.num_edges()) return;
    auto pg = profile_g_;
    auto ph = profile_h_;
    std::sort(pg.begin(), pg.end());
    std::sort(ph.begin(), ph.end());
    if (pg != ph) return;

    map_.assign(n, kUnmapped);
    used_.assign(n, false);
    visit_ = &visit;
    stop_ = false;
    extend(0);
  }

private:
  static constexpr Node kUnmapped = static_cast<Node>(-1);

  static std::vector<std::vector<std::size_t>> multiplicities(const Graph& g) {
    std::vector<std::vector<std::size_t>> m(g.num_nodes(), std::vector<std::size_t>(g.num_nodes(), 0));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.endpoints(e);
      ++m[u][v];
      if (u != v) ++m[v][u];
    }
    return m;
  }

  static std::vector<std::vector<long>> profiles(const Graph& g, const std::vector<std::vector<int>>& dist,
                                                 const std::vector<std::vector<std::size_t>>& mult) {
    std::vector<std::vector<long>> out(g.num_nodes());
    for (Node u = 0; u < g.num_nodes(); ++u) {
      std::vector<long> p(dist[u].begin(), dist[u].end());
      std::sort(p.begin(), p.end());
      p.insert(p.begin(), static_cast<long>(mult[u][u]));
      p.insert(p.begin(), static_cast<long>(g.degree(u)));
      out[u] = std::move(p);
    }
    return out;
  }

  // BFS order so that each node after the first of its component touches a mapped node.
  static std::vector<Node> search_order(const Graph& g) {
    std::vector<Node> order;
    std::vector<bool> seen(g.num_nodes(), false);
    for (Node s = 0; s < g.num_nodes(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::queue<Node> frontier;
      frontier.push(s);
      while (!frontier.empty()) {
        Node u = frontier.front();
        frontier.pop();
        order.push_back(u);
        for (const auto& inc : g.incident(u)) {
          if (!seen[inc.neighbor]) {
            seen[inc.neighbor] = true;
            frontier.push(inc.neighbor);
          }
        }
      }
    }
    return order;
  }

  bool compatible(Node u, Node x, std::size_t depth) const {
    if (profile_g_[u] != profile_h_[x]) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      Node w = order_[k];
      Node y = map_[w];
      if (mult_g_[u][w] != mult_h_[x][y]) return false;
      if (dist_g_[u][w] != dist_h_[x][y]) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (stop_) return;
    if (depth == order_.size()) {
      if (!(*visit_)(map_)) stop_ = true;
      return;
    }
    Node u = order_[depth];
    for (Node x = 0; x < h_.num_nodes() && !stop_; ++x) {
      if (used_[x] || !compatible(u, x, depth)) continue;
      map_[u] = x;
      used_[x] = true;
      extend(depth + 1);
      used_[x] = false;
      map_[u] = kUnmapped;
    }
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::vector<int>> dist_g_, dist_h_;
  std::vector<std::vector<std::size_t>> mult_g_, mult_h_;
  std::vector<std::vector<long>> profile_g_, profile_h_;
  std::vector<Node> order_;
  Permutation map_;
  std::vector<bool> used_;
  const std::function<bool(const Permutation&)>* visit_ = nullptr;
  bool stop_ = false;
};

} // namespace

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
  std::optional<Permutation> found;
  Matcher(g, h).run([&found](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

std::vector<Permutation> automorphism_group(const Graph& g) {
  std::vector<Permutation> group;
  Matcher(g, g).run([&group](const Permutation& p) {
    group.push_back(p);
    return true;
  });
  Permutation identity(g.num_nodes());
  for (Node i = 0; i < identity.size(); ++i) identity[i] = i;
  auto it = std::find(group.begin(), group.end(), identity);
  if (it != group.end()) std::iter_swap(group.begin(), it);
  return group;
}

} // namespace rank74
