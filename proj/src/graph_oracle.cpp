#include "mgeuler/graph_oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mgeuler {

namespace {

using Matrix = std::vector<std::vector<int>>;
using Perm = std::vector<int>;

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

const std::vector<Perm>& perms_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Perm>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all_perms(n)).first;
  return it->second;
}

// Multiplicity matrix: m[i][j] edges between i and j, m[i][i] loops at i.
Matrix multiplicities(const HalfEdgeGraph& g, const std::vector<bool>* only_forest, bool forest) {
  Matrix m(static_cast<std::size_t>(g.num_vertices), std::vector<int>(static_cast<std::size_t>(g.num_vertices), 0));
  for (int e = 0; e < g.num_edges; ++e) {
    if (only_forest && (*only_forest)[static_cast<std::size_t>(e)] != forest) continue;
    auto [x, y] = g.endpoints(e);
    ++m[x][y];
    if (x != y) ++m[y][x];
  }
  return m;
}

bool preserves(const Matrix& m, const Perm& s) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (m[s[i]][s[j]] != m[i][j]) return false;
    }
  }
  return true;
}

std::vector<int> upper_code(const Matrix& m, const Perm& s) {
  // Entry (s[i], s[j]) of the relabeled matrix equals m[i][j].
  const int n = static_cast<int>(m.size());
  Perm inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[s[i]] = i;
  std::vector<int> code;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) code.push_back(m[inv[i]][inv[j]]);
  }
  return code;
}

bool matrix_connected(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (w != v && m[v][w] > 0 && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

int matrix_degree(const Matrix& m, int v) {
  int d = 2 * m[v][v];
  for (int w = 0; w < static_cast<int>(m.size()); ++w) {
    if (w != v) d += m[v][w];
  }
  return d;
}

struct BaseGraph {
  Matrix m;
  std::vector<Perm> auts;  // vertex permutations preserving m
};

// Connected multigraphs of rank g (no legs yet), one per isomorphism class,
// whose degree deficit can be filled by n legs.
std::vector<BaseGraph> base_graphs(int g, int n) {
  std::vector<BaseGraph> out;
  const int max_v = 2 * g - 2 + n;
  for (int v = 1; v <= max_v; ++v) {
    const int edges = v + g - 1;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < v; ++i) {
      for (int j = i; j < v; ++j) slots.emplace_back(i, j);
    }
    const auto& perms = perms_cached(v);
    Matrix m(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v), 0));
    // Distribute `left` edges over slots[pos..].
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos + 1 == slots.size() || left == 0) {
        auto [i, j] = slots[pos];
        m[i][j] += left;
        if (i != j) m[j][i] += left;
        bool ok = matrix_connected(m);
        int deficit = 0;
        for (int x = 0; ok && x < v; ++x) deficit += std::max(0, 3 - matrix_degree(m, x));
        if (ok && deficit <= n) {
          std::vector<int> best = upper_code(m, perms.front());
          for (const auto& s : perms) best = std::min(best, upper_code(m, s));
          if (best == upper_code(m, perms.front())) {
            BaseGraph bg{m, {}};
            for (const auto& s : perms) {
              if (preserves(m, s)) bg.auts.push_back(s);
            }
            out.push_back(std::move(bg));
          }
        }
        m[i][j] -= left;
        if (i != j) m[j][i] -= left;
        return;
      }
      auto [i, j] = slots[pos];
      for (int c = 0; c <= left; ++c) {
        m[i][j] += c;
        if (i != j) m[j][i] += c;
        self(self, pos + 1, left - c);
        m[i][j] -= c;
        if (i != j) m[j][i] -= c;
      }
    };
    rec(rec, 0, edges);
  }
  return out;
}

struct LeggedGraph {
  Matrix m;
  std::vector<int> leg_vertices;
  std::vector<Perm> stabilizer;  // vertex perms preserving m and the legs
};

bool legs_admissible(const Matrix& m, const std::vector<int>& counts) {
  for (int v = 0; v < static_cast<int>(m.size()); ++v) {
    if (matrix_degree(m, v) + counts[v] < 3) return false;
  }
  return true;
}

// Labeled: leg maps {0..n-1} -> V up to Aut(m). Unlabeled: leg counts per vertex.
std::vector<LeggedGraph> legged_graphs(int g, int n, bool labeled) {
  std::vector<LeggedGraph> out;
  for (const auto& bg : base_graphs(g, n)) {
    const int v = static_cast<int>(bg.m.size());
    if (labeled) {
      std::vector<int> legs(static_cast<std::size_t>(n), 0);
      while (true) {
        std::vector<int> counts(static_cast<std::size_t>(v), 0);
        for (int x : legs) ++counts[x];
        if (legs_admissible(bg.m, counts)) {
          bool minimal = true;
          std::vector<int> image(legs.size());
          for (const auto& s : bg.auts) {
            for (std::size_t i = 0; i < legs.size(); ++i) image[i] = s[legs[i]];
            if (image < legs) {
              minimal = false;
              break;
            }
          }
          if (minimal) {
            LeggedGraph lg{bg.m, legs, {}};
            for (const auto& s : bg.auts) {
              bool fixes = true;
              for (int x : legs) fixes = fixes && s[x] == x;
              if (fixes) lg.stabilizer.push_back(s);
            }
            out.push_back(std::move(lg));
          }
        }
        int pos = 0;
        while (pos < n && ++legs[pos] == v) legs[pos++] = 0;
        if (pos == n) break;
      }
    } else {
      std::vector<int> counts(static_cast<std::size_t>(v), 0);
      auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == v - 1) {
          counts[pos] = left;
          if (legs_admissible(bg.m, counts)) {
            bool minimal = true;
            std::vector<int> image(counts.size());
            for (const auto& s : bg.auts) {
              for (int x = 0; x < v; ++x) image[s[x]] = counts[x];
              if (image < counts) {
                minimal = false;
                break;
              }
            }
            if (minimal) {
              LeggedGraph lg{bg.m, {}, {}};
              for (int x = 0; x < v; ++x) {
                for (int c = 0; c < counts[x]; ++c) lg.leg_vertices.push_back(x);
              }
              for (const auto& s : bg.auts) {
                bool keeps = true;
                for (int x = 0; x < v; ++x) keeps = keeps && counts[s[x]] == counts[x];
                if (keeps) lg.stabilizer.push_back(s);
              }
              out.push_back(std::move(lg));
            }
          }
          return;
        }
        for (int c = 0; c <= left; ++c) {
          counts[pos] = c;
          self(self, pos + 1, left - c);
        }
      };
      rec(rec, 0, n);
    }
  }
  return out;
}

const std::vector<LeggedGraph>& legged_cached(int g, int n, bool labeled) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, std::vector<LeggedGraph>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(g, n, labeled);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, legged_graphs(g, n, labeled)).first;
  return it->second;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::vector<ForestedGraph> forested_from(const std::vector<LeggedGraph>& graphs, int k) {
  std::vector<ForestedGraph> out;
  for (const auto& lg : graphs) {
    const int v = static_cast<int>(lg.m.size());
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> pair_index;
    for (int i = 0; i < v; ++i) {
      for (int j = i + 1; j < v; ++j) {
        if (lg.m[i][j] > 0) {
          pair_index[{i, j}] = static_cast<int>(pairs.size());
          pairs.emplace_back(i, j);
        }
      }
    }
    const int np = static_cast<int>(pairs.size());
    if (k > v - 1 || k > np) continue;
    // Edge list in slot order; the first edge of a bundle carries the forest.
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> first_edge;
    for (int i = 0; i < v; ++i) {
      for (int j = i; j < v; ++j) {
        for (int c = 0; c < lg.m[i][j]; ++c) {
          if (c == 0) first_edge[{i, j}] = static_cast<int>(edges.size());
          edges.emplace_back(i, j);
        }
      }
    }
    for (unsigned long mask = 0; mask < (1UL << np); ++mask) {
      if (__builtin_popcountl(mask) != k) continue;
      std::vector<int> parent(static_cast<std::size_t>(v));
      std::iota(parent.begin(), parent.end(), 0);
      bool acyclic = true;
      for (int p = 0; p < np && acyclic; ++p) {
        if (!(mask >> p & 1UL)) continue;
        int a = find_root(parent, pairs[p].first), b = find_root(parent, pairs[p].second);
        if (a == b) acyclic = false;
        parent[a] = b;
      }
      if (!acyclic) continue;
      bool minimal = true;
      for (const auto& s : lg.stabilizer) {
        unsigned long image = 0;
        for (int p = 0; p < np; ++p) {
          if (!(mask >> p & 1UL)) continue;
          int a = s[pairs[p].first], b = s[pairs[p].second];
          image |= 1UL << pair_index.at({std::min(a, b), std::max(a, b)});
        }
        if (image < mask) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      std::vector<int> forest;
      for (int p = 0; p < np; ++p) {
        if (mask >> p & 1UL) forest.push_back(first_edge.at(pairs[p]));
      }
      out.push_back(ForestedGraph::from_edges(v, edges, lg.leg_vertices, forest));
    }
  }
  return out;
}

void check_gn(int g, int n, const char* op) {
  if (g < 1 || n < 0 || 2 * g - 2 + n <= 0) {
    throw std::invalid_argument(std::string(op) + ": need g >= 1, n >= 0 and 2g-2+n > 0");
  }
}

using Assignment = std::vector<std::pair<int, int>>;  // half-edge -> half-edge

// All bijections src -> tgt (equal sizes) as index permutations.
std::vector<Perm> bijections(std::size_t size) { return perms_cached(static_cast<int>(size)); }

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace

HalfEdgeGraph HalfEdgeGraph::from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                                        const std::vector<int>& leg_vertices) {
  HalfEdgeGraph g;
  g.num_vertices = num_vertices;
  g.num_edges = static_cast<int>(edges.size());
  g.num_legs = static_cast<int>(leg_vertices.size());
  auto check = [&](int x) {
    if (x < 0 || x >= num_vertices) throw std::invalid_argument("HalfEdgeGraph: vertex out of range");
    return x;
  };
  for (auto [x, y] : edges) {
    g.vertex_of.push_back(check(x));
    g.vertex_of.push_back(check(y));
  }
  for (int x : leg_vertices) g.vertex_of.push_back(check(x));
  return g;
}

int HalfEdgeGraph::degree(int v) const {
  return static_cast<int>(std::count(vertex_of.begin(), vertex_of.end(), v));
}

bool HalfEdgeGraph::connected() const {
  if (num_vertices == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  int components = num_vertices;
  for (int e = 0; e < num_edges; ++e) {
    auto [x, y] = endpoints(e);
    int a = find_root(parent, x), b = find_root(parent, y);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool HalfEdgeGraph::admissible() const {
  if (!connected()) return false;
  for (int v = 0; v < num_vertices; ++v) {
    if (degree(v) < 3) return false;
  }
  return true;
}

ForestedGraph ForestedGraph::from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                                        const std::vector<int>& leg_vertices,
                                        const std::vector<int>& forest_edges) {
  ForestedGraph fg{HalfEdgeGraph::from_edges(num_vertices, edges, leg_vertices),
                   std::vector<bool>(edges.size(), false)};
  for (int e : forest_edges) {
    if (e < 0 || e >= fg.graph.num_edges) throw std::invalid_argument("ForestedGraph: bad forest edge");
    fg.forest[static_cast<std::size_t>(e)] = true;
  }
  return fg;
}

int ForestedGraph::forest_size() const {
  return static_cast<int>(std::count(forest.begin(), forest.end(), true));
}

bool ForestedGraph::forest_is_acyclic() const {
  std::vector<int> parent(static_cast<std::size_t>(graph.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; e < graph.num_edges; ++e) {
    if (!forest[static_cast<std::size_t>(e)]) continue;
    auto [x, y] = graph.endpoints(e);
    int a = find_root(parent, x), b = find_root(parent, y);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

GraphAutomorphism GraphAutomorphism::operator*(const GraphAutomorphism& b) const {
  GraphAutomorphism r;
  for (int x : b.vertex_perm) r.vertex_perm.push_back(vertex_perm[x]);
  for (int h : b.half_edge_perm) r.half_edge_perm.push_back(half_edge_perm[h]);
  return r;
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  GraphAutomorphism r{vertex_perm, half_edge_perm};
  for (std::size_t i = 0; i < vertex_perm.size(); ++i) r.vertex_perm[vertex_perm[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < half_edge_perm.size(); ++i) {
    r.half_edge_perm[half_edge_perm[i]] = static_cast<int>(i);
  }
  return r;
}

bool GraphAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < vertex_perm.size(); ++i) {
    if (vertex_perm[i] != static_cast<int>(i)) return false;
  }
  for (std::size_t i = 0; i < half_edge_perm.size(); ++i) {
    if (half_edge_perm[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> GraphAutomorphism::leg_perm(const HalfEdgeGraph& g) const {
  std::vector<int> p;
  for (int i = 0; i < g.num_legs; ++i) p.push_back(half_edge_perm[g.leg_half_edge(i)] - 2 * g.num_edges);
  return p;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> cycles;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  return Partition(cycles);
}

int permutation_sign(const std::vector<int>& perm) {
  const Partition type = cycle_type(perm);
  int s = 1;
  for (int c : type.parts()) {
    if (c % 2 == 0) s = -s;
  }
  return s;
}

std::vector<ForestedGraph> enumerate_forested(int g, int n, int k) {
  check_gn(g, n, "enumerate_forested");
  if (k < 0) return {};
  return forested_from(legged_cached(g, n, true), k);
}

std::vector<ForestedGraph> enumerate_forested_unlabeled(int g, int n, int k) {
  check_gn(g, n, "enumerate_forested_unlabeled");
  if (k < 0) return {};
  return forested_from(legged_cached(g, n, false), k);
}

std::vector<GraphAutomorphism> automorphisms(const ForestedGraph& fg, LegMode mode) {
  const HalfEdgeGraph& g = fg.graph;
  const int v = g.num_vertices;
  const Matrix forest_m = multiplicities(g, &fg.forest, true);
  const Matrix other_m = multiplicities(g, &fg.forest, false);
  std::vector<std::vector<int>> legs_at(static_cast<std::size_t>(v));
  for (int i = 0; i < g.num_legs; ++i) legs_at[g.vertex_of[g.leg_half_edge(i)]].push_back(i);

  // Edges of a bundle {x, y}, split by forest membership.
  std::map<std::tuple<int, int, bool>, std::vector<int>> bundles;
  for (int e = 0; e < g.num_edges; ++e) {
    auto [x, y] = g.endpoints(e);
    bundles[{std::min(x, y), std::max(x, y), fg.forest[static_cast<std::size_t>(e)]}].push_back(e);
  }

  std::vector<GraphAutomorphism> out;
  for (const auto& s : perms_cached(v)) {
    if (!preserves(forest_m, s) || !preserves(other_m, s)) continue;
    bool legs_ok = true;
    for (int x = 0; x < v && legs_ok; ++x) {
      if (mode == LegMode::fix_legs) {
        if (!legs_at[x].empty()) legs_ok = s[x] == x;
      } else {
        legs_ok = legs_at[s[x]].size() == legs_at[x].size();
      }
    }
    if (!legs_ok) continue;

    // Each slot lists alternative partial half-edge assignments.
    std::vector<std::vector<Assignment>> slots;
    for (const auto& [key, src] : bundles) {
      auto [x, y, in_forest] = key;
      const int tx = s[x], ty = s[y];
      const auto& tgt = bundles.at({std::min(tx, ty), std::max(tx, ty), in_forest});
      std::vector<Assignment> choices;
      const bool loop = x == y;
      for (const auto& b : bijections(src.size())) {
        const int flips = loop ? (1 << src.size()) : 1;
        for (int mask = 0; mask < flips; ++mask) {
          Assignment as;
          for (std::size_t i = 0; i < src.size(); ++i) {
            const int e = src[i], t = tgt[static_cast<std::size_t>(b[i])];
            bool straight;
            if (loop) {
              straight = !(mask >> i & 1);
            } else {
              straight = s[g.vertex_of[2 * e]] == g.vertex_of[2 * t];
            }
            as.emplace_back(2 * e, straight ? 2 * t : 2 * t + 1);
            as.emplace_back(2 * e + 1, straight ? 2 * t + 1 : 2 * t);
          }
          choices.push_back(std::move(as));
        }
      }
      slots.push_back(std::move(choices));
    }
    for (int x = 0; x < v; ++x) {
      const auto& src = legs_at[x];
      if (src.empty()) continue;
      std::vector<Assignment> choices;
      if (mode == LegMode::fix_legs) {
        Assignment as;
        for (int leg : src) as.emplace_back(g.leg_half_edge(leg), g.leg_half_edge(leg));
        choices.push_back(std::move(as));
      } else {
        const auto& tgt = legs_at[s[x]];
        for (const auto& b : bijections(src.size())) {
          Assignment as;
          for (std::size_t i = 0; i < src.size(); ++i) {
            as.emplace_back(g.leg_half_edge(src[i]), g.leg_half_edge(tgt[static_cast<std::size_t>(b[i])]));
          }
          choices.push_back(std::move(as));
        }
      }
      slots.push_back(std::move(choices));
    }

    GraphAutomorphism a{s, std::vector<int>(static_cast<std::size_t>(g.num_half_edges()), -1)};
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == slots.size()) {
        out.push_back(a);
        return;
      }
      for (const auto& as : slots[pos]) {
        for (auto [h, t] : as) a.half_edge_perm[h] = t;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

bool is_automorphism(const ForestedGraph& fg, const GraphAutomorphism& a, LegMode mode) {
  const HalfEdgeGraph& g = fg.graph;
  const auto nv = static_cast<std::size_t>(g.num_vertices);
  const auto nh = static_cast<std::size_t>(g.num_half_edges());
  if (a.vertex_perm.size() != nv || a.half_edge_perm.size() != nh) return false;
  std::vector<bool> hit_v(nv, false), hit_h(nh, false);
  for (int x : a.vertex_perm) {
    if (x < 0 || x >= g.num_vertices || hit_v[x]) return false;
    hit_v[x] = true;
  }
  for (int h : a.half_edge_perm) {
    if (h < 0 || h >= g.num_half_edges() || hit_h[h]) return false;
    hit_h[h] = true;
  }
  for (std::size_t h = 0; h < nh; ++h) {
    if (g.vertex_of[a.half_edge_perm[h]] != a.vertex_perm[g.vertex_of[h]]) return false;
  }
  for (int e = 0; e < g.num_edges; ++e) {
    const int h0 = a.half_edge_perm[2 * e], h1 = a.half_edge_perm[2 * e + 1];
    if (h0 >= 2 * g.num_edges || (h0 ^ 1) != h1) return false;
    if (fg.forest[static_cast<std::size_t>(h0 / 2)] != fg.forest[static_cast<std::size_t>(e)]) return false;
  }
  if (mode == LegMode::fix_legs) {
    for (int i = 0; i < g.num_legs; ++i) {
      if (a.half_edge_perm[g.leg_half_edge(i)] != g.leg_half_edge(i)) return false;
    }
  }
  return true;
}

std::vector<int> spanning_tree(const HalfEdgeGraph& g, const std::vector<int>& order) {
  std::vector<int> edges = order;
  if (edges.empty()) {
    edges.resize(static_cast<std::size_t>(g.num_edges));
    std::iota(edges.begin(), edges.end(), 0);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices), false);
  std::vector<int> tree;
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (int e : edges) {
      auto [a, b] = g.endpoints(e);
      if (a == b || (a != x && b != x)) continue;
      const int other = a == x ? b : a;
      if (seen[other]) continue;
      seen[other] = true;
      tree.push_back(e);
      queue.push_back(other);
    }
  }
  if (static_cast<int>(tree.size()) != g.num_vertices - 1) {
    throw std::invalid_argument("spanning_tree: graph is not connected");
  }
  return tree;
}

int h1_det(const ForestedGraph& fg, const GraphAutomorphism& a) {
  return h1_det(fg, a, spanning_tree(fg.graph));
}

int h1_det(const ForestedGraph& fg, const GraphAutomorphism& a, const std::vector<int>& tree) {
  const HalfEdgeGraph& g = fg.graph;
  const auto ne = static_cast<std::size_t>(g.num_edges);
  std::vector<bool> in_tree(ne, false);
  for (int e : tree) in_tree[static_cast<std::size_t>(e)] = true;
  std::vector<int> cotree;
  for (int e = 0; e < g.num_edges; ++e) {
    if (!in_tree[static_cast<std::size_t>(e)]) cotree.push_back(e);
  }
  if (cotree.empty()) return 1;

  // Oriented tree path from `from` to `to` as edge coefficients.
  auto tree_path = [&](int from, int to) {
    std::vector<int> parent_edge(static_cast<std::size_t>(g.num_vertices), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices), -1);
    std::vector<int> queue{from};
    parent[from] = from;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int x = queue[qi];
      for (int e : tree) {
        auto [p, q] = g.endpoints(e);
        if (p != x && q != x) continue;
        const int y = p == x ? q : p;
        if (parent[y] != -1) continue;
        parent[y] = x;
        parent_edge[y] = e;
        queue.push_back(y);
      }
    }
    std::vector<int> coef(ne, 0);
    for (int y = to; y != from; y = parent[y]) {
      const int e = parent_edge[y];
      // Traversed from parent[y] to y.
      coef[static_cast<std::size_t>(e)] += g.vertex_of[2 * e] == parent[y] ? 1 : -1;
    }
    return coef;
  };

  const std::size_t r = cotree.size();
  std::vector<std::vector<Rational>> mat(r, std::vector<Rational>(r, 0));
  std::vector<int> row_of(ne, -1);
  for (std::size_t i = 0; i < r; ++i) row_of[static_cast<std::size_t>(cotree[i])] = static_cast<int>(i);
  for (std::size_t c = 0; c < r; ++c) {
    const int e = cotree[c];
    auto [x, y] = g.endpoints(e);
    std::vector<int> z = tree_path(y, x);
    z[static_cast<std::size_t>(e)] += 1;
    for (int f = 0; f < g.num_edges; ++f) {
      if (z[static_cast<std::size_t>(f)] == 0) continue;
      const int h = a.half_edge_perm[2 * f];
      const int image = h / 2;
      const int sgn = h % 2 == 0 ? 1 : -1;
      if (row_of[static_cast<std::size_t>(image)] >= 0) {
        mat[static_cast<std::size_t>(row_of[static_cast<std::size_t>(image)])][c] += sgn * z[static_cast<std::size_t>(f)];
      }
    }
  }
  const Rational d = determinant(mat);
  if (d != 1 && d != -1) throw std::logic_error("h1_det: determinant is not a unit");
  return d == 1 ? 1 : -1;
}

int h1_det_chain(const ForestedGraph& fg, const GraphAutomorphism& a) {
  const HalfEdgeGraph& g = fg.graph;
  std::vector<int> edge_perm;
  int s = 1;
  for (int e = 0; e < g.num_edges; ++e) {
    const int h = a.half_edge_perm[2 * e];
    edge_perm.push_back(h / 2);
    if (h % 2 != 0) s = -s;
  }
  return s * permutation_sign(edge_perm) * permutation_sign(a.vertex_perm);
}

int xi(OrientationSign sign, const ForestedGraph& fg, const GraphAutomorphism& a) {
  std::vector<int> forest_edges;
  for (int e = 0; e < fg.graph.num_edges; ++e) {
    if (fg.forest[static_cast<std::size_t>(e)]) forest_edges.push_back(e);
  }
  std::vector<int> perm;
  for (int e : forest_edges) {
    const int image = a.half_edge_perm[2 * e] / 2;
    auto it = std::find(forest_edges.begin(), forest_edges.end(), image);
    if (it == forest_edges.end()) throw std::invalid_argument("xi: automorphism does not preserve the forest");
    perm.push_back(static_cast<int>(it - forest_edges.begin()));
  }
  int s = permutation_sign(perm);
  if (sign == OrientationSign::minus) s *= h1_det(fg, a);
  return s;
}

bool is_orientable(OrientationSign sign, const ForestedGraph& fg) {
  for (const auto& a : automorphisms(fg, LegMode::fix_legs)) {
    if (xi(sign, fg, a) != 1) return false;
  }
  return true;
}

Integer chain_char(OrientationSign sign, int g, int n, int k, const std::vector<int>& pi) {
  check_gn(g, n, "chain_char");
  if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("chain_char: pi must permute n legs");
  Rational total = 0;
  for (const auto& fg : enumerate_forested(g, n, k)) {
    long aut = 0;
    long sum = 0;
    for (const auto& a : automorphisms(fg, LegMode::permute_legs)) {
      const auto lp = a.leg_perm(fg.graph);
      bool fixes = true;
      for (int i = 0; i < n; ++i) fixes = fixes && lp[static_cast<std::size_t>(i)] == i;
      if (fixes) ++aut;
      if (lp == pi) sum += xi(sign, fg, a);
    }
    total += fraction(sum, aut);
  }
  return to_integer(total, "chain_char");
}

namespace {

SymPoly oracle_sum(OrientationSign sign, int g, int n, bool labeled) {
  SymPoly out;
  Integer n_fact;
  mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(n));
  for (int k = 0; k <= 2 * g - 3 + n; ++k) {
    const auto graphs = labeled ? enumerate_forested(g, n, k) : enumerate_forested_unlabeled(g, n, k);
    for (const auto& fg : graphs) {
      const auto uaut = automorphisms(fg, LegMode::permute_legs);
      long aut = 0;
      std::map<Partition, long> sums;
      for (const auto& a : uaut) {
        const auto lp = a.leg_perm(fg.graph);
        bool fixes = true;
        for (int i = 0; i < n; ++i) fixes = fixes && lp[static_cast<std::size_t>(i)] == i;
        if (fixes) ++aut;
        sums[cycle_type(lp)] += xi(sign, fg, a);
      }
      Rational weight = labeled ? Rational(1 / (Rational(n_fact) * aut))
                                : Rational(fraction(1, static_cast<long>(uaut.size())));
      if (k % 2 != 0) weight = -weight;
      for (const auto& [type, s] : sums) {
        if (s != 0) out.add_term(type, weight * s);
      }
    }
  }
  return out;
}

}  // namespace

SymPoly equiv_euler_oracle(OrientationSign sign, int g, int n) {
  check_gn(g, n, "equiv_euler_oracle");
  return oracle_sum(sign, g, n, true);
}

SymPoly equiv_euler_unlabeled(OrientationSign sign, int g, int n) {
  check_gn(g, n, "equiv_euler_unlabeled");
  return oracle_sum(sign, g, n, false);
}

}  // namespace mgeuler
