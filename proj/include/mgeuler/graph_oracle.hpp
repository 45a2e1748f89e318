#pragma once

#include <utility>
#include <vector>

#include "mgeuler/partition.hpp"
#include "mgeuler/pipeline.hpp"
#include "mgeuler/rational.hpp"

namespace mgeuler {

// Half-edge model. Edge e owns half-edges 2e and 2e+1 (paired with each
// other); leg i (label i+1) is half-edge 2*num_edges + i and is unpaired.
// A loop has both half-edges at the same vertex.
struct HalfEdgeGraph {
  int num_vertices = 0;
  int num_edges = 0;
  int num_legs = 0;
  std::vector<int> vertex_of;  // half-edge -> vertex

  static HalfEdgeGraph from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& leg_vertices);

  int num_half_edges() const { return 2 * num_edges + num_legs; }
  int leg_half_edge(int leg) const { return 2 * num_edges + leg; }
  std::pair<int, int> endpoints(int edge) const {
    return {vertex_of[2 * edge], vertex_of[2 * edge + 1]};
  }
  bool is_loop(int edge) const { return vertex_of[2 * edge] == vertex_of[2 * edge + 1]; }
  int degree(int v) const;
  int rank() const { return num_edges - num_vertices + 1; }
  bool connected() const;
  // Connected, every vertex of degree >= 3.
  bool admissible() const;
};

struct ForestedGraph {
  HalfEdgeGraph graph;
  std::vector<bool> forest;  // per edge

  static ForestedGraph from_edges(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& leg_vertices,
                                  const std::vector<int>& forest_edges);
  int forest_size() const;
  bool forest_is_acyclic() const;
};

struct GraphAutomorphism {
  std::vector<int> vertex_perm;
  std::vector<int> half_edge_perm;

  // (a * b)(h) = a(b(h)).
  GraphAutomorphism operator*(const GraphAutomorphism& b) const;
  GraphAutomorphism inverse() const;
  bool is_identity() const;
  // Leg label permutation, 0-based.
  std::vector<int> leg_perm(const HalfEdgeGraph& g) const;
  friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
  friend auto operator<=>(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};

enum class LegMode { fix_legs, permute_legs };

// One representative per isomorphism class of connected admissible rank-g
// graphs with n labeled legs and a k-edge forest. Requires g >= 1 and
// 2g-2+n > 0.
std::vector<ForestedGraph> enumerate_forested(int g, int n, int k);

// Same with unlabeled legs (classes under relabeling the legs).
std::vector<ForestedGraph> enumerate_forested_unlabeled(int g, int n, int k);

// Aut(G, Phi) or UAut(G, Phi), listed explicitly.
std::vector<GraphAutomorphism> automorphisms(const ForestedGraph& fg, LegMode mode);

// True when a respects attachment, pairing, the forest and the leg mode.
bool is_automorphism(const ForestedGraph& fg, const GraphAutomorphism& a, LegMode mode);

// Edges of a spanning tree (breadth first from vertex 0, edges tried in the
// given order; ascending when order is empty).
std::vector<int> spanning_tree(const HalfEdgeGraph& g, const std::vector<int>& order = {});

// Determinant of the action on H_1 in the fundamental-cycle basis of a tree.
int h1_det(const ForestedGraph& fg, const GraphAutomorphism& a);
int h1_det(const ForestedGraph& fg, const GraphAutomorphism& a, const std::vector<int>& tree);
// Same value from the chain level: det on C_1 times the vertex permutation sign.
int h1_det_chain(const ForestedGraph& fg, const GraphAutomorphism& a);

int xi(OrientationSign sign, const ForestedGraph& fg, const GraphAutomorphism& a);
bool is_orientable(OrientationSign sign, const ForestedGraph& fg);

// Character of the k-th chain group at the leg permutation pi (0-based).
Integer chain_char(OrientationSign sign, int g, int n, int k, const std::vector<int>& pi);

// Equivariant Euler characteristic summed over leg-labeled classes.
SymPoly equiv_euler_oracle(OrientationSign sign, int g, int n);
// Same quantity summed over classes with unlabeled legs.
SymPoly equiv_euler_unlabeled(OrientationSign sign, int g, int n);

// Cycle type of a permutation of {0..n-1}.
Partition cycle_type(const std::vector<int>& perm);
int permutation_sign(const std::vector<int>& perm);

}  // namespace mgeuler
