#pragma once

// Trees W1..W5, paths P_i(v), acyclicity certification, regions R_i(v) and
// their sizes via leaf-to-root / root-to-leaf sweeps, with a flood-fill
// oracle and the barycentric weight vectors.

#include <array>
#include <memory>

#include "fivec/structures.hpp"

namespace fivec {

struct WoodTrees {
  std::shared_ptr<const FiveTriangulation> base;
  // Per color: parent of each vertex in W_i (outer vertices and the root
  // v_i have kNoVertex) and the colored out-dart. Children are stored in
  // compressed form: those of v are child_list[c][child_start[c][v] ..
  // child_start[c][v+1]).
  std::array<std::vector<VertexId>, 5> parent;
  std::array<std::vector<Dart>, 5> parent_arc;
  std::array<std::vector<int>, 5> child_start;
  std::array<std::vector<VertexId>, 5> child_list;

  /// Vertices of W_c in root-to-leaf order (parents before children).
  std::vector<VertexId> top_down(int c) const;
};

/// Builds the five parent maps and certifies treeness by walking each
/// parent chain (throws CycleDetected on malformed input).
WoodTrees wood_trees(const WoodColoring& w);

/// Certifies that the five biorientations O_i = W_i u W_{i-1} u W_{i+1} u
/// W_{i-2}^- u W_{i+2}^- and all 25 pairs W_j u W_k^- are acyclic
/// (opposite arc pairs do not count as cycles).
Report check_acyclic_biorientations(const WoodColoring& w);

/// P_1(v)..P_5(v), each from v to the outer root inclusive.
std::array<std::vector<VertexId>, 5> paths(const WoodTrees& tr, VertexId v);

struct RegionTable {
  std::shared_ptr<const FiveTriangulation> base;
  std::shared_ptr<const WoodTrees> trees;
  // Indexed per vertex; outer rows follow the conventions |R_i(v_i)| = 2n-7,
  // |R_i(v_j)| = 0, and length -1 where a path is undefined.
  std::vector<std::array<long, 5>> faces;     // |R_i(v)|, face counting
  std::vector<std::array<long, 5>> vertices;  // |R_i(v) \ P_{i-2}(v)|, vertex counting
  std::vector<std::array<long, 5>> inside;    // n_i(v): vertices strictly inside
  std::vector<std::array<int, 5>> length;     // length(P_i(v))
  // Sweep tables (linear computation only; zero in the naive table).
  std::vector<std::array<long, 5>> N, Nlo, Nhi, Nleft, Nright;
};

RegionTable region_sizes_linear(std::shared_ptr<const WoodTrees> tr);
RegionTable region_sizes_naive(std::shared_ptr<const WoodTrees> tr);

/// Face membership of the five regions of one vertex: label[f] in 0..4 per
/// inner face of G, kNoFace for the outer face.
std::vector<int> region_face_labels(const WoodTrees& tr, VertexId v);

enum class WeightMode { faces, vertices, weighted };

struct WeightTable {
  WeightMode mode;
  std::vector<std::array<long long, 5>> num;  // per vertex, sums to den
  long long den;
};

/// Barycentric weights; Sum_i alpha_i(v) = 1 exactly, outer vertices get
/// unit vectors. Weighted mode takes one positive weight per G face id
/// (entries for inner faces only; throws NonPositiveWeight).
WeightTable weights(const RegionTable& rt, WeightMode mode,
                    const std::vector<long long>* face_weights = nullptr);

std::string region_table_to_json(const RegionTable& rt);

}  // namespace fivec
