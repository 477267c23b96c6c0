#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evoalg/graph.hpp"

namespace evoalg {

// Bipartition of a connected graph with constant degree per side.
// Convention: side 1 is the side containing vertex 1 (or the root);
// d1 is the degree on side 1.
struct BipartitionInfo {
  std::vector<int> side_of;  // 1-based by vertex id of the examined graph, values 1/2
  VertexId d1 = 0;
  VertexId d2 = 0;

  int side(VertexId i) const { return side_of[static_cast<size_t>(i)]; }
};

// Outcome of a whole-graph structural test. Exact is only possible for
// finite views; lazy graphs report what held inside the examined ball.
struct StructuralVerdict {
  enum class Status { Exact, ConsistentUpToRadius, Refuted };

  Status status = Status::Refuted;
  VertexId radius = -1;                          // for ConsistentUpToRadius
  std::optional<VertexId> regular_degree;        // check_regular payload
  std::optional<BipartitionInfo> bipartition;    // check_biregular payload
  std::string refutation;                        // human-readable reason
  std::optional<std::pair<VertexId, VertexId>> witness_pair;  // offending vertices/edge

  bool holds() const { return status != Status::Refuted; }
};

// All degrees equal. Lazy graphs require a radius; degrees are the true
// oracle degrees of every vertex in B(root, radius).
StructuralVerdict check_regular(const Graph& g, std::optional<VertexId> radius = std::nullopt);

// Two-colors by BFS parity, refutes on an odd cycle or differing
// within-side degrees. Finite inputs must be connected.
StructuralVerdict check_biregular(const Graph& g, std::optional<VertexId> radius = std::nullopt);

// Partition of V by the relation N(i) = N(j).
struct TwinPartition {
  std::vector<std::vector<VertexId>> classes;  // each sorted; ordered by smallest member
  std::vector<VertexId> class_of;              // 1-based vertex -> class index (1-based)

  VertexId class_count() const { return static_cast<VertexId>(classes.size()); }
  VertexId representative(VertexId class_index) const {
    return classes[static_cast<size_t>(class_index - 1)].front();
  }
  bool twin_free() const;
};

TwinPartition twin_partition(const FiniteGraph& g);

// One vertex per twin class, classes adjacent iff their members are.
// Class k of the partition becomes vertex k of the quotient.
FiniteGraph quotient_graph(const FiniteGraph& g, const TwinPartition& p);

}  // namespace evoalg
