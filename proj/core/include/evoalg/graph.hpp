#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace evoalg {

// Vertices are 1-based positive naturals throughout.
using VertexId = std::int64_t;

// Finite simple graph stored as sorted, duplicate-free neighbor lists.
// Invariants enforced at construction: symmetry, no loops, ids in [1, n].
class FiniteGraph {
 public:
  FiniteGraph() = default;

  // Builds from an undirected edge list. n = 0 infers the count from the
  // largest index. Duplicate edges collapse; loops are rejected.
  static FiniteGraph from_edges(VertexId n,
                                const std::vector<std::pair<VertexId, VertexId>>& edges);

  VertexId vertex_count() const { return static_cast<VertexId>(adj_.size()); }
  const std::vector<VertexId>& neighbors(VertexId i) const;
  VertexId degree(VertexId i) const { return static_cast<VertexId>(neighbors(i).size()); }
  std::int64_t edge_count() const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;  // i < j, sorted

  bool valid_vertex(VertexId i) const { return i >= 1 && i <= vertex_count(); }

 private:
  std::vector<std::vector<VertexId>> adj_;  // adj_[i-1] = sorted neighbors of i
};

bool is_connected(const FiniteGraph& g);

// Pure neighbor function of a locally finite graph on 1-based ids.
// Implementations must be deterministic and safe to query concurrently.
class NeighborOracle {
 public:
  virtual ~NeighborOracle() = default;
  virtual std::vector<VertexId> raw_neighbors(VertexId i) const = 0;
  virtual std::optional<VertexId> declared_degree_bound() const { return std::nullopt; }
  virtual std::string name() const = 0;
};

// Lazy view of a locally finite (possibly infinite) graph behind an oracle.
// Oracle answers are memoized; every query validates the list (sorted,
// duplicate-free, no loop, within the declared degree bound) and checks
// symmetry against each returned neighbor. Violations throw with the
// offending pair.
class LazyGraph {
 public:
  LazyGraph(std::shared_ptr<const NeighborOracle> oracle, VertexId root = 1);

  std::vector<VertexId> neighbors(VertexId i) const;
  VertexId degree(VertexId i) const { return static_cast<VertexId>(neighbors(i).size()); }
  VertexId root() const { return root_; }
  std::optional<VertexId> declared_degree_bound() const { return oracle_->declared_degree_bound(); }
  std::string name() const { return oracle_->name(); }

  // Vertices of the ball B(root, radius) in BFS discovery order.
  std::vector<VertexId> ball(VertexId radius) const;

 private:
  const std::vector<VertexId>& fetch(VertexId i) const;  // memoized, validated

  std::shared_ptr<const NeighborOracle> oracle_;
  VertexId root_;
  struct Memo {
    mutable std::mutex mu;
    mutable std::unordered_map<VertexId, std::vector<VertexId>> lists;
  };
  std::shared_ptr<Memo> memo_;
};

// Finite window onto a lazy graph: the induced subgraph on B(root, radius),
// re-indexed 1..|B| in BFS order, plus per-vertex true degrees and levels
// taken from the oracle. Structure constants computed through a window use
// the true degrees, so they agree with the infinite graph on any vertex
// whose neighborhood lies inside the window.
struct Window {
  FiniteGraph graph;                     // induced edges, window ids
  std::vector<VertexId> original;        // window id (1-based) -> original id
  std::unordered_map<VertexId, VertexId> to_window;  // original -> window id
  std::vector<VertexId> true_degree;     // by window id (1-based slot 0 unused)
  std::vector<VertexId> level;           // distance from root, by window id
  VertexId radius = 0;

  VertexId vertex_count() const { return graph.vertex_count(); }
  // all neighbors present in the window
  bool interior(VertexId w) const { return true_degree[w] == graph.degree(w); }
  std::vector<VertexId> interior_vertices() const;
};

Window truncate(const LazyGraph& g, VertexId radius);

// Immutable handle over the three graph representations. Algebra and
// structure operations take this; degree() always reports the true degree
// (side table for windows, oracle for lazy graphs).
class Graph {
 public:
  Graph(FiniteGraph g);
  Graph(LazyGraph g);
  Graph(Window w);

  bool is_lazy() const { return lazy_ != nullptr; }
  bool is_window() const { return win_ != nullptr; }
  // true when the handle has finitely many vertices (finite graph or window)
  bool finite_view() const { return !is_lazy(); }

  std::optional<VertexId> vertex_count() const;
  std::vector<VertexId> neighbors(VertexId i) const;
  VertexId degree(VertexId i) const;
  VertexId root() const;  // 1 for finite graphs

  const FiniteGraph* as_finite() const { return fin_.get(); }
  const Window* as_window() const { return win_.get(); }
  const LazyGraph* as_lazy() const { return lazy_.get(); }

  std::string describe() const;

 private:
  std::shared_ptr<const FiniteGraph> fin_;
  std::shared_ptr<const Window> win_;
  std::shared_ptr<const LazyGraph> lazy_;
};

}  // namespace evoalg
