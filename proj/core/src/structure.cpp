#include "evoalg/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace evoalg {

namespace {

// Common body: the examined vertex set is 1..n of the given view; degrees
// come from the handle (true degrees for windows).
StructuralVerdict regular_on_view(const Graph& g, VertexId n, bool exact, VertexId radius) {
  StructuralVerdict v;
  VertexId d = g.degree(1);
  for (VertexId i = 2; i <= n; ++i) {
    if (g.degree(i) != d) {
      v.status = StructuralVerdict::Status::Refuted;
      std::ostringstream os;
      os << "deg(" << 1 << ")=" << d << " differs from deg(" << i << ")=" << g.degree(i);
      v.refutation = os.str();
      v.witness_pair = {1, i};
      return v;
    }
  }
  v.status = exact ? StructuralVerdict::Status::Exact
                   : StructuralVerdict::Status::ConsistentUpToRadius;
  v.radius = exact ? -1 : radius;
  v.regular_degree = d;
  return v;
}

StructuralVerdict biregular_on_view(const Graph& g, VertexId n, bool exact, VertexId radius) {
  StructuralVerdict v;
  BipartitionInfo info;
  info.side_of.assign(static_cast<size_t>(n + 1), 0);

  // 2-color by BFS parity from vertex 1 (the root slot of windows)
  std::deque<VertexId> queue{1};
  info.side_of[1] = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (info.side_of[static_cast<size_t>(y)] == 0) {
        info.side_of[static_cast<size_t>(y)] = 3 - info.side_of[static_cast<size_t>(x)];
        queue.push_back(y);
      } else if (info.side_of[static_cast<size_t>(y)] == info.side_of[static_cast<size_t>(x)]) {
        v.status = StructuralVerdict::Status::Refuted;
        std::ostringstream os;
        os << "edge (" << x << "," << y << ") joins two vertices of the same side (odd cycle)";
        v.refutation = os.str();
        v.witness_pair = {x, y};
        return v;
      }
    }
  }
  for (VertexId i = 1; i <= n; ++i) {
    if (info.side_of[static_cast<size_t>(i)] == 0) {
      throw std::invalid_argument("biregularity check requires a connected graph");
    }
  }

  VertexId first_of_side[3] = {0, 0, 0};
  VertexId side_degree[3] = {0, 0, 0};
  for (VertexId i = 1; i <= n; ++i) {
    const int s = info.side_of[static_cast<size_t>(i)];
    if (first_of_side[s] == 0) {
      first_of_side[s] = i;
      side_degree[s] = g.degree(i);
    } else if (g.degree(i) != side_degree[s]) {
      v.status = StructuralVerdict::Status::Refuted;
      std::ostringstream os;
      os << "side " << s << " has deg(" << first_of_side[s] << ")=" << side_degree[s]
         << " but deg(" << i << ")=" << g.degree(i);
      v.refutation = os.str();
      v.witness_pair = {first_of_side[s], i};
      return v;
    }
  }
  info.d1 = side_degree[1];
  // single-vertex window: no side 2 seen yet, report d2 = d1
  info.d2 = first_of_side[2] == 0 ? side_degree[1] : side_degree[2];

  v.status = exact ? StructuralVerdict::Status::Exact
                   : StructuralVerdict::Status::ConsistentUpToRadius;
  v.radius = exact ? -1 : radius;
  v.bipartition = std::move(info);
  return v;
}

}  // namespace

StructuralVerdict check_regular(const Graph& g, std::optional<VertexId> radius) {
  if (const FiniteGraph* f = g.as_finite()) {
    if (f->vertex_count() == 0) throw std::invalid_argument("empty graph");
    return regular_on_view(g, f->vertex_count(), /*exact=*/true, -1);
  }
  if (const Window* w = g.as_window()) {
    return regular_on_view(g, w->vertex_count(), /*exact=*/false, w->radius);
  }
  if (!radius) throw std::invalid_argument("lazy graph: a radius is required");
  Window w = truncate(*g.as_lazy(), *radius);
  Graph view(std::move(w));
  return regular_on_view(view, view.as_window()->vertex_count(), /*exact=*/false, *radius);
}

StructuralVerdict check_biregular(const Graph& g, std::optional<VertexId> radius) {
  if (const FiniteGraph* f = g.as_finite()) {
    if (f->vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (!is_connected(*f)) {
      throw std::invalid_argument("biregularity check requires a connected graph");
    }
    return biregular_on_view(g, f->vertex_count(), /*exact=*/true, -1);
  }
  if (const Window* w = g.as_window()) {
    return biregular_on_view(g, w->vertex_count(), /*exact=*/false, w->radius);
  }
  if (!radius) throw std::invalid_argument("lazy graph: a radius is required");
  Window w = truncate(*g.as_lazy(), *radius);
  Graph view(std::move(w));
  return biregular_on_view(view, view.as_window()->vertex_count(), /*exact=*/false, *radius);
}

bool TwinPartition::twin_free() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const std::vector<VertexId>& c) { return c.size() == 1; });
}

TwinPartition twin_partition(const FiniteGraph& g) {
  std::map<std::vector<VertexId>, std::vector<VertexId>> groups;
  for (VertexId i = 1; i <= g.vertex_count(); ++i) {
    groups[g.neighbors(i)].push_back(i);
  }
  TwinPartition p;
  p.classes.reserve(groups.size());
  for (auto& [nbrs, members] : groups) p.classes.push_back(members);
  std::sort(p.classes.begin(), p.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  p.class_of.assign(static_cast<size_t>(g.vertex_count() + 1), 0);
  for (size_t c = 0; c < p.classes.size(); ++c) {
    for (VertexId v : p.classes[c]) p.class_of[static_cast<size_t>(v)] = static_cast<VertexId>(c + 1);
  }
  return p;
}

FiniteGraph quotient_graph(const FiniteGraph& g, const TwinPartition& p) {
  const VertexId n = g.vertex_count();
  if (static_cast<VertexId>(p.class_of.size()) != n + 1) {
    throw std::invalid_argument("partition inconsistent with the graph (vertex count)");
  }
  if (p.classes != twin_partition(g).classes) {
    throw std::invalid_argument("partition inconsistent with the graph (not its twin partition)");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [a, b] : g.edges()) {
    const VertexId ca = p.class_of[static_cast<size_t>(a)];
    const VertexId cb = p.class_of[static_cast<size_t>(b)];
    if (ca == cb) throw std::invalid_argument("partition inconsistent: adjacent twins");
    edges.emplace_back(ca, cb);
  }
  return FiniteGraph::from_edges(p.class_count(), edges);
}

}  // namespace evoalg
