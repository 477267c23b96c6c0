#include "evoalg/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace evoalg {

namespace {

[[noreturn]] void bad_vertex(VertexId i) {
  std::ostringstream os;
  os << "invalid vertex id " << i;
  throw std::invalid_argument(os.str());
}

}  // namespace

FiniteGraph FiniteGraph::from_edges(VertexId n,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  VertexId max_id = n;
  for (const auto& [a, b] : edges) {
    if (a < 1 || b < 1) throw std::invalid_argument("vertex ids must be >= 1");
    if (a == b) {
      std::ostringstream os;
      os << "loop detected at vertex " << a;
      throw std::invalid_argument(os.str());
    }
    max_id = std::max({max_id, a, b});
  }
  if (n > 0 && max_id > n) {
    std::ostringstream os;
    os << "vertex index " << max_id << " exceeds declared count " << n;
    throw std::invalid_argument(os.str());
  }
  FiniteGraph g;
  g.adj_.assign(static_cast<size_t>(max_id), {});
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [a, b] : edges) {
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) continue;  // collapse duplicates
    g.adj_[static_cast<size_t>(a - 1)].push_back(b);
    g.adj_[static_cast<size_t>(b - 1)].push_back(a);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

const std::vector<VertexId>& FiniteGraph::neighbors(VertexId i) const {
  if (!valid_vertex(i)) bad_vertex(i);
  return adj_[static_cast<size_t>(i - 1)];
}

std::int64_t FiniteGraph::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& list : adj_) twice += static_cast<std::int64_t>(list.size());
  return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> FiniteGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId i = 1; i <= vertex_count(); ++i) {
    for (VertexId j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

bool is_connected(const FiniteGraph& g) {
  const VertexId n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(n + 1), 0);
  std::deque<VertexId> queue{1};
  seen[1] = 1;
  VertexId reached = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n;
}

LazyGraph::LazyGraph(std::shared_ptr<const NeighborOracle> oracle, VertexId root)
    : oracle_(std::move(oracle)), root_(root), memo_(std::make_shared<Memo>()) {
  if (root_ < 1) bad_vertex(root_);
}

const std::vector<VertexId>& LazyGraph::fetch(VertexId i) const {
  std::lock_guard<std::mutex> lock(memo_->mu);
  auto it = memo_->lists.find(i);
  if (it != memo_->lists.end()) return it->second;

  std::vector<VertexId> list = oracle_->raw_neighbors(i);
  for (size_t k = 0; k < list.size(); ++k) {
    if (list[k] < 1) bad_vertex(list[k]);
    if (list[k] == i) {
      std::ostringstream os;
      os << "oracle returned a loop at vertex " << i;
      throw std::runtime_error(os.str());
    }
    if (k > 0 && list[k] <= list[k - 1]) {
      std::ostringstream os;
      os << "oracle list for vertex " << i << " is not sorted/duplicate-free";
      throw std::runtime_error(os.str());
    }
  }
  if (auto bound = oracle_->declared_degree_bound();
      bound && static_cast<VertexId>(list.size()) > *bound) {
    std::ostringstream os;
    os << "vertex " << i << " has degree " << list.size() << " above the declared bound "
       << *bound;
    throw std::runtime_error(os.str());
  }
  return memo_->lists.emplace(i, std::move(list)).first->second;
}

std::vector<VertexId> LazyGraph::neighbors(VertexId i) const {
  if (i < 1) bad_vertex(i);
  std::vector<VertexId> list = fetch(i);
  // symmetry check against each returned neighbor
  for (VertexId j : list) {
    const std::vector<VertexId>& back = fetch(j);
    if (!std::binary_search(back.begin(), back.end(), i)) {
      std::ostringstream os;
      os << "oracle symmetry violation: " << j << " in N(" << i << ") but " << i
         << " not in N(" << j << ")";
      throw std::runtime_error(os.str());
    }
  }
  return list;
}

std::vector<VertexId> LazyGraph::ball(VertexId radius) const {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  std::vector<VertexId> order{root_};
  std::set<VertexId> seen{root_};
  std::deque<std::pair<VertexId, VertexId>> queue{{root_, 0}};
  while (!queue.empty()) {
    auto [v, dist] = queue.front();
    queue.pop_front();
    if (dist == radius) continue;
    for (VertexId w : neighbors(v)) {
      if (seen.insert(w).second) {
        order.push_back(w);
        queue.emplace_back(w, dist + 1);
      }
    }
  }
  return order;
}

std::vector<VertexId> Window::interior_vertices() const {
  std::vector<VertexId> out;
  for (VertexId w = 1; w <= vertex_count(); ++w) {
    if (interior(w)) out.push_back(w);
  }
  return out;
}

Window truncate(const LazyGraph& g, VertexId radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  Window win;
  win.radius = radius;
  win.original.push_back(0);  // slot 0 unused
  win.true_degree.push_back(0);
  win.level.push_back(0);

  std::deque<std::pair<VertexId, VertexId>> queue{{g.root(), 0}};
  win.to_window[g.root()] = 1;
  win.original.push_back(g.root());
  win.level.push_back(0);
  win.true_degree.push_back(g.degree(g.root()));

  // Every window vertex is expanded so that edges between two vertices at
  // distance exactly `radius` are still captured; discovery stops at the
  // radius.
  std::vector<std::pair<VertexId, VertexId>> window_edges;
  while (!queue.empty()) {
    auto [v, dist] = queue.front();
    queue.pop_front();
    const VertexId vw = win.to_window.at(v);
    for (VertexId u : g.neighbors(v)) {
      auto it = win.to_window.find(u);
      if (it != win.to_window.end()) {
        if (vw < it->second) window_edges.emplace_back(vw, it->second);
      } else if (dist < radius) {
        const VertexId uw = static_cast<VertexId>(win.original.size());
        win.to_window[u] = uw;
        win.original.push_back(u);
        win.level.push_back(dist + 1);
        win.true_degree.push_back(g.degree(u));
        queue.emplace_back(u, dist + 1);
        window_edges.emplace_back(vw, uw);
      }
    }
  }
  win.graph = FiniteGraph::from_edges(static_cast<VertexId>(win.original.size() - 1),
                                      window_edges);
  return win;
}

Graph::Graph(FiniteGraph g) : fin_(std::make_shared<FiniteGraph>(std::move(g))) {}
Graph::Graph(LazyGraph g) : lazy_(std::make_shared<LazyGraph>(std::move(g))) {}
Graph::Graph(Window w) : win_(std::make_shared<Window>(std::move(w))) {}

std::optional<VertexId> Graph::vertex_count() const {
  if (fin_) return fin_->vertex_count();
  if (win_) return win_->vertex_count();
  return std::nullopt;
}

std::vector<VertexId> Graph::neighbors(VertexId i) const {
  if (fin_) return fin_->neighbors(i);
  if (win_) return win_->graph.neighbors(i);
  return lazy_->neighbors(i);
}

VertexId Graph::degree(VertexId i) const {
  if (fin_) return fin_->degree(i);
  if (win_) {
    if (i < 1 || i > win_->vertex_count()) bad_vertex(i);
    return win_->true_degree[static_cast<size_t>(i)];
  }
  return lazy_->degree(i);
}

VertexId Graph::root() const { return lazy_ ? lazy_->root() : 1; }

std::string Graph::describe() const {
  std::ostringstream os;
  if (fin_) {
    os << "finite graph, n=" << fin_->vertex_count() << ", m=" << fin_->edge_count();
  } else if (win_) {
    os << "window of radius " << win_->radius << " onto an infinite graph, |B|="
       << win_->vertex_count();
  } else {
    os << "lazy graph (" << lazy_->name() << ")";
    if (auto b = lazy_->declared_degree_bound()) os << ", degree bound " << *b;
  }
  return os.str();
}

}  // namespace evoalg
