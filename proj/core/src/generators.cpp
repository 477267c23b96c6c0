#include "evoalg/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace evoalg {

namespace {

[[noreturn]] void bad_spec(const std::string& spec, const std::string& why) {
  throw std::invalid_argument("malformed generator spec '" + spec + "': " + why);
}

// Rooted tree enumerated in BFS order: root = 1, children of each vertex get
// consecutive ids. children_at_level decides the branching; the enumeration
// extends lazily and is safe under concurrent queries.
class BfsTreeOracle : public NeighborOracle {
 public:
  BfsTreeOracle(std::function<VertexId(VertexId)> children_at_level,
                std::optional<VertexId> degree_bound, std::string name)
      : children_at_level_(std::move(children_at_level)),
        degree_bound_(degree_bound),
        name_(std::move(name)) {
    level_ = {0, 0};        // slot 0 unused; vertex 1 at level 0
    parent_ = {0, 0};       // root has no parent
    first_child_ = {0, 0};  // filled when a vertex is expanded
    child_count_ = {0, 0};
  }

  std::vector<VertexId> raw_neighbors(VertexId i) const override {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_expanded(i);
    std::vector<VertexId> out;
    if (i != 1) out.push_back(parent_[static_cast<size_t>(i)]);
    const VertexId first = first_child_[static_cast<size_t>(i)];
    const VertexId count = child_count_[static_cast<size_t>(i)];
    for (VertexId c = 0; c < count; ++c) out.push_back(first + c);
    return out;  // parent < i < children: already sorted
  }

  std::optional<VertexId> declared_degree_bound() const override { return degree_bound_; }
  std::string name() const override { return name_; }

 private:
  void ensure_expanded(VertexId i) const {
    if (i < 1) throw std::invalid_argument("invalid vertex id");
    while (expanded_ < i) {
      if (expanded_ + 1 >= static_cast<VertexId>(level_.size())) {
        // enumeration exhausted: the tree is finite and i does not exist
        std::ostringstream os;
        os << "vertex " << i << " has not been produced by the enumeration (tree has "
           << level_.size() - 1 << " vertices)";
        throw std::invalid_argument(os.str());
      }
      const VertexId v = ++expanded_;
      const VertexId count = children_at_level_(level_[static_cast<size_t>(v)]);
      first_child_[static_cast<size_t>(v)] = static_cast<VertexId>(level_.size());
      child_count_[static_cast<size_t>(v)] = count;
      for (VertexId c = 0; c < count; ++c) {
        level_.push_back(level_[static_cast<size_t>(v)] + 1);
        parent_.push_back(v);
        first_child_.push_back(0);
        child_count_.push_back(0);
      }
    }
  }

  std::function<VertexId(VertexId)> children_at_level_;
  std::optional<VertexId> degree_bound_;
  std::string name_;

  mutable std::mutex mu_;
  mutable std::vector<VertexId> level_, parent_, first_child_, child_count_;
  mutable VertexId expanded_ = 0;  // ids 1..expanded_ have children assigned
};

VertexId parse_int(const std::string& spec, std::string_view tok) {
  VertexId value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    bad_spec(spec, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<VertexId> parse_int_list(const std::string& spec, std::string_view args) {
  std::vector<VertexId> out;
  size_t pos = 0;
  while (pos <= args.size()) {
    size_t comma = args.find(',', pos);
    if (comma == std::string_view::npos) comma = args.size();
    out.push_back(parse_int(spec, args.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == args.size()) break;
  }
  return out;
}

}  // namespace

FiniteGraph make_cycle(VertexId n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return FiniteGraph::from_edges(n, edges);
}

FiniteGraph make_path(VertexId n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return FiniteGraph::from_edges(n, edges);
}

FiniteGraph make_star(VertexId leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs >= 1 leaf");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
  return FiniteGraph::from_edges(leaves + 1, edges);
}

FiniteGraph make_complete_bipartite(VertexId m, VertexId n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite needs m, n >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i <= m; ++i) {
    for (VertexId j = m + 1; j <= m + n; ++j) edges.emplace_back(i, j);
  }
  return FiniteGraph::from_edges(m + n, edges);
}

FiniteGraph make_spider(const std::vector<VertexId>& leg_lengths) {
  if (leg_lengths.empty()) throw std::invalid_argument("spider needs at least one leg");
  std::vector<std::pair<VertexId, VertexId>> edges;
  VertexId next = 2;
  for (VertexId len : leg_lengths) {
    if (len < 1) throw std::invalid_argument("spider leg lengths must be >= 1");
    VertexId prev = 1;
    for (VertexId k = 0; k < len; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return FiniteGraph::from_edges(next - 1, edges);
}

LazyGraph make_spherically_symmetric_tree(const std::vector<VertexId>& degrees_by_level) {
  if (degrees_by_level.empty()) {
    throw std::invalid_argument("spherically symmetric tree needs a degree sequence");
  }
  for (VertexId d : degrees_by_level) {
    if (d < 1) throw std::invalid_argument("tree degrees must be >= 1");
  }
  const auto seq = degrees_by_level;
  auto children = [seq](VertexId level) -> VertexId {
    const VertexId d = seq[static_cast<size_t>(level % static_cast<VertexId>(seq.size()))];
    return level == 0 ? d : d - 1;
  };
  const VertexId bound = *std::max_element(seq.begin(), seq.end());
  std::ostringstream name;
  name << "sstree:";
  for (size_t k = 0; k < seq.size(); ++k) name << (k ? "," : "") << seq[k];
  return LazyGraph(std::make_shared<BfsTreeOracle>(children, bound, name.str()));
}

LazyGraph make_factorial_tree() {
  // degree n+2 at distance n: the root has 2 children, a vertex at distance
  // n >= 1 has n+1 children next to its parent edge
  auto children = [](VertexId level) -> VertexId { return level == 0 ? 2 : level + 1; };
  return LazyGraph(std::make_shared<BfsTreeOracle>(children, std::nullopt, "factorial"));
}

bool looks_like_generator_spec(const std::string& s) {
  static const char* names[] = {"cycle", "path", "star", "kbipartite", "sstree",
                                "factorial", "spider"};
  for (const char* n : names) {
    const size_t len = std::string(n).size();
    if (s.rfind(n, 0) == 0 && (s.size() == len || s[len] == ':' || s[len] == '@')) {
      return true;
    }
  }
  return false;
}

Graph generate(const std::string& spec) {
  std::string head = spec;
  std::optional<VertexId> radius;
  if (auto at = spec.find('@'); at != std::string::npos) {
    head = spec.substr(0, at);
    const std::string tail = spec.substr(at + 1);
    if (tail.rfind("r=", 0) != 0) bad_spec(spec, "expected '@r=<radius>'");
    radius = parse_int(spec, std::string_view(tail).substr(2));
    if (*radius < 0) bad_spec(spec, "radius must be >= 0");
  }

  std::string name = head;
  std::string args;
  if (auto colon = head.find(':'); colon != std::string::npos) {
    name = head.substr(0, colon);
    args = head.substr(colon + 1);
  }

  auto want_args = [&](bool want) {
    if (want && args.empty()) bad_spec(spec, "missing arguments");
    if (!want && !args.empty()) bad_spec(spec, "unexpected arguments");
  };
  auto finite_only = [&]() {
    if (radius) bad_spec(spec, "'@r=' only applies to the tree families");
  };

  if (name == "cycle") {
    finite_only();
    want_args(true);
    return Graph(make_cycle(parse_int(spec, args)));
  }
  if (name == "path") {
    finite_only();
    want_args(true);
    return Graph(make_path(parse_int(spec, args)));
  }
  if (name == "star") {
    finite_only();
    want_args(true);
    return Graph(make_star(parse_int(spec, args)));
  }
  if (name == "kbipartite") {
    finite_only();
    want_args(true);
    auto mn = parse_int_list(spec, args);
    if (mn.size() != 2) bad_spec(spec, "expected 'kbipartite:m,n'");
    return Graph(make_complete_bipartite(mn[0], mn[1]));
  }
  if (name == "spider") {
    finite_only();
    want_args(true);
    return Graph(make_spider(parse_int_list(spec, args)));
  }
  if (name == "sstree") {
    want_args(true);
    LazyGraph t = make_spherically_symmetric_tree(parse_int_list(spec, args));
    if (radius) return Graph(truncate(t, *radius));
    return Graph(std::move(t));
  }
  if (name == "factorial") {
    want_args(false);
    LazyGraph t = make_factorial_tree();
    if (radius) return Graph(truncate(t, *radius));
    return Graph(std::move(t));
  }
  bad_spec(spec, "unknown family '" + name + "'");
}

}  // namespace evoalg
