#include "evoalg/algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace evoalg {

std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Adjacency: return "adjacency";
    case AlgebraKind::RandomWalk: return "random_walk";
    case AlgebraKind::DegreeWeighted: return "degree_weighted";
  }
  return "?";
}

AlgebraKind algebra_kind_from_string(const std::string& s) {
  if (s == "adjacency" || s == "adj") return AlgebraKind::Adjacency;
  if (s == "random_walk" || s == "rw") return AlgebraKind::RandomWalk;
  if (s == "degree_weighted" || s == "dw") return AlgebraKind::DegreeWeighted;
  throw std::invalid_argument("unknown algebra kind '" + s + "'");
}

namespace {

VertexId positive_degree(const Graph& g, VertexId i, const char* what) {
  const VertexId d = g.degree(i);
  if (d < 1) {
    std::ostringstream os;
    os << what << " undefined at isolated vertex " << i;
    throw std::invalid_argument(os.str());
  }
  return d;
}

}  // namespace

SparseVector square_basis(const EvolutionAlgebra& alg, VertexId i) {
  SparseVector out;
  switch (alg.kind) {
    case AlgebraKind::Adjacency:
      for (VertexId k : alg.graph.neighbors(i)) out.set(k, 1.0);
      break;
    case AlgebraKind::RandomWalk: {
      const double inv = 1.0 / static_cast<double>(positive_degree(alg.graph, i, "random-walk square"));
      for (VertexId k : alg.graph.neighbors(i)) out.set(k, inv);
      break;
    }
    case AlgebraKind::DegreeWeighted:
      for (VertexId k : alg.graph.neighbors(i)) {
        out.set(k, 1.0 / std::sqrt(static_cast<double>(
                          positive_degree(alg.graph, k, "degree-weighted square"))));
      }
      break;
  }
  return out;
}

SparseVector product(const EvolutionAlgebra& alg, const SparseVector& v, const SparseVector& w) {
  SparseVector out;
  for (const auto& [i, vi] : v.entries()) {
    const double wi = w.coeff(i);
    if (wi == 0.0) continue;
    const double c = vi * wi;
    const SparseVector sq = square_basis(alg, i);
    for (const auto& [k, cki] : sq.entries()) {
      out.accumulate(k, c * cki);
    }
  }
  return out;
}

SparseVector apply_adjacency(const Graph& g, const SparseVector& v) {
  SparseVector out;
  for (const auto& [i, vi] : v.entries()) {
    for (VertexId k : g.neighbors(i)) out.accumulate(k, vi);
  }
  return out;
}

SparseVector apply_evolution(const EvolutionAlgebra& alg, const SparseVector& v) {
  SparseVector out;
  for (const auto& [i, vi] : v.entries()) {
    const SparseVector sq = square_basis(alg, i);
    for (const auto& [k, cki] : sq.entries()) {
      out.accumulate(k, vi * cki);
    }
  }
  return out;
}

SparseVector apply_transition(const Graph& g, const SparseVector& v) {
  SparseVector out;
  for (const auto& [i, vi] : v.entries()) {
    const double inv = 1.0 / static_cast<double>(positive_degree(g, i, "transition step"));
    for (VertexId k : g.neighbors(i)) out.accumulate(k, vi * inv);
  }
  return out;
}

}  // namespace evoalg
