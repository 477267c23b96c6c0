#pragma once

#include <string>

#include "evoalg/graph.hpp"
#include "evoalg/sparse_vector.hpp"

namespace evoalg {

// Structure constants c_{ki} (coefficient of e_k in e_i^2), derived from the
// graph on demand, never materialized:
//   Adjacency       c_{ki} = a_{ki}
//   RandomWalk      c_{ki} = a_{ki} / deg(i)
//   DegreeWeighted  c_{ki} = a_{ki} / deg(k)^{1/2}
enum class AlgebraKind { Adjacency, RandomWalk, DegreeWeighted };

std::string to_string(AlgebraKind k);
AlgebraKind algebra_kind_from_string(const std::string& s);

struct EvolutionAlgebra {
  Graph graph;
  AlgebraKind kind;
};

// e_i^2, exact through the oracle for lazy graphs (no truncation error).
SparseVector square_basis(const EvolutionAlgebra& alg, VertexId i);

// v . w = sum_i v_i w_i e_i^2 over the intersection of supports.
SparseVector product(const EvolutionAlgebra& alg, const SparseVector& v, const SparseVector& w);

// A(v), direct accumulation over neighbor lists.
SparseVector apply_adjacency(const Graph& g, const SparseVector& v);

// C(v) = sum_i v_i e_i^2. For the Adjacency kind this is an independent
// route to the same values as apply_adjacency.
SparseVector apply_evolution(const EvolutionAlgebra& alg, const SparseVector& v);

// P(v), row-stochastic random-walk step: P(delta_i) = sum_k a_{ki}/deg(i) delta_k.
SparseVector apply_transition(const Graph& g, const SparseVector& v);

}  // namespace evoalg
