#pragma once

#include <map>

#include "evoalg/graph.hpp"

namespace evoalg {

/*
 * Exact rank of the 0/1 adjacency matrix over the rationals.
 *
 * Uses fraction-free (Bareiss) elimination on arbitrary-precision
 * integers: every intermediate entry is a minor of the original matrix,
 * divisions are exact, and singularity detection cannot be fooled by
 * rounding. Kernel vectors come from a separate exact rational
 * elimination and are returned as primitive integer vectors.
 */

struct RankOptions {
  VertexId cap = 2000;  // refuse larger inputs
};

std::int64_t adjacency_rank(const FiniteGraph& g, const RankOptions& opt = {});

// rank == n
bool non_singular(const FiniteGraph& g, const RankOptions& opt = {});

// A nonzero integer vector in ker A when the graph is singular, empty map
// otherwise. Entries are coprime and the first nonzero entry is positive.
std::map<VertexId, std::int64_t> adjacency_kernel_vector(const FiniteGraph& g,
                                                         const RankOptions& opt = {});

}  // namespace evoalg
