#pragma once

#include <string>
#include <vector>

#include "evoalg/graph.hpp"

namespace evoalg {

FiniteGraph make_cycle(VertexId n);                          // n >= 3
FiniteGraph make_path(VertexId n);                           // n >= 2
FiniteGraph make_star(VertexId leaves);                      // K_{1,leaves}, center = 1
FiniteGraph make_complete_bipartite(VertexId m, VertexId n); // side 1 = ids 1..m
FiniteGraph make_spider(const std::vector<VertexId>& leg_lengths);

// Rooted tree whose degree depends only on the distance from the root,
// with the degree sequence repeating periodically by level. Lazy, BFS-order
// vertex ids, declared degree bound = max of the sequence.
LazyGraph make_spherically_symmetric_tree(const std::vector<VertexId>& degrees_by_level);

// Tree with degree n+2 at distance n from the root (root included: the root
// has two children). Locally finite, no uniform degree bound, so the handle
// declares none.
LazyGraph make_factorial_tree();

// Generator DSL:
//   cycle:5  path:4  star:3  kbipartite:2,3  spider:1,1,2
//   sstree:2,3        -> lazy handle
//   sstree:2,3@r=4    -> finite window of radius 4
//   factorial         -> lazy handle
//   factorial@r=3     -> finite window of radius 3
// Throws std::invalid_argument on malformed specs.
Graph generate(const std::string& spec);

// True when the string looks like a generator spec rather than a file path.
bool looks_like_generator_spec(const std::string& s);

}  // namespace evoalg
