#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "evoalg/bounds.hpp"
#include "evoalg/morphisms.hpp"

namespace evoalg {

// Edge-list text format: one "i j" edge per line, 1-based; blank lines and
// '#' comments ignored; optional "n=<count>" header before the edges.
FiniteGraph parse_edge_list(std::istream& in);
FiniteGraph parse_edge_list_file(const std::string& path);
std::string write_edge_list(const FiniteGraph& g);

// Generator DSL string or path to an edge-list file.
Graph parse_graph(const std::string& path_or_spec);

// Vector files: JSON object {"1": 0.5, "4": -1.0}.
SparseVector parse_vector_json(const std::string& text);
SparseVector parse_vector_file(const std::string& path);
std::string vector_to_json(const SparseVector& v);

// Morphism files:
//   {"kind":"monomial","direction":"adj_to_rw",
//    "entries":[{"i":1,"alpha":2.0,"pi":1}, ...]}
//   {"kind":"sparse","columns":{"1":{"2":3.0}, ...}}
using Morphism = std::variant<MonomialMap, SparseLinearMap>;
Morphism parse_morphism_json(const std::string& text);
Morphism parse_morphism_file(const std::string& path);
std::string morphism_to_json(const MonomialMap& m);
std::string morphism_to_json(const SparseLinearMap& m);

// Schur weights file: JSON map vertex index -> positive number.
std::function<double(VertexId)> parse_weights_file(const std::string& path);

std::string verdict_to_json(const Verdict& v);
std::string bounds_report_to_json(const BoundednessReport& r);
std::string hom_report_to_json(const HomReport& r);
std::string twin_partition_to_json(const TwinPartition& p);

// FNV-1a digest of input material; used for report reproducibility.
std::uint64_t fnv1a64(const std::string& data);
std::string digest_hex(const std::string& data);

}  // namespace evoalg
