#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/bounds.hpp"
#include "evoalg/rank.hpp"
#include "evoalg/sparse_vector.hpp"
#include "evoalg/structure.hpp"

namespace evoalg {

enum class MapDirection { AdjToRw, RwToAdj };

std::string to_string(MapDirection d);
MapDirection map_direction_from_string(const std::string& s);
MapDirection reverse(MapDirection d);

// f(e_i) = alpha_i e_{image(i)} with alpha_i != 0.
struct MonomialEntry {
  double alpha = 0.0;
  VertexId image = 0;
};

struct MonomialMap {
  std::map<VertexId, MonomialEntry> entries;
  MapDirection direction = MapDirection::AdjToRw;

  SparseVector column(VertexId i) const;
  bool image_bijective() const;
  // (1/alpha_i, image^{-1}) with the direction flipped; requires bijectivity
  MonomialMap inverse() const;
};

// General finitely supported linear map given by its columns f(e_i).
struct SparseLinearMap {
  std::map<VertexId, SparseVector> columns;
  std::optional<MapDirection> direction;
};

SparseLinearMap to_sparse(const MonomialMap& m);

SparseVector apply_map(const MonomialMap& m, const SparseVector& v);
SparseVector apply_map(const SparseLinearMap& m, const SparseVector& v);

// Witness constructions of Thm-3.3 type, direction adjacency -> random walk.
// build_regular_iso: alpha = d everywhere, identity images.
// build_biregular_iso: alpha = (d1^2 d2)^{1/3} on side 1, (d1 d2^2)^{1/3} on
// side 2, identity images. Entries cover every vertex of the examined view.
MonomialMap build_regular_iso(const Graph& g, std::optional<VertexId> radius = std::nullopt);
MonomialMap build_biregular_iso(const Graph& g, std::optional<VertexId> radius = std::nullopt);

struct HomReport {
  double max_residual = 0.0;         // max over both condition families
  double max_square_residual = 0.0;  // ||m(e_i^2) - m(e_i).m(e_i)||
  double max_pair_residual = 0.0;    // ||m(e_i).m(e_j)||, i != j
  VertexId worst_vertex = 0;
  std::pair<VertexId, VertexId> worst_pair{0, 0};
  std::int64_t vertices_checked = 0;
  std::int64_t pairs_checked = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool passed = false;
};

// Verifies the two homomorphism laws on the given vertex set:
// squares on every vertex, zero products on all pairs when |vertices| <= 64,
// otherwise on a seeded sample of 4|vertices| pairs.
HomReport check_homomorphism(const SparseLinearMap& m, const EvolutionAlgebra& src,
                             const EvolutionAlgebra& dst, const std::vector<VertexId>& vertices,
                             double tol = 1e-9, std::uint64_t seed = 0);
HomReport check_homomorphism(const MonomialMap& m, const EvolutionAlgebra& src,
                             const EvolutionAlgebra& dst, const std::vector<VertexId>& vertices,
                             double tol = 1e-9, std::uint64_t seed = 0);

// Support analysis of a column map: pairwise disjointness of the supports,
// coverage of the seen index set, and monomial form (every support a
// singleton).
struct MonomialClassification {
  bool is_monomial = false;
  bool disjoint = false;
  bool covering = false;
  std::optional<MonomialMap> monomial;
  std::vector<VertexId> null_columns;
  // (i, j, k): columns i and j both hit row k
  std::optional<std::array<VertexId, 3>> overlap;
  std::optional<VertexId> wide_column;  // |support| >= 2
};

MonomialClassification classify_monomial(const SparseLinearMap& m);

// A map constant on twin classes, built from the quotient witness when the
// twin quotient is regular or biregular (absent otherwise). Columns are
// scaled class indicators, normalized so the square law holds exactly
// against the algebras of G itself.
std::optional<SparseLinearMap> twin_quotient_homomorphism(const FiniteGraph& g);

struct DecideOptions {
  RankOptions rank;
  double tol = 1e-10;
  std::uint64_t seed = 0;
};

// Decision outcome for A_RW(G) vs A(G) on a connected finite graph.
struct Verdict {
  enum class Status { Isomorphic, NotIsomorphic, Undetermined };

  Status status = Status::Undetermined;
  std::optional<MonomialMap> witness;          // adjacency -> random walk
  std::optional<MonomialMap> witness_inverse;  // random walk -> adjacency
  std::optional<HomReport> witness_report;
  std::optional<HomReport> inverse_report;

  std::optional<std::int64_t> rank;
  std::optional<bool> nonsingular;
  std::string reason;  // NotIsomorphic: "non-singular and neither regular nor biregular"

  // Undetermined evidence
  std::map<VertexId, std::int64_t> kernel_vector;  // exact singularity certificate
  std::optional<SparseLinearMap> twin_homomorphism;

  std::optional<TwinPartition> twins;  // attached for reporting
};

// (1) regular or biregular: emit the verified witness; (2) else non-singular:
// NotIsomorphic; (3) else Undetermined with the singularity certificate and,
// when the twin quotient is regular or biregular, the lifted twin map.
Verdict decide_isomorphism(const FiniteGraph& g, const DecideOptions& opt = {});

// Inner product and basis change induced by a monomial map with bijective
// images: e~_i = alpha_i^{-1} e_i is orthonormal for <.,.>_f and
// f~(e~_i) = e_{image(i)} is unitary for it.
struct UnitaryWitness {
  MonomialMap base;
  InnerProduct induced = InnerProduct::standard();  // alpha-induced from base
  double max_basis_residual = 0.0;         // |<f~(e~_i), f~(e~_j)> - delta_ij|
  double max_polarization_residual = 0.0;  // |<f~(v), f~(w)> - <v,w>_f|
  std::int64_t pairs_checked = 0;
  std::uint64_t seed = 0;
};

UnitaryWitness induce_unitary(const MonomialMap& f, std::int64_t random_pairs = 100,
                              std::uint64_t seed = 0);

}  // namespace evoalg
