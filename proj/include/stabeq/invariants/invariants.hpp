#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabeq/algebra/constructions.hpp"
#include "stabeq/invariants/registry.hpp"
#include "stabeq/linalg/lattice.hpp"

namespace stabeq {

enum class Status { exact, lower_bound, upper_bound, unavailable };
const char* to_string(Status s);

/// An invariant value with its certification status.
struct Value {
  Bound bound;
  Status status = Status::exact;
  std::string reason;

  static Value exact(Bound b) { return {b, Status::exact, {}}; }
  static Value unavailable(std::string why) { return {Bound::exact(0), Status::unavailable, std::move(why)}; }
  bool is_exact() const { return status == Status::exact && bound.is_exact(); }
  std::string to_string() const;
  bool operator==(const Value& o) const { return bound == o.bound && status == o.status; }
};

/// Projective dimension of every registry class; nullopt where a capped
/// neighbour makes it undecidable.
std::vector<std::optional<Bound>> registry_projective_dimensions(const IndecRegistry& reg);

/// Non-projective summand classes of Omega, per registry id.
std::vector<std::vector<std::size_t>> omega_support(const IndecRegistry& reg);

/// T_0 = non-projective classes, T_{k+1} = non-projective summands of
/// Omega(T_k), until the sequence stabilises (last entry repeats forever).
std::vector<std::vector<bool>> syzygy_strata(const IndecRegistry& reg);

/// del of the module with the given summand classes.
Value delooping_level_of(const IndecRegistry& reg, const std::vector<std::size_t>& ids, std::size_t cap);

struct DeloopingResult {
  Value del;
  /// (vertex, del of the simple at that vertex).
  std::vector<std::pair<std::size_t, Value>> per_simple;
};
DeloopingResult delooping_level(const IndecRegistry& reg, std::size_t cap);

/// Integer matrix of Omega on the non-projective classes (in the order of
/// nonprojective_ids()).
IntMatrix omega_matrix(const IndecRegistry& reg);

struct PhiPsi {
  Value phi;
  Value psi;
};
PhiPsi phi_psi(const IndecRegistry& reg, const std::vector<std::size_t>& ids);
/// phi and psi of the sum of all registered classes.
PhiPsi phi_psi_dim(const IndecRegistry& reg);
/// Largest finite projective dimension among registered classes.
Value finitistic_dimension_bound(const IndecRegistry& reg);

struct DominantDimensions {
  Value dd;
  Value nu_dd;
  /// (vertex, dd of P(vertex), nu-dd of P(vertex)).
  struct Row {
    std::size_t vertex;
    Value dd;
    Value nu_dd;
  };
  std::vector<Row> per_projective;
};
DominantDimensions dominant_dimensions(const AlgebraPtr& a, const Caps& caps = {});

/// Vertices v (one per class) with P(v) nu-stably projective.
std::vector<std::size_t> nu_stably_projectives(const AlgebraPtr& a);
/// Vertices v (one per class) with P(v) injective.
std::vector<std::size_t> projective_injectives(const AlgebraPtr& a);

struct FrobeniusPart {
  std::vector<std::size_t> stp_vertices;
  AlgebraPtr algebra;
  /// Empty quiver for the zero algebra.
  GabrielQuiver quiver;
};
FrobeniusPart frobenius_part(const AlgebraPtr& a, std::uint64_t seed = 0);

}  // namespace stabeq
