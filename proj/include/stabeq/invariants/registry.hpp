#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stabeq/homology/homology.hpp"

namespace stabeq {

struct Caps {
  std::size_t resolution = 64;
  std::size_t registry = 512;
  std::size_t dim = 256;
  std::size_t del = 32;
  std::uint64_t seed = 0;
};

/// Summand ids with multiplicities.
using IdMultiset = std::vector<std::pair<std::size_t, std::size_t>>;

struct RegistryEntry {
  Module module;
  bool projective = false;
  bool injective = false;
  bool simple = false;
  /// Vertex of the simple / projective / injective it represents, if any.
  std::optional<std::size_t> simple_vertex;
  std::optional<std::size_t> projective_vertex;
  std::optional<std::size_t> injective_vertex;
  IdMultiset omega;
  IdMultiset cosyzygy;
  std::optional<std::size_t> tau;
  std::optional<std::size_t> tau_inverse;
  IdMultiset ar_middle;
  /// Some neighbour was dropped at a cap, so the adjacency lists are partial.
  bool incomplete = false;
};

/// Isomorphism classes of indecomposables reached from simples, projectives
/// and injectives under syzygy, cosyzygy, tau, tau^-1 and middle terms of
/// almost split sequences.
class IndecRegistry {
 public:
  IndecRegistry() = default;
  explicit IndecRegistry(AlgebraPtr a) : alg_(std::move(a)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<RegistryEntry>& entries() const { return entries_; }
  const RegistryEntry& entry(std::size_t id) const { return entries_[id]; }
  std::size_t size() const { return entries_.size(); }
  bool closed() const { return closed_; }

  /// Id of an indecomposable module, if registered.
  std::optional<std::size_t> find(const Module& indecomposable) const;
  /// Summand ids of a module; nullopt when some summand is unregistered.
  std::optional<IdMultiset> resolve(const Module& x, std::uint64_t seed = 0) const;

  std::vector<std::size_t> nonprojective_ids() const;
  std::optional<std::size_t> simple_id(std::size_t vertex) const;
  std::optional<std::size_t> projective_id(std::size_t vertex) const;

 private:
  friend IndecRegistry enumerate_indecomposables(const AlgebraPtr& a, const Caps& caps);
  AlgebraPtr alg_;
  std::vector<RegistryEntry> entries_;
  bool closed_ = false;
};

IndecRegistry enumerate_indecomposables(const AlgebraPtr& a, const Caps& caps = {});

}  // namespace stabeq
