#include "stabeq/invariants/registry.hpp"

namespace stabeq {

std::optional<std::size_t> IndecRegistry::find(const Module& indecomposable) const {
  auto dv = indecomposable.dimension_vector();
  for (std::size_t id = 0; id < entries_.size(); ++id) {
    const Module& m = entries_[id].module;
    if (m.dim() != indecomposable.dim() || m.dimension_vector() != dv) continue;
    if (indecomposable_isomorphism(m, indecomposable)) return id;
  }
  return std::nullopt;
}

std::optional<IdMultiset> IndecRegistry::resolve(const Module& x, std::uint64_t seed) const {
  IdMultiset out;
  if (x.is_zero()) return out;
  for (const auto& s : decompose(x, seed).summands) {
    auto id = find(s.module);
    if (!id) return std::nullopt;
    out.emplace_back(*id, s.multiplicity);
  }
  return out;
}

std::vector<std::size_t> IndecRegistry::nonprojective_ids() const {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < entries_.size(); ++id) {
    if (!entries_[id].projective) out.push_back(id);
  }
  return out;
}

std::optional<std::size_t> IndecRegistry::simple_id(std::size_t vertex) const {
  for (std::size_t id = 0; id < entries_.size(); ++id) {
    if (entries_[id].simple_vertex == vertex) return id;
  }
  return std::nullopt;
}

std::optional<std::size_t> IndecRegistry::projective_id(std::size_t vertex) const {
  for (std::size_t id = 0; id < entries_.size(); ++id) {
    if (entries_[id].projective_vertex == vertex) return id;
  }
  return std::nullopt;
}

IndecRegistry enumerate_indecomposables(const AlgebraPtr& a, const Caps& caps) {
  IndecRegistry reg(a);
  auto& entries = reg.entries_;
  bool capped = false;

  auto add = [&](const Module& m) -> std::optional<std::size_t> {
    if (auto id = reg.find(m)) return id;
    if (entries.size() >= caps.registry || m.dim() > caps.dim) {
      capped = true;
      return std::nullopt;
    }
    RegistryEntry e;
    e.module = m;
    e.projective = is_projective(m);
    e.injective = is_injective(m);
    e.simple = radical_socle_top(m).radical.source.dim() == 0;
    entries.push_back(std::move(e));
    return entries.size() - 1;
  };

  // returns false when a summand could not be registered
  auto add_all = [&](const Module& m, IdMultiset& into) {
    if (m.is_zero()) return true;
    bool ok = true;
    for (const auto& s : decompose(m, caps.seed).summands) {
      auto id = add(s.module);
      if (id) {
        into.emplace_back(*id, s.multiplicity);
      } else {
        ok = false;
      }
    }
    return ok;
  };

  StandardModules sm = standard_modules(a);
  for (std::size_t k = 0; k < sm.vertices.size(); ++k) {
    std::size_t v = sm.vertices[k];
    if (auto id = add(sm.simples[k])) entries[*id].simple_vertex = v;
    if (auto id = add(sm.projectives[k])) entries[*id].projective_vertex = v;
    if (auto id = add(sm.injectives[k])) entries[*id].injective_vertex = v;
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    Module x = entries[i].module;
    bool ok = true;
    IdMultiset omega, cosyz, middle;
    std::optional<std::size_t> t, ti;
    if (!entries[i].projective) {
      ok = add_all(syzygy(x), omega) && ok;
      t = add(tau(x, caps.seed));
      ok = t.has_value() && ok;
      ok = add_all(ar_sequence(x, caps.seed).middle, middle) && ok;
    }
    if (!entries[i].injective) {
      ok = add_all(cosyzygy(x), cosyz) && ok;
      ti = add(tau_inverse(x, caps.seed));
      ok = ti.has_value() && ok;
    }
    auto& e = entries[i];
    e.omega = std::move(omega);
    e.cosyzygy = std::move(cosyz);
    e.ar_middle = std::move(middle);
    e.tau = t;
    e.tau_inverse = ti;
    e.incomplete = !ok;
  }
  reg.closed_ = !capped;
  return reg;
}

}  // namespace stabeq
