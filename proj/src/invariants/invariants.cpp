#include "stabeq/invariants/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stabeq/errors.hpp"
#include "stabeq/module/endomorphism.hpp"

namespace stabeq {

const char* to_string(Status s) {
  switch (s) {
    case Status::exact: return "exact";
    case Status::lower_bound: return "lower-bound";
    case Status::upper_bound: return "upper-bound";
    case Status::unavailable: return "unavailable";
  }
  return "";
}

std::string Value::to_string() const {
  if (status == Status::unavailable) return "unavailable";
  if (bound.kind == Bound::Kind::at_least) return bound.to_string();
  std::string v = bound.to_string();
  if (status == Status::lower_bound) return ">=" + v;
  if (status == Status::upper_bound) return "<=" + v;
  return v;
}

namespace {

Value with_status(Bound b, Status s) { return {b, s, {}}; }

Value max_of(const std::vector<Value>& vs) {
  Value out = Value::exact(Bound::exact(0));
  bool lower = false, upper = false;
  for (const auto& v : vs) {
    if (v.status == Status::unavailable) return v;
    lower = lower || v.status == Status::lower_bound || v.bound.kind == Bound::Kind::at_least;
    upper = upper || v.status == Status::upper_bound;
    if (v.bound.kind == Bound::Kind::infinite) {
      out.bound = v.bound;
    } else if (out.bound.kind != Bound::Kind::infinite && v.bound.value >= out.bound.value) {
      out.bound = Bound::exact(v.bound.value);
    }
  }
  if (lower && upper) return Value::unavailable("mixed lower and upper bounds");
  out.status = lower ? Status::lower_bound : upper ? Status::upper_bound : Status::exact;
  return out;
}

// Minimum of dominant-type values: exact values and lower bounds only.
Value min_of(const std::vector<Value>& vs) {
  std::optional<std::size_t> exact_min, lower_min;
  for (const auto& v : vs) {
    if (v.bound.kind == Bound::Kind::infinite) continue;
    if (v.is_exact()) {
      exact_min = std::min(exact_min.value_or(v.bound.value), v.bound.value);
    } else {
      lower_min = std::min(lower_min.value_or(v.bound.value), v.bound.value);
    }
  }
  if (exact_min && (!lower_min || *exact_min <= *lower_min)) return Value::exact(Bound::exact(*exact_min));
  if (lower_min) return with_status(Bound::at_least(*lower_min), Status::lower_bound);
  return Value::exact(Bound::infinite());
}

}  // namespace

std::vector<std::vector<std::size_t>> omega_support(const IndecRegistry& reg) {
  std::vector<std::vector<std::size_t>> out(reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    for (const auto& [id, mult] : reg.entry(i).omega) {
      if (!reg.entry(id).projective) out[i].push_back(id);
    }
  }
  return out;
}

std::vector<std::optional<Bound>> registry_projective_dimensions(const IndecRegistry& reg) {
  std::size_t n = reg.size();
  auto children = omega_support(reg);
  std::vector<std::optional<std::size_t>> pd(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (reg.entry(i).projective) pd[i] = 0;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (pd[i] || reg.entry(i).incomplete) continue;
      std::size_t m = 0;
      bool all = true;
      for (auto c : children[i]) {
        if (!pd[c]) {
          all = false;
          break;
        }
        m = std::max(m, *pd[c]);
      }
      if (!all) continue;
      pd[i] = children[i].empty() ? 1 : m + 1;
      changed = true;
    }
  }
  std::vector<std::optional<Bound>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (pd[i]) {
      out[i] = Bound::exact(*pd[i]);
      continue;
    }
    // unresolved: infinite unless the Omega orbit touches a partial entry
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{i};
    bool partial = false;
    while (!stack.empty() && !partial) {
      std::size_t u = stack.back();
      stack.pop_back();
      if (seen[u]) continue;
      seen[u] = true;
      if (reg.entry(u).incomplete) partial = true;
      for (auto c : children[u]) {
        if (!pd[c]) stack.push_back(c);
      }
    }
    if (!partial) out[i] = Bound::infinite();
  }
  return out;
}

std::vector<std::vector<bool>> syzygy_strata(const IndecRegistry& reg) {
  auto children = omega_support(reg);
  std::vector<bool> t(reg.size(), false);
  for (auto id : reg.nonprojective_ids()) t[id] = true;
  std::vector<std::vector<bool>> strata{t};
  while (true) {
    std::vector<bool> next(reg.size(), false);
    for (std::size_t i = 0; i < reg.size(); ++i) {
      if (!t[i]) continue;
      for (auto c : children[i]) next[c] = true;
    }
    if (next == t) break;
    strata.push_back(next);
    t = std::move(next);
  }
  return strata;
}

namespace {

Value del_with_strata(const IndecRegistry& reg, const std::vector<std::vector<bool>>& strata,
                      const std::vector<std::vector<std::size_t>>& children, const std::vector<std::size_t>& ids,
                      std::size_t cap) {
  std::set<std::size_t> cur;
  for (auto id : ids) {
    if (!reg.entry(id).projective) cur.insert(id);
  }
  bool partial = false;
  auto stratum = [&](std::size_t k) -> const std::vector<bool>& { return strata[std::min(k, strata.size() - 1)]; };
  for (std::size_t d = 0; d <= cap; ++d) {
    bool inside = std::all_of(cur.begin(), cur.end(), [&](std::size_t id) { return stratum(d + 1)[id]; });
    if (inside) {
      if (reg.closed()) return Value::exact(Bound::exact(d));
      if (partial) return Value::unavailable("registry capped inside the syzygy orbit");
      return with_status(Bound::exact(d), Status::upper_bound);
    }
    std::set<std::size_t> next;
    for (auto id : cur) {
      partial = partial || reg.entry(id).incomplete;
      for (auto c : children[id]) next.insert(c);
    }
    cur = std::move(next);
  }
  return with_status(Bound::at_least(cap + 1), Status::lower_bound);
}

}  // namespace

Value delooping_level_of(const IndecRegistry& reg, const std::vector<std::size_t>& ids, std::size_t cap) {
  return del_with_strata(reg, syzygy_strata(reg), omega_support(reg), ids, cap);
}

DeloopingResult delooping_level(const IndecRegistry& reg, std::size_t cap) {
  auto strata = syzygy_strata(reg);
  auto children = omega_support(reg);
  DeloopingResult out;
  std::vector<Value> vals;
  for (auto v : reg.algebra()->structure().class_vertex) {
    auto id = reg.simple_id(v);
    Value val = id ? del_with_strata(reg, strata, children, {*id}, cap) : Value::unavailable("simple not registered");
    out.per_simple.emplace_back(v, val);
    vals.push_back(val);
  }
  out.del = max_of(vals);
  return out;
}

IntMatrix omega_matrix(const IndecRegistry& reg) {
  auto ids = reg.nonprojective_ids();
  std::map<std::size_t, std::size_t> index;
  for (std::size_t k = 0; k < ids.size(); ++k) index[ids[k]] = k;
  IntMatrix m(ids.size(), ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    for (const auto& [id, mult] : reg.entry(ids[k]).omega) {
      auto it = index.find(id);
      if (it != index.end()) m.at(it->second, k) += static_cast<unsigned long>(mult);
    }
  }
  return m;
}

PhiPsi phi_psi(const IndecRegistry& reg, const std::vector<std::size_t>& ids) {
  auto np = reg.nonprojective_ids();
  std::map<std::size_t, std::size_t> index;
  for (std::size_t k = 0; k < np.size(); ++k) index[np[k]] = k;
  std::set<std::size_t> cols;
  for (auto id : ids) {
    if (!reg.entry(id).projective) cols.insert(index.at(id));
  }
  Status st = reg.closed() ? Status::exact : Status::lower_bound;
  if (cols.empty()) return {with_status(Bound::exact(0), st), with_status(Bound::exact(0), st)};

  IntMatrix m = omega_matrix(reg);
  std::size_t n = np.size();
  // Fitting index: first k with rank M^k = rank M^(k+1)
  IntMatrix power(n, n);
  for (std::size_t i = 0; i < n; ++i) power.at(i, i) = 1;
  std::size_t prev = n, k0 = 0;
  while (true) {
    IntMatrix next = m * power;
    std::size_t r = integer_subgroup_rank(next);
    if (r == prev) break;
    prev = r;
    power = std::move(next);
    ++k0;
  }
  IntMatrix g(n, cols.size());
  std::size_t c = 0;
  for (auto idx : cols) g.at(idx, c++) = 1;
  std::vector<std::size_t> ranks;
  for (std::size_t j = 0; j <= k0; ++j) {
    ranks.push_back(integer_subgroup_rank(g));
    g = m * g;
  }
  std::size_t phi = 0;
  while (ranks[phi] != ranks[k0]) ++phi;

  // summands of Omega^phi X
  std::set<std::size_t> cur(ids.begin(), ids.end());
  bool partial = false;
  for (std::size_t j = 0; j < phi; ++j) {
    std::set<std::size_t> next;
    for (auto id : cur) {
      partial = partial || reg.entry(id).incomplete;
      for (const auto& [child, mult] : reg.entry(id).omega) next.insert(child);
    }
    cur = std::move(next);
  }
  auto pds = registry_projective_dimensions(reg);
  std::size_t extra = 0;
  for (auto id : cur) {
    if (!pds[id]) partial = true;
    else if (pds[id]->is_finite()) extra = std::max(extra, pds[id]->value);
  }
  Status psi_st = partial ? Status::lower_bound : st;
  return {with_status(Bound::exact(phi), st), with_status(Bound::exact(phi + extra), psi_st)};
}

PhiPsi phi_psi_dim(const IndecRegistry& reg) {
  std::vector<std::size_t> all(reg.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return phi_psi(reg, all);
}

Value finitistic_dimension_bound(const IndecRegistry& reg) {
  std::size_t m = 0;
  bool partial = !reg.closed();
  for (const auto& pd : registry_projective_dimensions(reg)) {
    if (!pd) partial = true;
    else if (pd->is_finite()) m = std::max(m, pd->value);
  }
  return with_status(Bound::exact(m), partial ? Status::lower_bound : Status::exact);
}

std::vector<std::size_t> projective_injectives(const AlgebraPtr& a) {
  std::vector<std::size_t> out;
  for (auto v : a->structure().class_vertex) {
    if (is_injective(projective_module(a, v))) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> nu_stably_projectives(const AlgebraPtr& a) {
  const auto& cv = a->structure().class_vertex;
  std::vector<Module> proj;
  for (auto v : cv) proj.push_back(projective_module(a, v));
  // sigma[k] = l when nu P(k) = I(k) is isomorphic to P(l)
  std::vector<std::optional<std::size_t>> sigma(cv.size());
  for (std::size_t k = 0; k < cv.size(); ++k) {
    Module inj = injective_module(a, cv[k]);
    for (std::size_t l = 0; l < cv.size(); ++l) {
      if (proj[l].dim() == inj.dim() && indecomposable_isomorphism(proj[l], inj)) {
        sigma[k] = l;
        break;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cv.size(); ++k) {
    std::optional<std::size_t> cur = k;
    bool ok = true;
    for (std::size_t step = 0; step <= cv.size(); ++step) {
      cur = sigma[*cur];
      if (!cur) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cv[k]);
  }
  return out;
}

namespace {

bool in_add(const Module& x, const std::vector<Module>& indecs, std::uint64_t seed) {
  if (x.is_zero()) return true;
  for (const auto& m : decompose(x, seed).modules()) {
    bool found = false;
    for (const auto& p : indecs) {
      if (p.dim() == m.dim() && p.dimension_vector() == m.dimension_vector() && indecomposable_isomorphism(p, m)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Value leading_in_add(const Resolution& r, const std::vector<Module>& indecs, std::uint64_t seed) {
  std::size_t n = 0;
  for (const auto& t : r.terms) {
    if (!in_add(t, indecs, seed)) return Value::exact(Bound::exact(n));
    ++n;
  }
  if (r.terminated) return Value::exact(Bound::infinite());
  return with_status(Bound::at_least(n), Status::lower_bound);
}

}  // namespace

DominantDimensions dominant_dimensions(const AlgebraPtr& a, const Caps& caps) {
  std::vector<Module> prinj, stp;
  for (auto v : projective_injectives(a)) prinj.push_back(projective_module(a, v));
  for (auto v : nu_stably_projectives(a)) stp.push_back(projective_module(a, v));
  DominantDimensions out;
  std::vector<Value> dds, nus;
  for (auto v : a->structure().class_vertex) {
    Resolution r = minimal_resolution(projective_module(a, v), Direction::injective, caps.resolution);
    Value dd = leading_in_add(r, prinj, caps.seed);
    Value nu = leading_in_add(r, stp, caps.seed);
    out.per_projective.push_back({v, dd, nu});
    dds.push_back(dd);
    nus.push_back(nu);
  }
  out.dd = min_of(dds);
  out.nu_dd = min_of(nus);
  return out;
}

FrobeniusPart frobenius_part(const AlgebraPtr& a, std::uint64_t seed) {
  FrobeniusPart out;
  out.stp_vertices = nu_stably_projectives(a);
  if (out.stp_vertices.empty()) {
    out.algebra = Algebra::zero(a->field());
    return out;
  }
  std::vector<Module> parts;
  for (auto v : out.stp_vertices) parts.push_back(projective_module(a, v));
  out.algebra = endomorphism_algebra(direct_sum(a, parts).module, seed);
  out.quiver = radical_and_gabriel_quiver(out.algebra);
  return out;
}

}  // namespace stabeq
