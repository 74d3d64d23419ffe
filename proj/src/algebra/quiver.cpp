#include "stabeq/algebra/quiver.hpp"

#include <map>
#include <set>

#include "stabeq/errors.hpp"

namespace stabeq {

std::optional<std::size_t> Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].name == name) return i;
  }
  return std::nullopt;
}

void Quiver::validate() const {
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) throw InvalidArgument("quiver: duplicate vertex name");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (!names.insert(a.name).second) throw InvalidArgument("quiver: duplicate arrow '" + a.name + "'");
    if (seen.count(a.name)) throw InvalidArgument("quiver: arrow '" + a.name + "' shadows a vertex");
    if (a.source >= vertices.size() || a.target >= vertices.size()) {
      throw InvalidArgument("quiver: arrow '" + a.name + "' has a missing endpoint");
    }
  }
}

Relation zero_relation(Field field, std::vector<std::string> walk) {
  return Relation{{RelationTerm{Scalar(field, 1), std::move(walk)}}};
}

namespace {

struct Walk {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::size_t> arrows;
};

using WalkKey = std::pair<std::size_t, std::vector<std::size_t>>;

struct WalkTable {
  std::vector<Walk> walks;
  std::map<WalkKey, std::size_t> index;
  std::vector<std::vector<std::size_t>> by_length;

  std::optional<std::size_t> find(std::size_t start, const std::vector<std::size_t>& arrows) const {
    auto it = index.find({start, arrows});
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

WalkTable enumerate_walks(const Quiver& q, std::size_t max_len, std::size_t cap) {
  WalkTable t;
  t.by_length.resize(max_len);
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    t.index[{v, {}}] = t.walks.size();
    t.by_length[0].push_back(t.walks.size());
    t.walks.push_back({v, v, {}});
  }
  for (std::size_t len = 1; len < max_len; ++len) {
    for (std::size_t w : t.by_length[len - 1]) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != t.walks[w].end) continue;
        Walk next = t.walks[w];
        next.arrows.push_back(a);
        next.end = q.arrows[a].target;
        t.index[{next.start, next.arrows}] = t.walks.size();
        t.by_length[len].push_back(t.walks.size());
        t.walks.push_back(std::move(next));
        if (t.walks.size() > cap) {
          throw NotNilpotent("more than " + std::to_string(cap) +
                             " paths before the relations became admissible");
        }
      }
    }
  }
  return t;
}

struct ParsedTerm {
  Scalar coeff;
  std::vector<std::size_t> arrows;
};

struct ParsedRelation {
  std::size_t start = 0, end = 0, min_len = 0;
  std::vector<ParsedTerm> terms;
};

std::vector<ParsedRelation> parse_relations(const Quiver& q, const std::vector<Relation>& rels,
                                            Field field) {
  std::vector<ParsedRelation> out;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    ParsedRelation pr;
    bool first = true;
    for (const auto& term : rels[r].terms) {
      if (term.coeff.field() != field) throw FieldMismatch("relation coefficient over another field");
      if (term.walk.size() < 2) {
        throw InvalidArgument("relation " + std::to_string(r + 1) +
                              " has a term of length < 2 (not admissible)");
      }
      ParsedTerm pt{term.coeff, {}};
      for (std::size_t k = 0; k < term.walk.size(); ++k) {
        auto idx = q.arrow_index(term.walk[k]);
        if (!idx) throw InvalidArgument("relation uses unknown arrow '" + term.walk[k] + "'");
        if (k > 0 && q.arrows[pt.arrows.back()].target != q.arrows[*idx].source) {
          throw InvalidArgument("relation walk is not composable at arrow '" + term.walk[k] + "'");
        }
        pt.arrows.push_back(*idx);
      }
      std::size_t s = q.arrows[pt.arrows.front()].source, e = q.arrows[pt.arrows.back()].target;
      if (first) {
        pr.start = s;
        pr.end = e;
        pr.min_len = pt.arrows.size();
        first = false;
      } else if (s != pr.start || e != pr.end) {
        throw InvalidArgument("relation " + std::to_string(r + 1) + " mixes non-parallel paths");
      }
      pr.min_len = std::min(pr.min_len, pt.arrows.size());
      if (!pt.coeff.is_zero()) pr.terms.push_back(std::move(pt));
    }
    if (!pr.terms.empty()) out.push_back(std::move(pr));
  }
  return out;
}

std::string walk_label(const Quiver& q, const Walk& w) {
  if (w.arrows.empty()) return "e" + q.vertices[w.start];
  std::string s;
  for (std::size_t k = 0; k < w.arrows.size(); ++k) {
    if (k) s += ".";
    s += q.arrows[w.arrows[k]].name;
  }
  return s;
}

}  // namespace

AlgebraPtr algebra_from_quiver(const Quiver& q, const std::vector<Relation>& relations, Field field,
                               const QuiverOptions& options, std::string name) {
  q.validate();
  auto rels = parse_relations(q, relations, field);

  for (std::size_t n = 2; n <= options.max_length; ++n) {
    WalkTable t = enumerate_walks(q, n, options.max_paths);
    std::size_t nw = t.walks.size();
    // columns longest first so that pivots eliminate long walks
    std::vector<std::size_t> col_of(nw), walk_of;
    for (std::size_t len = n; len-- > 0;) {
      for (std::size_t w : t.by_length[len]) {
        col_of[w] = walk_of.size();
        walk_of.push_back(w);
      }
    }

    std::vector<std::vector<std::pair<std::size_t, Scalar>>> gens;
    for (const auto& r : rels) {
      for (std::size_t lu = 0; lu + r.min_len < n; ++lu) {
        for (std::size_t u : t.by_length[lu]) {
          if (t.walks[u].end != r.start) continue;
          for (std::size_t lv = 0; lu + lv + r.min_len < n; ++lv) {
            for (std::size_t v : t.by_length[lv]) {
              if (t.walks[v].start != r.end) continue;
              std::vector<std::pair<std::size_t, Scalar>> row;
              for (const auto& term : r.terms) {
                std::vector<std::size_t> arrows = t.walks[u].arrows;
                arrows.insert(arrows.end(), term.arrows.begin(), term.arrows.end());
                arrows.insert(arrows.end(), t.walks[v].arrows.begin(), t.walks[v].arrows.end());
                if (arrows.size() >= n) continue;
                auto idx = t.find(t.walks[u].start, arrows);
                row.push_back({*idx, term.coeff});
              }
              if (!row.empty()) gens.push_back(std::move(row));
            }
          }
        }
      }
    }

    Matrix g(field, gens.size(), nw);
    for (std::size_t r = 0; r < gens.size(); ++r) {
      for (const auto& [w, c] : gens[r]) g.add_to(r, col_of[w], c);
    }
    Echelon e = row_echelon(g);
    std::vector<long> pivot_row(nw, -1);
    for (std::size_t r = 0; r < e.rank; ++r) pivot_row[walk_of[e.pivots[r]]] = static_cast<long>(r);

    // basis: surviving walks, shortest first
    std::vector<std::size_t> basis_walks;
    std::vector<long> basis_index(nw, -1);
    for (std::size_t len = 0; len < n; ++len) {
      for (std::size_t w : t.by_length[len]) {
        if (pivot_row[w] >= 0) continue;
        basis_index[w] = static_cast<long>(basis_walks.size());
        basis_walks.push_back(w);
      }
    }
    std::size_t dim = basis_walks.size();

    auto normal_form = [&](std::size_t w) {
      Matrix v(field, dim, 1);
      if (pivot_row[w] < 0) {
        v.set_int(static_cast<std::size_t>(basis_index[w]), 0, 1);
        return v;
      }
      std::size_t r = static_cast<std::size_t>(pivot_row[w]);
      for (std::size_t b = 0; b < dim; ++b) {
        std::size_t c = col_of[basis_walks[b]];
        if (!e.reduced.is_zero_at(r, c)) v.set(b, 0, -e.reduced.get(r, c));
      }
      return v;
    };

    bool stable = true;
    for (std::size_t w : t.by_length[n - 1]) {
      if (!normal_form(w).is_zero()) {
        stable = false;
        break;
      }
    }
    if (!stable) continue;

    AlgebraData d;
    d.field = field;
    d.provenance = "quiver";
    d.name = std::move(name);
    d.vertex_names = q.vertices;
    for (std::size_t b : basis_walks) d.labels.push_back(walk_label(q, t.walks[b]));
    for (std::size_t x = 0; x < dim; ++x) {
      Matrix lx(field, dim, dim);
      const Walk& wx = t.walks[basis_walks[x]];
      for (std::size_t y = 0; y < dim; ++y) {
        const Walk& wy = t.walks[basis_walks[y]];
        if (wy.end != wx.start) continue;
        std::vector<std::size_t> arrows = wy.arrows;
        arrows.insert(arrows.end(), wx.arrows.begin(), wx.arrows.end());
        if (arrows.size() >= n) continue;
        lx.set_block(0, y, normal_form(*t.find(wy.start, arrows)));
      }
      d.left.push_back(std::move(lx));
    }
    d.unit = Matrix(field, dim, 1);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      Matrix ev = Matrix::unit_vector(field, dim, static_cast<std::size_t>(basis_index[v]));
      d.unit += ev;
      d.idempotents.push_back(ev);
    }
    return Algebra::create(std::move(d));
  }
  throw NotNilpotent("paths of length up to " + std::to_string(options.max_length) +
                     " do not all lie in the relation ideal");
}

}  // namespace stabeq
