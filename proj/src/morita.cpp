#include "skewgin/morita.hpp"

#include <algorithm>
#include <set>

#include "skewgin/ginzburg.hpp"

namespace skewgin {

namespace {

// Columns follow the sorted basis of one length component.
class ComponentColumns {
 public:
  ComponentColumns(const ContextPtr& ctx, std::size_t length) : index_(ctx->basis(length)) {}

  SparseVector operator()(const CrossedElement& x) const {
    SparseVector v;
    for (const auto& [k, c] : x.terms()) {
      auto col = index_.find(k);
      if (!col) throw Error(ErrorCode::InvalidArgument, "term outside the expected length component");
      v.emplace_back(*col, c);
    }
    return normalized(std::move(v));
  }
  const CrossedKey& key(std::size_t col) const { return index_.key(col); }
  std::size_t size() const { return index_.size(); }

 private:
  TermIndex<CrossedKey> index_;
};

CrossedElement vertex_element(const ContextPtr& ctx, VertexId v) {
  return CrossedElement::of(ctx, Path::trivial(v), ctx->group()->identity());
}

std::string padded(std::size_t k, std::size_t total) {
  std::string digits = std::to_string(k);
  std::size_t width = std::to_string(total == 0 ? 0 : total - 1).size();
  return std::string(width - digits.size(), '0') + digits;
}

}  // namespace

OrbitData orbit_data(const QuiverAction& action) {
  const auto& q = *action.quiver();
  const auto& group = *action.group();
  OrbitData out;
  std::size_t n = q.vertex_count();
  out.representative_of.assign(n, n);
  out.kappa.assign(n, group.identity());
  out.stabilizers.assign(n, {});
  for (VertexId i = 0; i < n; ++i) {
    if (out.representative_of[i] != n) continue;
    out.representatives.push_back(i);
    for (GroupElement g = 0; g < group.order(); ++g) {
      VertexId gi = action.vertex_image(g, i);
      if (out.representative_of[gi] == n) out.representative_of[gi] = i;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    VertexId rep = out.representative_of[v];
    for (GroupElement g = 0; g < group.order(); ++g) {
      if (action.vertex_image(g, v) == rep) {
        out.kappa[v] = g;
        break;
      }
    }
    for (GroupElement g = 0; g < group.order(); ++g) {
      if (action.vertex_image(g, v) == v) out.stabilizers[v].push_back(g);
    }
  }
  return out;
}

std::size_t Bimodule::spanning_size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.spanning.size();
  return n;
}

Bimodule build_bimodule(const ContextPtr& ctx, const OrbitData& orbits) {
  const auto& action = ctx->action();
  const auto& q = *ctx->quiver();
  const auto& group = *ctx->group();
  Bimodule m;
  for (VertexId i : orbits.representatives) {
    for (VertexId j : orbits.representatives) {
      std::vector<VertexId> orbit_i, orbit_j;
      for (VertexId v = 0; v < q.vertex_count(); ++v) {
        if (orbits.representative_of[v] == i) orbit_i.push_back(v);
        if (orbits.representative_of[v] == j) orbit_j.push_back(v);
      }
      std::set<std::pair<VertexId, VertexId>> seen;
      for (VertexId ip : orbit_i) {
        for (VertexId jp : orbit_j) {
          if (seen.count({ip, jp})) continue;
          for (GroupElement g = 0; g < group.order(); ++g) seen.insert({action.vertex_image(g, ip), action.vertex_image(g, jp)});
          BimoduleBlock block{i, j, ip, jp, {}};
          CrossedElement left_kappa = CrossedElement::group_element(ctx, orbits.kappa[ip]);
          CrossedElement right_kappa = CrossedElement::group_element(ctx, group.inverse(orbits.kappa[jp]));
          for (ArrowId a : q.arrows_between(ip, jp)) {
            CrossedElement core = left_kappa * CrossedElement::of(ctx, Path::of_arrow(q, a), group.identity()) * right_kappa;
            for (GroupElement h : orbits.stabilizers[i]) {
              CrossedElement hc = CrossedElement::group_element(ctx, h) * core;
              for (GroupElement hp : orbits.stabilizers[j]) {
                block.spanning.push_back(hc * CrossedElement::group_element(ctx, hp));
              }
            }
          }
          if (!block.spanning.empty()) m.blocks.push_back(std::move(block));
        }
      }
    }
  }
  return m;
}

BimoduleReport check_bimodule(const ContextPtr& ctx, const OrbitData& orbits, const Bimodule& m) {
  BimoduleReport report;
  const auto& q = *ctx->quiver();
  ComponentColumns columns(ctx, 1);
  std::map<std::pair<VertexId, VertexId>, EchelonBasis> spans;
  for (const auto& block : m.blocks) {
    CrossedElement ei = vertex_element(ctx, block.src_rep);
    CrossedElement ej = vertex_element(ctx, block.tgt_rep);
    auto& span = spans.try_emplace({block.src_rep, block.tgt_rep}, ctx->field()).first->second;
    for (const auto& x : block.spanning) {
      if (!(ei * x * ej == x) || x.homogeneous_length() != std::optional<std::size_t>(1)) {
        report.failures.push_back("bimodule element " + x.to_string() + " is not in e_" + q.vertex_name(block.src_rep) +
                                  " L_1 e_" + q.vertex_name(block.tgt_rep));
        continue;
      }
      span.insert(columns(x));
    }
  }
  for (VertexId i : orbits.representatives) {
    for (VertexId j : orbits.representatives) {
      CrossedElement ei = vertex_element(ctx, i);
      CrossedElement ej = vertex_element(ctx, j);
      EchelonBasis full(ctx->field());
      for (const auto& key : ctx->basis(1)) {
        CrossedElement y = ei * CrossedElement::of(ctx, key) * ej;
        if (!y.is_zero()) full.insert(columns(y));
      }
      auto it = spans.find({i, j});
      std::size_t rank = it == spans.end() ? 0 : it->second.rank();
      report.dimensions[{i, j}] = rank;
      if (rank != full.rank()) {
        report.failures.push_back("bimodule between " + q.vertex_name(i) + " and " + q.vertex_name(j) + " has rank " +
                                  std::to_string(rank) + " but the corner of L_1 has dimension " +
                                  std::to_string(full.rank()));
      }
    }
  }
  return report;
}

MoritaData reduced_quiver(const ContextPtr& ctx, const std::map<VertexId, IdempotentSet>& supplied) {
  const auto& q = *ctx->quiver();
  const auto& group = ctx->group();
  const Field& f = ctx->field();
  MoritaData md{ctx, orbit_data(ctx->action()), {}, {}, CrossedElement(ctx), {}, {}, nullptr};
  md.bimodule = build_bimodule(ctx, md.orbits);

  for (VertexId r : md.orbits.representatives) {
    const auto& stab = md.orbits.stabilizers[r];
    auto it = supplied.find(r);
    IdempotentSet set;
    if (it != supplied.end()) {
      set = it->second;
      if (set.subgroup != stab) {
        throw Error(ErrorCode::IncompleteIdempotents,
                    "idempotents supplied for vertex " + q.vertex_name(r) + " live on the wrong subgroup");
      }
      auto report = validate_idempotent_set(set);
      if (!report.ok()) {
        throw Error(ErrorCode::IncompleteIdempotents,
                    "idempotents for vertex " + q.vertex_name(r) + " fail validation: " + report.failures.front());
      }
    } else if (group->is_abelian(stab)) {
      set = abelian_idempotents(group, f, stab);
    } else {
      throw Error(ErrorCode::IncompleteIdempotents,
                  "stabilizer of vertex " + q.vertex_name(r) + " is not abelian and no idempotents were supplied");
    }
    md.idempotents.emplace(r, set);
    for (std::size_t k = 0; k < set.idempotents.size(); ++k) {
      std::string name = set.idempotents.size() == 1 ? q.vertex_name(r) : q.vertex_name(r) + "." + std::to_string(k);
      CrossedElement idem = CrossedElement::at_vertex(ctx, r, set.idempotents[k]);
      md.e += idem;
      md.vertices.push_back({name, r, k, set.dims[k], std::move(idem)});
    }
  }

  ComponentColumns columns(ctx, 1);
  std::vector<ReducedArrow> found;
  for (std::size_t s = 0; s < md.vertices.size(); ++s) {
    for (std::size_t t = 0; t < md.vertices.size(); ++t) {
      std::map<int, EchelonBasis> by_degree;
      for (const auto& block : md.bimodule.blocks) {
        if (block.src_rep != md.vertices[s].representative || block.tgt_rep != md.vertices[t].representative) continue;
        for (const auto& x : block.spanning) {
          CrossedElement y = md.vertices[s].idempotent * x * md.vertices[t].idempotent;
          if (y.is_zero()) continue;
          by_degree.try_emplace(*y.homogeneous_degree(), f).first->second.insert(columns(y));
        }
      }
      for (const auto& [deg, basis] : by_degree) {
        for (const auto& row : basis.reduced_rows()) {
          CrossedElement image(ctx);
          for (const auto& [col, c] : row) image.add_term(columns.key(col), c);
          found.push_back({"", s, t, deg, columns.key(row.front().first), std::move(image)});
        }
      }
    }
  }

  // An arrow keeps its original name when its image is that arrow itself.
  std::set<std::string> taken;
  for (auto& arrow : found) {
    if (arrow.image.terms().size() != 1) continue;
    const auto& [key, c] = *arrow.image.terms().begin();
    if (!c.is_one() || key.second != group->identity() || key.first.length() != 1) continue;
    const std::string& name = q.arrow(key.first.arrows.front()).name;
    if (taken.insert(name).second) arrow.name = name;
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    if (!found[k].name.empty()) continue;
    std::string name = "m" + padded(k, found.size());
    while (taken.count(name)) name += "'";
    taken.insert(name);
    found[k].name = name;
  }

  std::vector<std::string> vnames;
  for (const auto& v : md.vertices) vnames.push_back(v.name);
  std::vector<GradedQuiver::ArrowSpec> specs;
  for (const auto& a : found) specs.push_back({a.name, vnames[a.src], vnames[a.tgt], a.degree});
  md.reduced = std::make_shared<const GradedQuiver>(vnames, specs);
  std::vector<std::size_t> order(found.size());
  for (std::size_t k = 0; k < found.size(); ++k) order[md.reduced->arrow_id(found[k].name)] = k;
  for (std::size_t id = 0; id < found.size(); ++id) md.arrows.push_back(std::move(found[order[id]]));
  return md;
}

CrossedElement embed_path(const MoritaData& md, const Path& p) {
  if (p.is_trivial()) return md.vertices.at(p.src).idempotent;
  CrossedElement out = md.arrows.at(p.arrows.front()).image;
  for (std::size_t k = 1; k < p.length() && !out.is_zero(); ++k) out = out * md.arrows.at(p.arrows[k]).image;
  return out;
}

CrossedElement embed(const MoritaData& md, const AlgElement& x) {
  if (!same_quiver(x.quiver(), md.reduced)) throw Error(ErrorCode::QuiverMismatch, "element does not live on the reduced quiver");
  CrossedElement out(md.ctx);
  for (const auto& [p, c] : x.terms()) out += embed_path(md, p) * c;
  return out;
}

EmbeddingReport check_embedding(const MoritaData& md, std::size_t max_length) {
  EmbeddingReport report;
  const auto& ctx = md.ctx;
  const auto& reduced = *md.reduced;
  CrossedElement zero(ctx);
  CrossedElement sum(ctx);
  for (std::size_t s = 0; s < md.vertices.size(); ++s) {
    sum += md.vertices[s].idempotent;
    for (std::size_t t = 0; t < md.vertices.size(); ++t) {
      CrossedElement prod = md.vertices[s].idempotent * md.vertices[t].idempotent;
      const CrossedElement& expected = s == t ? md.vertices[s].idempotent : zero;
      if (!(prod == expected)) {
        report.failures.push_back("vertex idempotents " + md.vertices[s].name + " and " + md.vertices[t].name +
                                  (s == t ? " fail idempotency" : " are not orthogonal"));
      }
    }
  }
  if (!(sum == md.e)) report.failures.push_back("vertex idempotents do not sum to e");
  if (!(md.e * md.e == md.e)) report.failures.push_back("e is not idempotent");
  for (std::size_t a = 0; a < md.arrows.size(); ++a) {
    const auto& arrow = md.arrows[a];
    CrossedElement placed = md.vertices[arrow.src].idempotent * arrow.image * md.vertices[arrow.tgt].idempotent;
    if (!(placed == arrow.image)) report.failures.push_back("image of arrow " + arrow.name + " is not placed between its endpoints");
  }

  for (std::size_t len = 0; len <= max_length; ++len) {
    ComponentColumns columns(ctx, len);
    EmbeddingLevel level;
    level.length = len;
    auto paths = paths_of_length(reduced, len);
    level.paths = paths.size();
    EchelonBasis images(ctx->field());
    for (const auto& p : paths) {
      CrossedElement img = embed_path(md, p);
      if (len >= 2) {
        Path head = Path::of_arrow(reduced, p.arrows.front());
        Path tail = Path::from_arrows(reduced, {p.arrows.begin() + 1, p.arrows.end()});
        if (!(embed_path(md, head) * embed_path(md, tail) == img)) {
          report.failures.push_back("embedding is not multiplicative on " + to_string(reduced, p));
        }
      }
      if (img.is_zero() || img.homogeneous_length() != std::optional<std::size_t>(len)) {
        report.failures.push_back("image of " + to_string(reduced, p) + " is zero or has the wrong length");
        continue;
      }
      images.insert(columns(img));
    }
    level.image_rank = images.rank();
    if (level.image_rank != level.paths) {
      report.failures.push_back("embedding is not injective in length " + std::to_string(len) + ": rank " +
                                std::to_string(level.image_rank) + " for " + std::to_string(level.paths) + " paths");
    }

    EchelonBasis span(ctx->field());
    for (std::size_t left = 0; left <= len && span.rank() < columns.size(); ++left) {
      auto us = ctx->basis(left);
      auto vs = ctx->basis(len - left);
      std::vector<CrossedElement> ev;
      for (const auto& v : vs) ev.push_back(md.e * CrossedElement::of(ctx, v));
      for (const auto& u : us) {
        CrossedElement ue = CrossedElement::of(ctx, u);
        for (const auto& x : ev) {
          CrossedElement y = ue * x;
          if (!y.is_zero()) span.insert(columns(y));
          if (span.rank() == columns.size()) break;
        }
        if (span.rank() == columns.size()) break;
      }
    }
    level.full = span.rank() == columns.size();
    if (!level.full) {
      report.failures.push_back("e is not full in length " + std::to_string(len) + ": products span " +
                                std::to_string(span.rank()) + " of " + std::to_string(columns.size()) + " dimensions");
    }
    report.levels.push_back(level);
  }
  return report;
}

namespace {

bool congruent(const ContextPtr& ctx, const CrossedElement& diff) {
  std::map<std::size_t, CrossedElement> by_length;
  for (const auto& [k, c] : diff.terms()) by_length.try_emplace(k.first.length(), ctx).first->second.add_term(k, c);
  for (const auto& [len, part] : by_length) {
    if (!HC0Component(ctx, len).in_commutator_span(part)) return false;
  }
  return true;
}

}  // namespace

bool same_class(const Potential& w, const Potential& w_reduced, const MoritaData& md) {
  const auto& ctx = md.ctx;
  CrossedElement x = CrossedElement::from_path_algebra(ctx, w.representative(), ctx->group()->identity());
  return congruent(ctx, x - embed(md, w_reduced.representative()));
}

Transport transport_potential(const Potential& w, const MoritaData& md) {
  const auto& ctx = md.ctx;
  if (!same_quiver(w.quiver(), ctx->quiver())) throw Error(ErrorCode::QuiverMismatch, "potential does not live on the acted quiver");
  if (!ctx->quiver()->trivially_graded()) {
    throw Error(ErrorCode::DegreeMismatch, "potential transport is only available for trivially graded quivers");
  }
  if (!is_potential_invariant(w, ctx->action())) {
    throw Error(ErrorCode::NotInvariantPotential, "potential " + w.to_string() + " is not invariant under the group action");
  }
  const Field& f = ctx->field();
  Transport out{Potential(md.reduced, f), HC0Reduction{CrossedElement(ctx), {}, 0, 0}, true};
  if (w.is_zero()) return out;
  auto len = w.common_length();
  if (!len) throw Error(ErrorCode::NotLengthHomogeneous, "potential mixes cycle lengths");

  CrossedElement x = CrossedElement::from_path_algebra(ctx, w.representative(), ctx->group()->identity());
  out.reduction = hc0_reduce(x, md.e);

  ComponentColumns columns(ctx, *len);
  auto paths = paths_of_length(*md.reduced, *len);
  LinearSolver solver(f);
  for (const auto& p : paths) solver.add(columns(embed_path(md, p)));
  auto combo = solver.solve(columns(out.reduction.representative));
  if (!combo) {
    throw Error(ErrorCode::BasisExpressFailure, "corner representative " + out.reduction.representative.to_string() +
                                                    " is not a combination of reduced paths");
  }
  std::vector<Potential::RawTerm> raw;
  for (const auto& [id, c] : *combo) {
    // Non-closed corner paths are commutators with a vertex idempotent.
    if (paths[id].is_cycle()) raw.emplace_back(c, paths[id]);
  }
  out.reduced = Potential::canonicalize(md.reduced, f, raw);
  out.class_verified = verify_certificate(x, out.reduction) && same_class(w, out.reduced, md);
  return out;
}

DimensionReport morita_dimension_check(const Potential& w, const Potential& w_reduced, const MoritaData& md,
                                       std::size_t max_length) {
  DimensionReport report;
  const auto& ctx = md.ctx;
  const auto& group = *ctx->group();
  const Field& f = ctx->field();

  auto relations = jacobian_relations(w);
  {
    TermIndex<Path> cols;
    EchelonBasis span(f);
    for (const auto& r : relations) span.insert(cols.vectorize(r.terms()));
    for (const auto& r : relations) {
      for (GroupElement g = 0; g < group.order(); ++g) {
        if (!span.contains(cols.vectorize(act(ctx->action(), g, r).terms()))) {
          report.failures.push_back("group element " + group.name(g) + " does not preserve the span of the cyclic derivatives");
        }
      }
    }
  }

  std::vector<std::size_t> right;
  try {
    right = jacobian_truncation(w_reduced, max_length);
  } catch (const Error& err) {
    report.failures.push_back(std::string("reduced Jacobian truncation failed: ") + err.what());
    return report;
  }

  for (std::size_t len = 0; len <= max_length; ++len) {
    ComponentColumns columns(ctx, len);
    EchelonBasis corner(f);
    for (const auto& key : ctx->basis(len)) {
      CrossedElement y = md.e * CrossedElement::of(ctx, key) * md.e;
      if (!y.is_zero()) corner.insert(columns(y));
    }
    EchelonBasis ideal(f);
    for (const auto& r : ideal_spanning_set(relations, len)) {
      for (GroupElement g = 0; g < group.order(); ++g) {
        CrossedElement y = md.e * CrossedElement::from_path_algebra(ctx, r, g) * md.e;
        if (!y.is_zero()) ideal.insert(columns(y));
      }
    }
    DimensionRow row{len, corner.rank() - ideal.rank(), right[len]};
    if (!row.pass()) {
      report.failures.push_back("length " + std::to_string(len) + ": corner of the crossed Jacobian algebra has dimension " +
                                std::to_string(row.corner) + ", reduced Jacobian algebra has " +
                                std::to_string(row.reduced));
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace skewgin
