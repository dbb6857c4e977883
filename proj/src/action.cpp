#include "skewgin/action.hpp"

#include <algorithm>

namespace skewgin {

namespace {

ArrowCombination sorted_combination(ArrowCombination c) {
  SparseVector v(c.begin(), c.end());
  v = normalized(std::move(v));
  return ArrowCombination(v.begin(), v.end());
}

std::string pair_label(const GradedQuiver& q, VertexId i, VertexId j) {
  return q.vertex_name(i) + " -> " + q.vertex_name(j);
}

}  // namespace

QuiverAction::QuiverAction(GroupPtr group, QuiverPtr quiver, Field field, std::vector<ElementAction> elements)
    : group_(std::move(group)), quiver_(std::move(quiver)), field_(field), elements_(std::move(elements)) {
  if (elements_.size() != group_->order()) {
    throw Error(ErrorCode::InvalidAction, "action lists " + std::to_string(elements_.size()) +
                                              " elements for a group of order " + std::to_string(group_->order()));
  }
}

QuiverAction QuiverAction::trivial(GroupPtr group, QuiverPtr quiver, Field field) {
  ElementAction id;
  for (VertexId v = 0; v < quiver->vertex_count(); ++v) id.vertex_perm.push_back(v);
  for (ArrowId a = 0; a < quiver->arrow_count(); ++a) id.arrow_images.push_back({{a, field.one()}});
  std::vector<ElementAction> all(group->order(), id);
  return QuiverAction(std::move(group), std::move(quiver), field, std::move(all));
}

ElementAction compose_actions(const GradedQuiver& q, const Field& field, const ElementAction& g,
                              const ElementAction& h) {
  ElementAction out;
  for (VertexId i = 0; i < q.vertex_count(); ++i) out.vertex_perm.push_back(g.vertex_perm.at(h.vertex_perm.at(i)));
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    SparseVector acc;
    for (const auto& [b, c] : h.arrow_images.at(a)) {
      const auto& gb = g.arrow_images.at(b);
      add_scaled(acc, c, SparseVector(gb.begin(), gb.end()));
    }
    (void)field;
    out.arrow_images.emplace_back(acc.begin(), acc.end());
  }
  return out;
}

QuiverAction QuiverAction::from_generators(GroupPtr group, QuiverPtr quiver, Field field,
                                           const std::map<GroupElement, ElementAction>& generators) {
  std::vector<std::optional<ElementAction>> known(group->order());
  known[group->identity()] = trivial(group, quiver, field).element(group->identity());
  for (const auto& [g, data] : generators) {
    if (g >= group->order()) throw Error(ErrorCode::InvalidAction, "unknown group element index");
    if (data.vertex_perm.size() != quiver->vertex_count() || data.arrow_images.size() != quiver->arrow_count()) {
      throw Error(ErrorCode::InvalidAction, "action data for " + group->name(g) + " has the wrong size");
    }
    known[g] = data;
  }
  // Breadth-first closure: multiply every known element by the generators.
  std::vector<GroupElement> frontier;
  for (GroupElement g = 0; g < known.size(); ++g) {
    if (known[g]) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (GroupElement x : frontier) {
      for (const auto& [s, data] : generators) {
        GroupElement product = group->multiply(s, x);
        if (known[product]) continue;
        known[product] = compose_actions(*quiver, field, data, *known[x]);
        next.push_back(product);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementAction> all;
  for (GroupElement g = 0; g < known.size(); ++g) {
    if (!known[g]) throw Error(ErrorCode::InvalidAction, "element " + group->name(g) + " is not generated");
    all.push_back(std::move(*known[g]));
  }
  return QuiverAction(std::move(group), std::move(quiver), field, std::move(all));
}

ElementAction QuiverAction::from_blocks(const GradedQuiver& q, const Field& field, std::vector<VertexId> vertex_perm,
                                        const std::vector<BlockMatrix>& blocks) {
  if (vertex_perm.size() != q.vertex_count()) throw Error(ErrorCode::InvalidAction, "vertex permutation has the wrong size");
  for (VertexId v : vertex_perm) {
    if (v >= q.vertex_count()) throw Error(ErrorCode::InvalidAction, "vertex permutation leaves the quiver");
  }
  ElementAction out;
  out.vertex_perm = std::move(vertex_perm);
  out.arrow_images.assign(q.arrow_count(), {});
  for (const auto& b : blocks) {
    if (b.src >= q.vertex_count() || b.tgt >= q.vertex_count()) throw Error(ErrorCode::InvalidAction, "block names an unknown vertex");
    auto cols = q.arrows_between(b.src, b.tgt);
    auto rows = q.arrows_between(out.vertex_perm[b.src], out.vertex_perm[b.tgt]);
    if (b.entries.size() != rows.size()) {
      throw Error(ErrorCode::InvalidAction, "block " + pair_label(q, b.src, b.tgt) + " needs " + std::to_string(rows.size()) +
                                                " rows, found " + std::to_string(b.entries.size()));
    }
    for (const auto& row : b.entries) {
      if (row.size() != cols.size()) {
        throw Error(ErrorCode::InvalidAction, "block " + pair_label(q, b.src, b.tgt) + " needs " +
                                                  std::to_string(cols.size()) + " columns");
      }
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      ArrowCombination image;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!b.entries[r][c].is_zero()) image.emplace_back(rows[r], b.entries[r][c]);
      }
      out.arrow_images[cols[c]] = sorted_combination(std::move(image));
    }
  }
  (void)field;
  return out;
}

DenseMatrix QuiverAction::block(GroupElement g, VertexId i, VertexId j) const {
  auto cols = quiver_->arrows_between(i, j);
  auto rows = quiver_->arrows_between(vertex_image(g, i), vertex_image(g, j));
  DenseMatrix m(rows.size(), std::vector<Scalar>(cols.size(), field_.zero()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [b, coeff] : arrow_image(g, cols[c])) {
      auto it = std::find(rows.begin(), rows.end(), b);
      if (it != rows.end()) m[static_cast<std::size_t>(it - rows.begin())][c] = coeff;
    }
  }
  return m;
}

ActionReport validate_action(const QuiverAction& action) {
  ActionReport report;
  const auto& q = *action.quiver();
  const auto& group = *action.group();
  const Field& f = action.field();
  bool shapes_ok = true;
  for (GroupElement g = 0; g < group.order(); ++g) {
    const auto& data = action.element(g);
    const std::string who = "element " + group.name(g);
    std::vector<bool> hit(q.vertex_count(), false);
    bool perm_ok = data.vertex_perm.size() == q.vertex_count();
    for (VertexId v : data.vertex_perm) {
      if (v >= q.vertex_count() || hit[v]) {
        perm_ok = false;
        break;
      }
      hit[v] = true;
    }
    if (!perm_ok) {
      report.failures.push_back(who + ": vertex map is not a permutation");
      shapes_ok = false;
      continue;
    }
    if (data.arrow_images.size() != q.arrow_count()) {
      report.failures.push_back(who + ": wrong number of arrow images");
      shapes_ok = false;
      continue;
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arrow = q.arrow(a);
      VertexId gi = data.vertex_perm[arrow.src];
      VertexId gj = data.vertex_perm[arrow.tgt];
      for (const auto& [b, c] : data.arrow_images[a]) {
        if (b >= q.arrow_count()) {
          report.failures.push_back(who + ": image of " + arrow.name + " names an unknown arrow");
          continue;
        }
        const Arrow& target = q.arrow(b);
        if (target.src != gi || target.tgt != gj) {
          report.failures.push_back(who + ": block compatibility fails, " + arrow.name + " (" +
                                    pair_label(q, arrow.src, arrow.tgt) + ") has a term on " + target.name + " (" +
                                    pair_label(q, target.src, target.tgt) + "), expected arrows " + pair_label(q, gi, gj));
        }
        if (target.degree != arrow.degree) {
          report.failures.push_back(who + ": degree not preserved, " + arrow.name + " has degree " +
                                    std::to_string(arrow.degree) + " but its image involves " + target.name +
                                    " of degree " + std::to_string(target.degree));
        }
      }
    }
    for (VertexId i = 0; i < q.vertex_count(); ++i) {
      for (VertexId j = 0; j < q.vertex_count(); ++j) {
        if (q.arrows_between(i, j).empty()) continue;
        if (!inverse(f, action.block(g, i, j))) {
          report.failures.push_back(who + ": arrow block " + pair_label(q, i, j) + " is not invertible");
        }
      }
    }
  }
  if (!shapes_ok) return report;

  const auto& id = action.element(group.identity());
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (id.vertex_perm[v] != v) report.failures.push_back("identity moves vertex " + q.vertex_name(v));
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    ArrowCombination expected{{a, f.one()}};
    if (id.arrow_images[a] != expected) report.failures.push_back("identity moves arrow " + q.arrow(a).name);
  }
  for (GroupElement g = 0; g < group.order(); ++g) {
    for (GroupElement h = 0; h < group.order(); ++h) {
      ElementAction composite = compose_actions(q, f, action.element(g), action.element(h));
      const auto& gh = action.element(group.multiply(g, h));
      if (composite.vertex_perm != gh.vertex_perm) {
        report.failures.push_back("homomorphism fails on vertices for (" + group.name(g) + ", " + group.name(h) + ")");
      }
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (composite.arrow_images[a] != sorted_combination(gh.arrow_images[a])) {
          report.failures.push_back("homomorphism fails on arrow " + q.arrow(a).name + " for (" + group.name(g) + ", " +
                                    group.name(h) + ")");
        }
      }
    }
  }
  return report;
}

AlgElement act_on_path(const QuiverAction& action, GroupElement g, const Path& p) {
  const auto& quiver = action.quiver();
  const Field& f = action.field();
  if (p.is_trivial()) return AlgElement::of_path(quiver, f, Path::trivial(action.vertex_image(g, p.src)));
  AlgElement out = AlgElement::unit(quiver, f);
  bool first = true;
  for (ArrowId a : p.arrows) {
    AlgElement image(quiver, f);
    for (const auto& [b, c] : action.arrow_image(g, a)) image.add_term(Path::of_arrow(*quiver, b), c);
    out = first ? std::move(image) : out * image;
    first = false;
    if (out.is_zero()) break;
  }
  return out;
}

AlgElement act(const QuiverAction& action, GroupElement g, const AlgElement& x) {
  if (!same_quiver(x.quiver(), action.quiver())) throw Error(ErrorCode::QuiverMismatch, "element does not live on the acted quiver");
  AlgElement out(action.quiver(), action.field());
  for (const auto& [p, c] : x.terms()) out += act_on_path(action, g, p) * c;
  return out;
}

bool is_potential_invariant(const Potential& w, const QuiverAction& action) {
  AlgElement rep = w.representative();
  for (GroupElement g = 0; g < action.group()->order(); ++g) {
    if (!(Potential::from_element(act(action, g, rep)) == w)) return false;
  }
  return true;
}

ExtendedAction extend_to_ginzburg(const QuiverAction& action, const GinzburgPresentation& presentation) {
  const DoubledQuiver& doubled = presentation.doubled();
  if (!same_quiver(doubled.base, action.quiver())) {
    throw Error(ErrorCode::QuiverMismatch, "presentation and action use different quivers");
  }
  if (!is_potential_invariant(presentation.potential(), action)) {
    throw Error(ErrorCode::NotInvariantPotential, "potential " + presentation.potential().to_string() +
                                                      " is not invariant under the group action");
  }
  const auto& q = *action.quiver();
  const auto& bar = doubled.quiver;
  const auto& group = *action.group();
  const Field& f = action.field();

  std::vector<ElementAction> elements;
  for (GroupElement g = 0; g < group.order(); ++g) {
    ElementAction data;
    data.vertex_perm = action.element(g).vertex_perm;
    data.arrow_images.assign(bar->arrow_count(), {});
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
      ArrowCombination lifted;
      for (const auto& [b, c] : action.arrow_image(g, a)) lifted.emplace_back(doubled.original[b], c);
      data.arrow_images[doubled.original[a]] = sorted_combination(std::move(lifted));
    }
    for (VertexId i = 0; i < q.vertex_count(); ++i) {
      for (VertexId j = 0; j < q.vertex_count(); ++j) {
        auto cols = q.arrows_between(i, j);
        if (cols.empty()) continue;
        auto rows = q.arrows_between(data.vertex_perm[i], data.vertex_perm[j]);
        auto inv = inverse(f, action.block(g, i, j));
        if (!inv) {
          throw Error(ErrorCode::InvalidAction, "element " + group.name(g) + ": arrow block " + pair_label(q, i, j) +
                                                    " is not invertible, so the stars cannot be transformed");
        }
        // Contragredient: ^g(a_c*) = sum_r (M^{-1})_{c r} b_r*.
        for (std::size_t c = 0; c < cols.size(); ++c) {
          ArrowCombination image;
          for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!(*inv)[c][r].is_zero()) image.emplace_back(doubled.star[rows[r]], (*inv)[c][r]);
          }
          data.arrow_images[doubled.star[cols[c]]] = sorted_combination(std::move(image));
        }
      }
    }
    for (VertexId i = 0; i < q.vertex_count(); ++i) {
      data.arrow_images[doubled.loop[i]] = {{doubled.loop[data.vertex_perm[i]], f.one()}};
    }
    elements.push_back(std::move(data));
  }

  ExtendedAction out{QuiverAction(action.group(), bar, f, std::move(elements)), {}};
  out.report.action_failures = validate_action(out.action).failures;
  for (GroupElement g = 0; g < group.order(); ++g) {
    for (ArrowId x = 0; x < bar->arrow_count(); ++x) {
      AlgElement gen = AlgElement::of_path(bar, f, Path::of_arrow(*bar, x));
      AlgElement lhs = presentation.apply(act(out.action, g, gen));
      AlgElement rhs = act(out.action, g, presentation.differential(x));
      AlgElement diff = lhs - rhs;
      ++out.report.checks;
      if (!diff.is_zero()) out.report.failures.push_back({bar->arrow(x).name, group.name(g), std::move(diff)});
    }
  }
  return out;
}

}  // namespace skewgin
