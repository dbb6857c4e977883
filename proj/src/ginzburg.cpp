#include "skewgin/ginzburg.hpp"

#include "skewgin/linalg.hpp"

namespace skewgin {

GeneratorKind DoubledQuiver::kind(ArrowId bar_arrow) const {
  for (std::size_t a = 0; a < original.size(); ++a) {
    if (original[a] == bar_arrow) return GeneratorKind::original;
    if (star[a] == bar_arrow) return GeneratorKind::star;
  }
  return GeneratorKind::loop;
}

std::size_t DoubledQuiver::origin(ArrowId bar_arrow) const {
  for (std::size_t a = 0; a < original.size(); ++a) {
    if (original[a] == bar_arrow || star[a] == bar_arrow) return a;
  }
  for (std::size_t v = 0; v < loop.size(); ++v) {
    if (loop[v] == bar_arrow) return v;
  }
  throw Error(ErrorCode::UnknownArrow, "arrow id " + std::to_string(bar_arrow) + " is not in the doubled quiver");
}

AlgElement DoubledQuiver::lift(const AlgElement& x) const {
  if (!same_quiver(x.quiver(), base)) throw Error(ErrorCode::QuiverMismatch, "element does not live on the base quiver");
  AlgElement out(quiver, x.field());
  for (const auto& [p, c] : x.terms()) {
    Path lifted{p.src, p.tgt, {}};
    for (ArrowId a : p.arrows) lifted.arrows.push_back(original[a]);
    out.add_term(lifted, c);
  }
  return out;
}

DoubledQuiver double_quiver(QuiverPtr base, int d) {
  if (d < 3) throw Error(ErrorCode::InvalidArgument, "Calabi-Yau dimension must be at least 3");
  std::vector<GradedQuiver::ArrowSpec> specs;
  for (const auto& a : base->arrows()) {
    const auto& src = base->vertex_name(a.src);
    const auto& tgt = base->vertex_name(a.tgt);
    specs.push_back({a.name, src, tgt, a.degree});
    specs.push_back({a.name + "*", tgt, src, 2 - d - a.degree});
  }
  for (const auto& v : base->vertex_names()) specs.push_back({"c_" + v, v, v, 1 - d});
  auto bar = std::make_shared<const GradedQuiver>(base->vertex_names(), specs);

  DoubledQuiver out;
  out.base = base;
  out.quiver = bar;
  out.cy_dimension = d;
  for (const auto& a : base->arrows()) {
    out.original.push_back(bar->arrow_id(a.name));
    out.star.push_back(bar->arrow_id(a.name + "*"));
  }
  for (const auto& v : base->vertex_names()) out.loop.push_back(bar->arrow_id("c_" + v));
  return out;
}

GinzburgPresentation::GinzburgPresentation(DoubledQuiver doubled, Potential potential,
                                           std::vector<AlgElement> differential)
    : doubled_(std::move(doubled)), potential_(std::move(potential)), differential_(std::move(differential)) {}

void GinzburgPresentation::override_differential(ArrowId bar_arrow, AlgElement value) {
  if (!same_quiver(value.quiver(), doubled_.quiver)) {
    throw Error(ErrorCode::QuiverMismatch, "differential override must live on the doubled quiver");
  }
  differential_.at(bar_arrow) = std::move(value);
}

AlgElement GinzburgPresentation::apply(const AlgElement& x) const {
  const auto& bar = doubled_.quiver;
  if (!same_quiver(x.quiver(), bar)) throw Error(ErrorCode::QuiverMismatch, "element does not live on the doubled quiver");
  const Field& f = x.field();
  AlgElement out(bar, f);
  for (const auto& [p, c] : x.terms()) {
    int prefix_degree = 0;
    for (std::size_t k = 0; k < p.length(); ++k) {
      ArrowId a = p.arrows[k];
      const AlgElement& da = differential_[a];
      if (!da.is_zero()) {
        AlgElement left = k == 0 ? AlgElement::of_path(bar, f, Path::trivial(p.src))
                                 : AlgElement::of_path(bar, f, Path{p.src, bar->arrow(p.arrows[k - 1]).tgt,
                                                                     {p.arrows.begin(), p.arrows.begin() + static_cast<long>(k)}});
        AlgElement right = k + 1 == p.length()
                               ? AlgElement::of_path(bar, f, Path::trivial(p.tgt))
                               : AlgElement::of_path(bar, f, Path{bar->arrow(p.arrows[k + 1]).src, p.tgt,
                                                                  {p.arrows.begin() + static_cast<long>(k) + 1, p.arrows.end()}});
        Scalar sign = (prefix_degree % 2 == 0) ? c : -c;
        out += (left * da * right) * sign;
      }
      prefix_degree += bar->arrow(a).degree;
    }
  }
  return out;
}

GinzburgPresentation ginzburg(QuiverPtr base, const Potential& w, int d) {
  if (!same_quiver(w.quiver(), base)) throw Error(ErrorCode::QuiverMismatch, "potential does not live on the quiver");
  auto deg = degree_of(w);
  if (!w.is_zero() && (!deg || *deg != 3 - d)) {
    throw Error(ErrorCode::DegreeMismatch, "potential must be homogeneous of degree " + std::to_string(3 - d) +
                                               (deg ? ", found " + std::to_string(*deg) : ", found an inhomogeneous one"));
  }
  DoubledQuiver doubled = double_quiver(base, d);
  const auto& bar = doubled.quiver;
  const Field& f = w.field();
  std::vector<AlgElement> diff(bar->arrow_count(), AlgElement(bar, f));

  for (ArrowId a = 0; a < base->arrow_count(); ++a) {
    diff[doubled.star[a]] = doubled.lift(cyclic_derivative(w, a));
  }
  for (VertexId i = 0; i < base->vertex_count(); ++i) {
    AlgElement dc(bar, f);
    for (ArrowId a = 0; a < base->arrow_count(); ++a) {
      const Arrow& arrow = base->arrow(a);
      ArrowId x = doubled.original[a];
      ArrowId xs = doubled.star[a];
      if (arrow.src == i) dc.add_term(Path::from_arrows(*bar, {x, xs}), f.one());
      if (arrow.tgt == i) dc.add_term(Path::from_arrows(*bar, {xs, x}), -f.one());
    }
    diff[doubled.loop[i]] = std::move(dc);
  }
  return GinzburgPresentation(std::move(doubled), w, std::move(diff));
}

std::string differential_rule(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::original: return "differential vanishes on the arrows of Q";
    case GeneratorKind::star: return "differential rule for a*: d(a*) = cyclic derivative of W along a";
    case GeneratorKind::loop: return "differential rule for c_i: d(c_i) = sum_{a: i->.} a a* - sum_{a: .->i} a* a";
  }
  return "";
}

DSquaredReport check_d_squared(const GinzburgPresentation& p) {
  DSquaredReport report;
  const auto& bar = *p.doubled().quiver;
  for (ArrowId g = 0; g < bar.arrow_count(); ++g) {
    const AlgElement& dg = p.differential(g);
    AlgElement dd = p.apply(dg);
    GeneratorKind kind = p.doubled().kind(g);
    if (!dd.is_zero()) report.violations.push_back({bar.arrow(g).name, differential_rule(kind), dd});
    if (!dg.is_zero()) {
      auto deg = dg.homogeneous_degree();
      int expected = bar.arrow(g).degree + 1;
      if (!deg || *deg != expected) {
        report.degree_violations.push_back(
            {bar.arrow(g).name, bar.arrow(g).degree, deg ? std::to_string(*deg) : std::string("inhomogeneous")});
      }
    }
  }
  return report;
}

std::vector<AlgElement> jacobian_relations(const Potential& w) {
  std::vector<AlgElement> out;
  for (ArrowId a = 0; a < w.quiver()->arrow_count(); ++a) {
    AlgElement r = cyclic_derivative(w, a);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<AlgElement> ideal_spanning_set(const std::vector<AlgElement>& relations, std::size_t length) {
  std::vector<AlgElement> out;
  if (relations.empty()) return out;
  const auto& quiver = relations.front().quiver();
  const Field& f = relations.front().field();
  for (const auto& r : relations) {
    auto rlen = r.homogeneous_length();
    if (!rlen) throw Error(ErrorCode::NotLengthHomogeneous, "relation " + r.to_string() + " mixes lengths");
    if (*rlen > length) continue;
    std::size_t free = length - *rlen;
    for (std::size_t left = 0; left <= free; ++left) {
      auto lefts = paths_of_length(*quiver, left);
      auto rights = paths_of_length(*quiver, free - left);
      for (const auto& p : lefts) {
        AlgElement pr = AlgElement::of_path(quiver, f, p) * r;
        if (pr.is_zero()) continue;
        for (const auto& q : rights) {
          AlgElement prq = pr * AlgElement::of_path(quiver, f, q);
          if (!prq.is_zero()) out.push_back(std::move(prq));
        }
      }
    }
  }
  return out;
}

std::size_t ideal_dimension(const std::vector<AlgElement>& relations, std::size_t length) {
  if (relations.empty()) return 0;
  TermIndex<Path> columns;
  EchelonBasis basis(relations.front().field());
  for (const auto& x : ideal_spanning_set(relations, length)) basis.insert(columns.vectorize(x.terms()));
  return basis.rank();
}

std::vector<std::size_t> jacobian_truncation(const Potential& w, std::size_t max_length) {
  if (!w.quiver()->trivially_graded()) {
    throw Error(ErrorCode::DegreeMismatch, "Jacobian truncation needs a trivially graded quiver");
  }
  if (!w.common_length()) throw Error(ErrorCode::NotLengthHomogeneous, "potential mixes cycle lengths");
  auto relations = jacobian_relations(w);
  std::vector<std::size_t> dims;
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::size_t total = paths_of_length(*w.quiver(), len).size();
    dims.push_back(total - ideal_dimension(relations, len));
  }
  return dims;
}

}  // namespace skewgin
