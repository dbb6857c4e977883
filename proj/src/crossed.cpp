#include "skewgin/crossed.hpp"

namespace skewgin {

const AlgElement& CrossedContext::image(GroupElement g, const Path& p) const {
  auto key = std::make_pair(g, p);
  auto it = images_.find(key);
  if (it != images_.end()) return it->second;
  return images_.emplace(std::move(key), act_on_path(action_, g, p)).first->second;
}

std::vector<CrossedKey> CrossedContext::basis(std::size_t length) const {
  std::vector<CrossedKey> out;
  for (const auto& p : paths_of_length(*quiver(), length)) {
    for (GroupElement g = 0; g < group()->order(); ++g) out.emplace_back(p, g);
  }
  return out;
}

CrossedElement CrossedElement::of(ContextPtr ctx, const Path& p, GroupElement g) {
  CrossedElement out(std::move(ctx));
  out.add_term({p, g}, out.ctx_->field().one());
  return out;
}

CrossedElement CrossedElement::from_path_algebra(ContextPtr ctx, const AlgElement& x, GroupElement g) {
  if (!same_quiver(x.quiver(), ctx->quiver())) throw Error(ErrorCode::QuiverMismatch, "element does not live on the crossed quiver");
  CrossedElement out(std::move(ctx));
  for (const auto& [p, c] : x.terms()) out.add_term({p, g}, c);
  return out;
}

CrossedElement CrossedElement::group_element(ContextPtr ctx, GroupElement g) {
  CrossedElement out(std::move(ctx));
  for (VertexId v = 0; v < out.ctx_->quiver()->vertex_count(); ++v) out.add_term({Path::trivial(v), g}, out.ctx_->field().one());
  return out;
}

CrossedElement CrossedElement::at_vertex(ContextPtr ctx, VertexId v, const GroupAlgebraElement& x) {
  CrossedElement out(std::move(ctx));
  for (const auto& [h, c] : x.terms()) out.add_term({Path::trivial(v), h}, c);
  return out;
}

CrossedElement CrossedElement::unit(ContextPtr ctx) {
  GroupElement id = ctx->group()->identity();
  return group_element(std::move(ctx), id);
}

Scalar CrossedElement::coefficient(const CrossedKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? ctx_->field().zero() : it->second;
}

void CrossedElement::add_term(const CrossedKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

CrossedElement& CrossedElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

CrossedElement CrossedElement::operator-() const {
  CrossedElement out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

CrossedElement operator*(const CrossedElement& x, const CrossedElement& y) { return crossed_multiply(x, y); }

CrossedElement crossed_multiply(const CrossedElement& x, const CrossedElement& y) {
  if (x.context() != y.context()) throw Error(ErrorCode::QuiverMismatch, "elements belong to different crossed products");
  const auto& ctx = x.context();
  const auto& group = *ctx->group();
  CrossedElement out(ctx);
  for (const auto& [kx, cx] : x.terms()) {
    const auto& [p, g] = kx;
    for (const auto& [ky, cy] : y.terms()) {
      const auto& [q, h] = ky;
      GroupElement gh = group.multiply(g, h);
      Scalar c = cx * cy;
      for (const auto& [r, cr] : ctx->image(g, q).terms()) {
        auto pr = compose(p, r);
        if (pr) out.add_term({std::move(*pr), gh}, c * cr);
      }
    }
  }
  return out;
}

std::optional<std::size_t> CrossedElement::homogeneous_length() const {
  if (terms_.empty()) return 0;
  std::size_t len = terms_.begin()->first.first.length();
  for (const auto& [k, c] : terms_) {
    if (k.first.length() != len) return std::nullopt;
  }
  return len;
}

std::optional<int> CrossedElement::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  const auto& q = *ctx_->quiver();
  int deg = degree(q, terms_.begin()->first.first);
  for (const auto& [k, c] : terms_) {
    if (degree(q, k.first) != deg) return std::nullopt;
  }
  return deg;
}

std::string key_to_string(const CrossedContext& ctx, const CrossedKey& key) {
  return to_string(*ctx.quiver(), key.first) + " * " + ctx.group()->name(key.second);
}

std::string CrossedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") " + key_to_string(*ctx_, k);
  }
  return out;
}

std::vector<Commutator> commutator_basis(const ContextPtr& ctx, std::size_t length) {
  std::vector<Commutator> out;
  for (std::size_t left = 0; 2 * left <= length; ++left) {
    auto us = ctx->basis(left);
    auto vs = ctx->basis(length - left);
    const bool same = 2 * left == length;
    for (std::size_t i = 0; i < us.size(); ++i) {
      CrossedElement u = CrossedElement::of(ctx, us[i]);
      for (std::size_t j = same ? i + 1 : 0; j < vs.size(); ++j) {
        CrossedElement v = CrossedElement::of(ctx, vs[j]);
        CrossedElement value = u * v - v * u;
        if (!value.is_zero()) out.push_back({us[i], vs[j], std::move(value)});
      }
    }
  }
  return out;
}

HC0Component::HC0Component(ContextPtr ctx, std::size_t length)
    : ctx_(std::move(ctx)), length_(length), columns_(ctx_->basis(length)), commutators_(ctx_->field()) {
  for (const auto& c : commutator_basis(ctx_, length_)) commutators_.insert(vectorize(c.value));
}

SparseVector HC0Component::vectorize(const CrossedElement& x) const {
  SparseVector v;
  for (const auto& [k, c] : x.terms()) {
    auto col = columns_.find(k);
    if (!col) throw Error(ErrorCode::InvalidArgument, "term " + key_to_string(*ctx_, k) + " has the wrong length");
    v.emplace_back(*col, c);
  }
  return normalized(std::move(v));
}

bool HC0Component::in_commutator_span(const CrossedElement& x) const { return commutators_.contains(vectorize(x)); }

HC0Reduction hc0_reduce(const CrossedElement& x, const CrossedElement& e) {
  const auto& ctx = x.context();
  if (e.context() != ctx) throw Error(ErrorCode::QuiverMismatch, "idempotent belongs to another crossed product");
  if (!(e * e == e)) throw Error(ErrorCode::InvalidArgument, "corner element is not idempotent");
  auto len = x.homogeneous_length();
  if (!len) throw Error(ErrorCode::NotLengthHomogeneous, "element mixes path lengths");

  TermIndex<CrossedKey> columns(ctx->basis(*len));
  auto vectorize = [&](const CrossedElement& y) {
    SparseVector v;
    for (const auto& [k, c] : y.terms()) v.emplace_back(*columns.find(k), c);
    return normalized(std::move(v));
  };
  auto devectorize = [&](const SparseVector& v) {
    CrossedElement y(ctx);
    for (const auto& [col, c] : v) y.add_term(columns.key(col), c);
    return y;
  };

  EchelonBasis corner(ctx->field());
  for (const auto& key : ctx->basis(*len)) {
    CrossedElement y = e * CrossedElement::of(ctx, key) * e;
    if (!y.is_zero()) corner.insert(vectorize(y));
  }
  auto corner_rows = corner.reduced_rows();

  LinearSolver solver(ctx->field());
  for (const auto& row : corner_rows) solver.add(row);
  auto commutators = commutator_basis(ctx, *len);
  for (const auto& c : commutators) solver.add(vectorize(c.value));

  auto combo = solver.solve(vectorize(x));
  if (!combo) throw Error(ErrorCode::NoSolution, "class of " + x.to_string() + " has no representative in the corner");

  HC0Reduction out{CrossedElement(ctx), {}, corner_rows.size(), commutators.size()};
  SparseVector rep;
  for (const auto& [id, c] : *combo) {
    if (id < corner_rows.size()) {
      add_scaled(rep, c, corner_rows[id]);
    } else {
      const auto& comm = commutators[id - corner_rows.size()];
      out.certificate.push_back({comm.left, comm.right, c});
    }
  }
  out.representative = devectorize(rep);
  if (!verify_certificate(x, out)) throw Error(ErrorCode::NoSolution, "commutator certificate failed to re-expand");
  return out;
}

bool verify_certificate(const CrossedElement& x, const HC0Reduction& r) {
  const auto& ctx = x.context();
  CrossedElement sum(ctx);
  for (const auto& t : r.certificate) {
    CrossedElement u = CrossedElement::of(ctx, t.left);
    CrossedElement v = CrossedElement::of(ctx, t.right);
    sum += (u * v - v * u) * t.coeff;
  }
  return sum == x - r.representative;
}

}  // namespace skewgin
