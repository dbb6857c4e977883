#include "skewgin/quiver.hpp"

#include <algorithm>
#include <set>

namespace skewgin {

GradedQuiver::GradedQuiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (!vertex_index_.emplace(vertices_[v], v).second) {
      throw Error(ErrorCode::ValidationError, "duplicate vertex '" + vertices_[v] + "'");
    }
  }
  std::vector<ArrowSpec> sorted = arrows;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  for (const auto& spec : sorted) {
    if (spec.name.empty()) throw Error(ErrorCode::ValidationError, "arrow with empty name");
    if (arrow_index_.count(spec.name)) throw Error(ErrorCode::ValidationError, "duplicate arrow '" + spec.name + "'");
    auto src = find_vertex(spec.src);
    auto tgt = find_vertex(spec.tgt);
    if (!src) throw Error(ErrorCode::UnknownVertex, "arrow '" + spec.name + "' starts at unknown vertex '" + spec.src + "'");
    if (!tgt) throw Error(ErrorCode::UnknownVertex, "arrow '" + spec.name + "' ends at unknown vertex '" + spec.tgt + "'");
    arrow_index_.emplace(spec.name, arrows_.size());
    arrows_.push_back(Arrow{spec.name, *src, *tgt, spec.degree});
  }
}

std::optional<VertexId> GradedQuiver::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> GradedQuiver::find_arrow(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

VertexId GradedQuiver::vertex(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex named '" + name + "'");
}

ArrowId GradedQuiver::arrow_id(const std::string& name) const {
  if (auto a = find_arrow(name)) return *a;
  throw Error(ErrorCode::UnknownArrow, "no arrow named '" + name + "'");
}

std::vector<ArrowId> GradedQuiver::arrows_between(VertexId i, VertexId j) const {
  std::vector<ArrowId> out;
  for (ArrowId a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].src == i && arrows_[a].tgt == j) out.push_back(a);
  }
  return out;
}

bool GradedQuiver::trivially_graded() const {
  return std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.degree == 0; });
}

bool GradedQuiver::operator==(const GradedQuiver& other) const {
  if (vertices_ != other.vertices_ || arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& x = arrows_[a];
    const auto& y = other.arrows_[a];
    if (x.name != y.name || x.src != y.src || x.tgt != y.tgt || x.degree != y.degree) return false;
  }
  return true;
}

Path Path::from_arrows(const GradedQuiver& q, const std::vector<ArrowId>& arrows) {
  if (arrows.empty()) throw Error(ErrorCode::InvalidArgument, "use Path::trivial for trivial paths");
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k) {
    if (q.arrow(arrows[k]).tgt != q.arrow(arrows[k + 1]).src) {
      throw Error(ErrorCode::InvalidArgument,
                  "arrows '" + q.arrow(arrows[k]).name + "' and '" + q.arrow(arrows[k + 1]).name + "' do not compose");
    }
  }
  return Path{q.arrow(arrows.front()).src, q.arrow(arrows.back()).tgt, arrows};
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = arrows.size() <=> other.arrows.size(); c != 0) return c;
  if (auto c = arrows <=> other.arrows; c != 0) return c;
  if (auto c = src <=> other.src; c != 0) return c;
  return tgt <=> other.tgt;
}

int degree(const GradedQuiver& q, const Path& p) {
  int total = 0;
  for (ArrowId a : p.arrows) total += q.arrow(a).degree;
  return total;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.tgt != q.src) return std::nullopt;
  Path out{p.src, q.tgt, p.arrows};
  out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
  return out;
}

std::string to_string(const GradedQuiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.src);
  std::string out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k > 0) out += ' ';
    out += q.arrow(p.arrows[k]).name;
  }
  return out;
}

std::vector<Path> paths_of_length(const GradedQuiver& q, std::size_t length) {
  std::vector<Path> current;
  for (VertexId v = 0; v < q.vertex_count(); ++v) current.push_back(Path::trivial(v));
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (const auto& p : current) {
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).src != p.tgt) continue;
        Path extended{p.tgt, q.arrow(a).tgt, p.arrows};
        extended.src = p.src;
        extended.arrows.push_back(a);
        next.push_back(std::move(extended));
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::vector<Path> basis_up_to(const GradedQuiver& q, std::size_t max_length) {
  std::vector<Path> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    auto layer = paths_of_length(q, len);
    if (layer.empty()) break;
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) { return a == b || (a && b && *a == *b); }

AlgElement AlgElement::of_path(QuiverPtr quiver, Field field, const Path& p) {
  return of_path(std::move(quiver), field, p, field.one());
}

AlgElement AlgElement::of_path(QuiverPtr quiver, Field field, const Path& p, const Scalar& coeff) {
  AlgElement x(std::move(quiver), field);
  x.add_term(p, coeff);
  return x;
}

AlgElement AlgElement::unit(QuiverPtr quiver, Field field) {
  AlgElement x(quiver, field);
  for (VertexId v = 0; v < quiver->vertex_count(); ++v) x.add_term(Path::trivial(v), field.one());
  return x;
}

Scalar AlgElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? field_.zero() : it->second;
}

void AlgElement::add_term(const Path& p, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgElement::check_compatible(const AlgElement& rhs) const {
  if (!(field_ == rhs.field_)) throw Error(ErrorCode::FieldMismatch, "path algebra elements over different fields");
  if (!same_quiver(quiver_, rhs.quiver_)) throw Error(ErrorCode::QuiverMismatch, "path algebra elements over different quivers");
}

AlgElement& AlgElement::operator+=(const AlgElement& rhs) {
  check_compatible(rhs);
  for (const auto& [p, c] : rhs.terms_) add_term(p, c);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& rhs) {
  check_compatible(rhs);
  for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
  return *this;
}

AlgElement& AlgElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

AlgElement AlgElement::operator-() const {
  AlgElement out = *this;
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

AlgElement operator*(const AlgElement& x, const AlgElement& y) {
  x.check_compatible(y);
  AlgElement out(x.quiver_, x.field_);
  for (const auto& [p, a] : x.terms_) {
    for (const auto& [q, b] : y.terms_) {
      if (auto pq = compose(p, q)) out.add_term(*pq, a * b);
    }
  }
  return out;
}

AlgElement multiply(const AlgElement& x, const AlgElement& y) { return x * y; }

bool AlgElement::operator==(const AlgElement& rhs) const {
  return field_ == rhs.field_ && same_quiver(quiver_, rhs.quiver_) && terms_ == rhs.terms_;
}

std::optional<int> AlgElement::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [p, c] : terms_) {
    int d = degree(*quiver_, p);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0);
}

std::optional<std::size_t> AlgElement::homogeneous_length() const {
  std::optional<std::size_t> len;
  for (const auto& [p, c] : terms_) {
    if (len && *len != p.length()) return std::nullopt;
    len = p.length();
  }
  return len.value_or(0);
}

std::string AlgElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    std::string coeff = c.to_string();
    if (!first) out += " + ";
    first = false;
    out += "(" + coeff + ")*" + skewgin::to_string(*quiver_, p);
  }
  return out;
}

}  // namespace skewgin
