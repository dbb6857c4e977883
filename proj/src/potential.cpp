#include "skewgin/potential.hpp"

namespace skewgin {

int rotation_sign(const GradedQuiver& q, const Path& cycle, std::size_t k) {
  long head = 0;
  long tail = 0;
  for (std::size_t i = 0; i < cycle.arrows.size(); ++i) {
    (i < k ? head : tail) += q.arrow(cycle.arrows[i]).degree;
  }
  return ((head * tail) % 2 == 0) ? 1 : -1;
}

Path rotate(const GradedQuiver& q, const Path& cycle, std::size_t k) {
  if (cycle.is_trivial() || k % cycle.length() == 0) return cycle;
  k %= cycle.length();
  Path out;
  out.arrows.assign(cycle.arrows.begin() + static_cast<long>(k), cycle.arrows.end());
  out.arrows.insert(out.arrows.end(), cycle.arrows.begin(), cycle.arrows.begin() + static_cast<long>(k));
  out.src = out.tgt = q.arrow(out.arrows.front()).src;
  return out;
}

void Potential::add_cycle(const Path& cycle, const Scalar& coeff) {
  if (!cycle.is_cycle()) {
    throw Error(ErrorCode::NotACycle, "'" + skewgin::to_string(*quiver_, cycle) + "' is not a cycle");
  }
  if (coeff.is_zero()) return;
  const auto& q = *quiver_;
  std::optional<Path> best;
  int best_sign = 1;
  bool self_cancelling = false;
  std::size_t n = std::max<std::size_t>(cycle.length(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    Path r = rotate(q, cycle, k);
    int s = rotation_sign(q, cycle, k);
    if (!best || r < *best) {
      best = r;
      best_sign = s;
      self_cancelling = false;
    } else if (r == *best && s != best_sign) {
      self_cancelling = true;
    }
  }
  // A rotation taking the word to itself with sign -1 forces w = -w.
  if (self_cancelling && field_.characteristic() != 2) return;
  Scalar c = best_sign == 1 ? coeff : -coeff;
  auto [it, inserted] = terms_.try_emplace(*best, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Potential Potential::canonicalize(QuiverPtr quiver, Field field, const std::vector<RawTerm>& raw) {
  Potential w(std::move(quiver), field);
  for (const auto& [coeff, cycle] : raw) w.add_cycle(cycle, coeff);
  return w;
}

Potential Potential::from_element(const AlgElement& x) {
  Potential w(x.quiver(), x.field());
  for (const auto& [p, c] : x.terms()) w.add_cycle(p, c);
  return w;
}

AlgElement Potential::representative() const {
  AlgElement x(quiver_, field_);
  for (const auto& [p, c] : terms_) x.add_term(p, c);
  return x;
}

std::optional<std::size_t> Potential::common_length() const {
  std::optional<std::size_t> len;
  for (const auto& [p, c] : terms_) {
    if (len && *len != p.length()) return std::nullopt;
    len = p.length();
  }
  return len.value_or(0);
}

Potential& Potential::operator+=(const Potential& rhs) {
  if (!(field_ == rhs.field_)) throw Error(ErrorCode::FieldMismatch, "potentials over different fields");
  if (!same_quiver(quiver_, rhs.quiver_)) throw Error(ErrorCode::QuiverMismatch, "potentials on different quivers");
  for (const auto& [p, c] : rhs.terms_) add_cycle(p, c);
  return *this;
}

Potential Potential::operator-(const Potential& rhs) const {
  Potential out = *this;
  Potential neg = rhs;
  neg *= field_.from_int(-1);
  out += neg;
  return out;
}

Potential& Potential::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

std::string Potential::to_string() const { return representative().to_string(); }

AlgElement cyclic_derivative(const Potential& w, ArrowId a) {
  const auto& q = *w.quiver();
  if (a >= q.arrow_count()) throw Error(ErrorCode::UnknownArrow, "arrow id " + std::to_string(a) + " out of range");
  AlgElement out(w.quiver(), w.field());
  const Arrow& arrow = q.arrow(a);
  for (const auto& [cycle, coeff] : w.terms()) {
    for (std::size_t k = 0; k < cycle.length(); ++k) {
      if (cycle.arrows[k] != a) continue;
      Path r = rotate(q, cycle, k);
      Path rest{arrow.tgt, arrow.src, std::vector<ArrowId>(r.arrows.begin() + 1, r.arrows.end())};
      Scalar c = rotation_sign(q, cycle, k) == 1 ? coeff : -coeff;
      out.add_term(rest, c);
    }
  }
  return out;
}

std::optional<int> degree_of(const Potential& w) {
  std::optional<int> deg;
  for (const auto& [p, c] : w.terms()) {
    int d = degree(*w.quiver(), p);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0);
}

}  // namespace skewgin
