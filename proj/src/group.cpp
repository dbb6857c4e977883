#include "skewgin/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "skewgin/linalg.hpp"

namespace skewgin {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorCode::NoIdentity, "empty group");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw Error(ErrorCode::ValidationError, "duplicate group element names");
  }
  if (table_.size() != n) throw Error(ErrorCode::NotLatinSquare, "table must have one row per element");
  for (std::size_t g = 0; g < n; ++g) {
    if (table_[g].size() != n) throw Error(ErrorCode::NotLatinSquare, "row " + names_[g] + " has the wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t v = table_[g][h];
      if (v >= n || seen[v]) throw Error(ErrorCode::NotLatinSquare, "row " + names_[g] + " repeats or leaves the group");
      seen[v] = true;
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    std::vector<bool> seen(n, false);
    for (std::size_t g = 0; g < n; ++g) {
      if (seen[table_[g][h]]) throw Error(ErrorCode::NotLatinSquare, "column " + names_[h] + " repeats an entry");
      seen[table_[g][h]] = true;
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity in the table");
  identity_ = *identity;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw Error(ErrorCode::NotAssociative,
                      "(" + names_[a] + names_[b] + ")" + names_[c] + " != " + names_[a] + "(" + names_[b] + names_[c] + ")");
        }
      }
    }
  }
  inverse_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table_[g][h] == identity_) inverse_[g] = h;
    }
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"e"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back(k == 0 ? "e" : (k == 1 ? "g" : "g" + std::to_string(k)));
    for (std::size_t m = 0; m < n; ++m) table[k][m] = (k + m) % n;
  }
  return FiniteGroup(std::move(names), std::move(table));
}

std::optional<GroupElement> FiniteGroup::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<GroupElement>(it - names_.begin());
}

std::size_t FiniteGroup::element_order(GroupElement g) const {
  std::size_t k = 1;
  for (GroupElement x = g; x != identity_; x = multiply(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const { return is_abelian(all()); }

bool FiniteGroup::is_abelian(const std::vector<GroupElement>& subset) const {
  for (GroupElement a : subset) {
    for (GroupElement b : subset) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_subgroup(const std::vector<GroupElement>& subset) const {
  std::set<GroupElement> s(subset.begin(), subset.end());
  if (!s.count(identity_)) return false;
  for (GroupElement a : s) {
    for (GroupElement b : s) {
      if (!s.count(multiply(a, b))) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::exponent(const std::vector<GroupElement>& subset) const {
  std::size_t e = 1;
  for (GroupElement g : subset) e = std::lcm(e, element_order(g));
  return e;
}

std::vector<GroupElement> FiniteGroup::all() const {
  std::vector<GroupElement> out(order());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

GroupAlgebra::GroupAlgebra(GroupPtr group, Field field) : group_(std::move(group)), field_(field) {
  if (!field_.is_unit(group_->order())) {
    throw Error(ErrorCode::BadCharacteristic,
                "characteristic of " + field_.describe() + " divides the group order " + std::to_string(group_->order()));
  }
}

GroupAlgebraElement GroupAlgebraElement::of(GroupPtr group, Field field, GroupElement g) {
  GroupAlgebraElement x(std::move(group), field);
  x.add_term(g, x.field_.one());
  return x;
}

GroupAlgebraElement GroupAlgebraElement::one(GroupPtr group, Field field) {
  GroupElement e = group->identity();
  return of(std::move(group), field, e);
}

Scalar GroupAlgebraElement::coefficient(GroupElement g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? field_.zero() : it->second;
}

void GroupAlgebraElement::add_term(GroupElement g, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
  for (const auto& [g, c] : rhs.terms_) add_term(g, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& rhs) {
  for (const auto& [g, c] : rhs.terms_) add_term(g, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Scalar& s) {
  if (s.is_zero()) terms_.clear();
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (!(x.field_ == y.field_)) throw Error(ErrorCode::FieldMismatch, "group algebra elements over different fields");
  GroupAlgebraElement out(x.group_, x.field_);
  for (const auto& [g, a] : x.terms_) {
    for (const auto& [h, b] : y.terms_) out.add_term(x.group_->multiply(g, h), a * b);
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::conjugated_by(GroupElement h) const {
  GroupAlgebraElement out(group_, field_);
  for (const auto& [g, c] : terms_) out.add_term(group_->conjugate(h, g), c);
  return out;
}

bool GroupAlgebraElement::supported_in(const std::vector<GroupElement>& subset) const {
  for (const auto& [g, c] : terms_) {
    if (std::find(subset.begin(), subset.end(), g) == subset.end()) return false;
  }
  return true;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + group_->name(g);
  }
  return out;
}

namespace {

/// Exponent vector of every element over the generators, found by BFS.
std::map<GroupElement, std::vector<std::size_t>> words_over(const FiniteGroup& g,
                                                            const std::vector<GroupElement>& generators) {
  std::map<GroupElement, std::vector<std::size_t>> words;
  words[g.identity()] = std::vector<std::size_t>(generators.size(), 0);
  std::vector<GroupElement> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (GroupElement x : frontier) {
      for (std::size_t j = 0; j < generators.size(); ++j) {
        GroupElement y = g.multiply(x, generators[j]);
        if (words.count(y)) continue;
        auto w = words[x];
        ++w[j];
        words[y] = w;
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return words;
}

}  // namespace

IdempotentSet abelian_idempotents(const GroupPtr& group, const Field& field, std::vector<GroupElement> subgroup) {
  std::sort(subgroup.begin(), subgroup.end());
  const FiniteGroup& g = *group;
  if (!g.is_subgroup(subgroup)) throw Error(ErrorCode::InvalidArgument, "element set is not a subgroup");
  if (!g.is_abelian(subgroup)) throw Error(ErrorCode::NotAbelian, "characters only cover abelian groups");
  if (!field.is_unit(subgroup.size())) {
    throw Error(ErrorCode::BadCharacteristic, "characteristic of " + field.describe() + " divides " +
                                                  std::to_string(subgroup.size()));
  }
  std::size_t m = g.exponent(subgroup);
  Scalar omega = primitive_root_of_unity(field, m);

  std::vector<GroupElement> generators;
  std::set<GroupElement> span{g.identity()};
  for (GroupElement x : subgroup) {
    if (span.count(x)) continue;
    generators.push_back(x);
    auto words = words_over(g, generators);
    span.clear();
    for (const auto& [y, w] : words) span.insert(y);
  }
  auto words = words_over(g, generators);

  // Enumerate exponent assignments k_j (chi(g_j) = omega^{k_j}) and keep homomorphisms.
  std::vector<std::vector<std::size_t>> characters;
  std::vector<std::size_t> k(generators.size(), 0);
  auto chi = [&](GroupElement x) {
    std::size_t s = 0;
    const auto& w = words.at(x);
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * k[j];
    return s % m;
  };
  std::size_t candidates = 1;
  for (std::size_t j = 0; j < generators.size(); ++j) candidates *= m;
  for (std::size_t code = 0; code < candidates; ++code) {
    // Digits of code in base m, most significant first, give lexicographic order.
    std::size_t rest = code;
    for (std::size_t j = generators.size(); j > 0; --j) {
      k[j - 1] = rest % m;
      rest /= m;
    }
    bool hom = true;
    for (GroupElement a : subgroup) {
      for (GroupElement b : subgroup) {
        if (chi(g.multiply(a, b)) != (chi(a) + chi(b)) % m) {
          hom = false;
          break;
        }
      }
      if (!hom) break;
    }
    if (!hom) continue;
    std::vector<std::size_t> values;
    for (GroupElement x : subgroup) values.push_back(chi(x));
    characters.push_back(std::move(values));
  }

  IdempotentSet out{group, subgroup, {}, {}};
  Scalar inv_order = field.from_int(static_cast<long long>(subgroup.size())).inverse();
  for (const auto& values : characters) {
    GroupAlgebraElement e(group, field);
    for (std::size_t idx = 0; idx < subgroup.size(); ++idx) {
      // chi(h^{-1}) = omega^{-chi(h)}
      e.add_term(subgroup[idx], inv_order * omega.pow(-static_cast<long long>(values[idx])));
    }
    out.idempotents.push_back(std::move(e));
    out.dims.push_back(1);
  }
  return out;
}

IdempotentSet abelian_idempotents(const GroupPtr& group, const Field& field) {
  return abelian_idempotents(group, field, group->all());
}

IdempotentReport validate_idempotent_set(const IdempotentSet& s) {
  IdempotentReport report;
  if (s.idempotents.size() != s.dims.size()) {
    report.failures.push_back("declared " + std::to_string(s.dims.size()) + " dimensions for " +
                              std::to_string(s.idempotents.size()) + " idempotents");
    return report;
  }
  if (s.idempotents.empty()) {
    report.failures.push_back("empty idempotent set");
    return report;
  }
  const Field field = s.idempotents.front().field();
  std::size_t sum_sq = 0;
  for (std::size_t d : s.dims) sum_sq += d * d;
  if (sum_sq != s.subgroup.size()) {
    report.failures.push_back("sum of squared dimensions is " + std::to_string(sum_sq) + ", group order is " +
                              std::to_string(s.subgroup.size()));
  }
  for (std::size_t i = 0; i < s.idempotents.size(); ++i) {
    const auto& e = s.idempotents[i];
    std::string label = "e_" + std::to_string(i);
    if (!e.supported_in(s.subgroup)) report.failures.push_back(label + " is not supported on the subgroup");
    if (e.is_zero()) report.failures.push_back(label + " is zero");
    if (!(e * e == e)) report.failures.push_back(label + " is not idempotent");
    for (std::size_t j = 0; j < s.idempotents.size(); ++j) {
      if (i == j) continue;
      if (!(e * s.idempotents[j]).is_zero()) {
        report.failures.push_back(label + " e_" + std::to_string(j) + " != 0 (orthogonality)");
      }
      bool hom_zero = true;
      for (GroupElement h : s.subgroup) {
        GroupAlgebraElement eh = e * GroupAlgebraElement::of(s.group, field, h) * s.idempotents[j];
        if (!eh.is_zero()) {
          hom_zero = false;
          break;
        }
      }
      if (!hom_zero && i < j) {
        report.failures.push_back(label + " and e_" + std::to_string(j) + " select isomorphic representations");
      }
    }
    std::vector<SparseVector> right_ideal;
    for (GroupElement h : s.subgroup) {
      GroupAlgebraElement eh = e * GroupAlgebraElement::of(s.group, field, h);
      SparseVector v;
      for (const auto& [g, c] : eh.terms()) v.emplace_back(g, c);
      right_ideal.push_back(std::move(v));
    }
    std::size_t r = rank_of(field, right_ideal);
    if (r != s.dims[i]) {
      report.failures.push_back("dim " + label + " kG = " + std::to_string(r) + ", declared " +
                                std::to_string(s.dims[i]) + " (primitivity)");
    }
  }
  bool all_linear = std::all_of(s.dims.begin(), s.dims.end(), [](std::size_t d) { return d == 1; });
  if (all_linear) {
    GroupAlgebraElement sum(s.group, field);
    for (const auto& e : s.idempotents) sum += e;
    if (!(sum == GroupAlgebraElement::one(s.group, field))) {
      report.failures.push_back("idempotents do not sum to 1 (completeness)");
    }
  }
  return report;
}

IdempotentSet conjugate_set(const IdempotentSet& s, GroupElement h) {
  IdempotentSet out{s.group, {}, {}, s.dims};
  for (GroupElement g : s.subgroup) out.subgroup.push_back(s.group->conjugate(h, g));
  std::sort(out.subgroup.begin(), out.subgroup.end());
  for (const auto& e : s.idempotents) out.idempotents.push_back(e.conjugated_by(h));
  return out;
}

}  // namespace skewgin
