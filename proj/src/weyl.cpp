#include "skewgin/weyl.hpp"

#include <algorithm>
#include <functional>

namespace skewgin {

std::size_t WeylMonomial::total_degree() const {
  std::size_t t = 0;
  for (unsigned e : x) t += e;
  for (unsigned e : d) t += e;
  return t;
}

WeylElement WeylElement::of(std::size_t n, Field field, const WeylMonomial& m, const Scalar& c) {
  WeylElement out(n, field);
  out.add_term(m, c);
  return out;
}

WeylElement WeylElement::one(std::size_t n, Field field) { return of(n, field, WeylMonomial::one(n), field.one()); }

WeylElement WeylElement::generator(std::size_t n, Field field, std::size_t index) {
  if (index >= 2 * n) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  WeylMonomial m = WeylMonomial::one(n);
  if (index < n) {
    m.x[index] = 1;
  } else {
    m.d[index - n] = 1;
  }
  return of(n, field, m, field.one());
}

Scalar WeylElement::coefficient(const WeylMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void WeylElement::add_term(const WeylMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylElement& WeylElement::operator+=(const WeylElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_multiply(a, b); }

namespace {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace

WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::InvalidArgument, "Weyl algebras of different rank");
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "Weyl elements over different fields");
  const std::size_t n = a.n();
  const Field& f = a.field();
  WeylElement out(n, f);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // d_i^p x_i^q = sum_k C(p,k) C(q,k) k! x_i^{q-k} d_i^{p-k}, independently in each i.
      std::vector<unsigned> k(n, 0);
      std::function<void(std::size_t, mpz_class)> expand = [&](std::size_t i, mpz_class weight) {
        if (i == n) {
          WeylMonomial m = WeylMonomial::one(n);
          for (std::size_t j = 0; j < n; ++j) {
            m.x[j] = ma.x[j] + mb.x[j] - k[j];
            m.d[j] = ma.d[j] - k[j] + mb.d[j];
          }
          out.add_term(m, ca * cb * f.from_rational(mpq_class(weight)));
          return;
        }
        unsigned top = std::min(ma.d[i], mb.x[i]);
        for (unsigned j = 0; j <= top; ++j) {
          k[i] = j;
          expand(i + 1, weight * binomial(ma.d[i], j) * binomial(mb.x[i], j) * factorial(j));
        }
      };
      expand(0, mpz_class(1));
    }
  }
  return out;
}

std::string to_string(const WeylMonomial& m) {
  std::string out;
  auto put = [&](const char* letter, std::size_t i, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += letter + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < m.x.size(); ++i) put("x", i, m.x[i]);
  for (std::size_t i = 0; i < m.d.size(); ++i) put("d", i, m.d[i]);
  return out.empty() ? "1" : out;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") " + skewgin::to_string(m);
  }
  return out;
}

std::vector<WeylMonomial> weyl_monomials(std::size_t n, std::size_t bound) {
  std::vector<WeylMonomial> out;
  for (std::size_t total = 0; total <= bound; ++total) {
    std::vector<WeylMonomial> level;
    std::vector<unsigned> e(2 * n, 0);
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t left) {
      if (pos + 1 == 2 * n) {
        e[pos] = static_cast<unsigned>(left);
        WeylMonomial m{{e.begin(), e.begin() + static_cast<long>(n)}, {e.begin() + static_cast<long>(n), e.end()}};
        level.push_back(std::move(m));
        return;
      }
      for (std::size_t v = 0; v <= left; ++v) {
        e[pos] = static_cast<unsigned>(v);
        fill(pos + 1, left - v);
      }
    };
    if (n == 0) {
      if (total == 0) level.push_back(WeylMonomial::one(0));
    } else {
      fill(0, total);
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

ChainElement ChainElement::of(std::size_t n, Field field, const ChainKey& key) {
  ChainElement out(n, field);
  out.add_term(key, field.one());
  return out;
}

void ChainElement::add_term(const ChainKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void ChainElement::add_product(const Wedge& wedge, const WeylElement& a, const WeylElement& b, const Scalar& c) {
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) add_term({wedge, ma, mb}, c * ca * cb);
  }
}

ChainElement& ChainElement::operator+=(const ChainElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

ChainElement& ChainElement::operator-=(const ChainElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

std::string ChainElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string w;
    for (std::size_t s : k.wedge) w += (w.empty() ? "e" : "^e") + std::to_string(s);
    out += "(" + c.to_string() + ") [" + (w.empty() ? "1" : w) + "] " + skewgin::to_string(k.left) + " | " +
           skewgin::to_string(k.right);
  }
  return out;
}

namespace {

// u1 (x) u2 -> u1 v (x) u2 - u1 (x) v u2, added into out with the given sign.
void add_boundary_action(ChainElement& out, const Wedge& wedge, const WeylMonomial& u1, const WeylMonomial& u2,
                         std::size_t v, const Scalar& c) {
  const std::size_t n = out.n();
  const Field& f = out.field();
  WeylElement left = WeylElement::of(n, f, u1, f.one());
  WeylElement right = WeylElement::of(n, f, u2, f.one());
  WeylElement gen = WeylElement::generator(n, f, v);
  out.add_product(wedge, left * gen, right, c);
  out.add_product(wedge, left, gen * right, -c);
}

}  // namespace

ChainElement koszul_differential(const ChainElement& c) {
  ChainElement out(c.n(), c.field());
  for (const auto& [key, coeff] : c.terms()) {
    const std::size_t size = key.wedge.size();
    if (size == 0) continue;
    const std::size_t k = size - 1;
    for (std::size_t i = 1; i <= size; ++i) {
      Wedge rest = key.wedge;
      rest.erase(rest.begin() + static_cast<long>(i - 1));
      Scalar sign = ((k + 1 - i) % 2 == 0) ? coeff : -coeff;
      add_boundary_action(out, rest, key.left, key.right, key.wedge[i - 1], sign);
    }
  }
  return out;
}

WeylElement augmentation(const ChainElement& c) {
  WeylElement out(c.n(), c.field());
  const Field& f = c.field();
  for (const auto& [key, coeff] : c.terms()) {
    if (!key.wedge.empty()) continue;
    out += WeylElement::of(c.n(), f, key.left, coeff) * WeylElement::of(c.n(), f, key.right, f.one());
  }
  return out;
}

ChainElement dual_differential(const ChainElement& c) {
  ChainElement out(c.n(), c.field());
  for (const auto& [key, coeff] : c.terms()) {
    for (std::size_t j = 0; j < 2 * c.n(); ++j) {
      if (std::binary_search(key.wedge.begin(), key.wedge.end(), j)) continue;
      // xi ^ e_j*: moving e_j* into sorted position passes the larger indices.
      std::size_t larger = static_cast<std::size_t>(key.wedge.end() - std::upper_bound(key.wedge.begin(), key.wedge.end(), j));
      Wedge grown = key.wedge;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), j), j);
      Scalar sign = larger % 2 == 0 ? coeff : -coeff;
      add_boundary_action(out, grown, key.left, key.right, j, sign);
    }
  }
  return out;
}

std::size_t filtration_degree(const ChainKey& key) {
  return key.wedge.size() + key.left.total_degree() + key.right.total_degree();
}

std::size_t dual_filtration_degree(std::size_t n, const ChainKey& key) {
  return 2 * n - key.wedge.size() + key.left.total_degree() + key.right.total_degree();
}

namespace {

std::vector<Wedge> wedges_of_size(std::size_t dim, std::size_t k) {
  std::vector<Wedge> out;
  Wedge current;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t s = start; s < dim; ++s) {
      current.push_back(s);
      pick(s + 1);
      current.pop_back();
    }
  };
  pick(0);
  return out;
}

std::size_t chain_count(std::size_t n, std::size_t k, std::size_t budget) {
  // Pairs of monomials with combined degree <= budget: monomials in 4n variables.
  mpz_class count = binomial(static_cast<unsigned>(budget + 4 * n), static_cast<unsigned>(4 * n));
  mpz_class wedges = binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(k));
  mpz_class total = count * wedges;
  return total.fits_ulong_p() ? total.get_ui() : static_cast<std::size_t>(-1);
}

void guard_size(std::size_t n, std::size_t bound, std::size_t cap, bool dual) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Weyl rank must be at least 1");
  if (n > 2) throw Error(ErrorCode::SizeGuard, "Weyl rank " + std::to_string(n) + " is above the supported maximum of 2");
  std::size_t total = 0;
  for (std::size_t k = 0; k <= 2 * n; ++k) {
    std::size_t wedge_cost = dual ? 2 * n - k : k;
    if (wedge_cost > bound) continue;
    total += chain_count(n, k, bound - wedge_cost);
  }
  if (total > cap) {
    throw Error(ErrorCode::SizeGuard, "truncated complex has " + std::to_string(total) + " basis elements, cap is " +
                                          std::to_string(cap));
  }
}

SparseVector vectorize_chain(const TermIndex<ChainKey>& index, const ChainElement& c) {
  SparseVector v;
  for (const auto& [k, coeff] : c.terms()) {
    auto col = index.find(k);
    if (!col) throw Error(ErrorCode::InvalidArgument, "differential left the filtered piece");
    v.emplace_back(*col, coeff);
  }
  return normalized(std::move(v));
}

SparseVector vectorize_weyl(const TermIndex<WeylMonomial>& index, const WeylElement& u) {
  SparseVector v;
  for (const auto& [m, coeff] : u.terms()) {
    auto col = index.find(m);
    if (!col) throw Error(ErrorCode::InvalidArgument, "multiplication left the filtered piece");
    v.emplace_back(*col, coeff);
  }
  return normalized(std::move(v));
}

}  // namespace

std::vector<ChainKey> chain_basis(std::size_t n, std::size_t k, std::size_t bound, bool dual) {
  std::vector<ChainKey> out;
  std::size_t wedge_cost = dual ? 2 * n - k : k;
  if (k > 2 * n || wedge_cost > bound) return out;
  std::size_t budget = bound - wedge_cost;
  auto monomials = weyl_monomials(n, budget);
  for (const auto& w : wedges_of_size(2 * n, k)) {
    for (const auto& a : monomials) {
      for (const auto& b : monomials) {
        if (a.total_degree() + b.total_degree() <= budget) out.push_back({w, a, b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Shared driver: `step` maps position k to k-1 (primal) or k+1 (dual).
ExactnessReport run_exactness(std::size_t n, std::size_t bound, const Field& field, std::size_t cap, bool dual) {
  guard_size(n, bound, cap, dual);
  ExactnessReport report;
  report.n = n;
  report.bound = bound;
  const std::size_t top = 2 * n;

  std::vector<std::vector<ChainKey>> bases(top + 1);
  std::vector<TermIndex<ChainKey>> indices(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    bases[k] = chain_basis(n, k, bound, dual);
    indices[k] = TermIndex<ChainKey>(bases[k]);
  }
  auto apply = [&](const ChainElement& c) { return dual ? dual_differential(c) : koszul_differential(c); };

  // rank_out[k]: rank of the differential leaving position k.
  std::vector<std::size_t> rank_out(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) {
    bool has_target = dual ? k < top : k > 0;
    if (!has_target) continue;
    std::size_t target = dual ? k + 1 : k - 1;
    EchelonBasis image(field);
    for (const auto& key : bases[k]) {
      ChainElement c = ChainElement::of(n, field, key);
      ChainElement dc = apply(c);
      image.insert(vectorize_chain(indices[target], dc));
      if (!apply(dc).is_zero()) {
        if (report.d_squared_zero) {
          report.failures.push_back("d^2 is not zero on " + c.to_string());
        }
        report.d_squared_zero = false;
      }
    }
    rank_out[k] = image.rank();
  }

  // The multiplication map leaves position 0 (primal) or the top (dual).
  const std::size_t end = dual ? top : 0;
  auto monomials = weyl_monomials(n, bound);
  TermIndex<WeylMonomial> a_index(monomials);
  EchelonBasis mult(field);
  for (const auto& key : bases[end]) {
    WeylElement u = augmentation(ChainElement::of(n, field, {{}, key.left, key.right}));
    mult.insert(vectorize_weyl(a_index, u));
  }
  report.multiplication_rank = mult.rank();
  std::size_t before = dual ? top - 1 : 1;
  if (top >= 1) {
    for (const auto& key : bases[before]) {
      ChainElement dc = apply(ChainElement::of(n, field, key));
      ChainElement stripped(n, field);
      for (const auto& [k, c] : dc.terms()) stripped.add_term({{}, k.left, k.right}, c);
      if (!augmentation(stripped).is_zero()) {
        if (report.multiplication_kills_boundaries) {
          report.failures.push_back("multiplication does not vanish on the boundary of " +
                                    ChainElement::of(n, field, key).to_string());
        }
        report.multiplication_kills_boundaries = false;
      }
    }
  }

  for (std::size_t k = 0; k <= top; ++k) {
    PositionHomology pos;
    pos.position = k;
    pos.dimension = bases[k].size();
    pos.rank_out = rank_out[k];
    std::size_t incoming = 0;
    if (dual) {
      incoming = k > 0 ? rank_out[k - 1] : 0;
    } else {
      incoming = k < top ? rank_out[k + 1] : 0;
    }
    pos.homology = pos.dimension - pos.rank_out - incoming;
    report.positions.push_back(pos);
  }
  report.cokernel = report.positions[end].homology;
  report.expected_cokernel = monomials.size();
  for (const auto& pos : report.positions) {
    if (pos.position != end && pos.homology != 0) {
      report.failures.push_back("homology of dimension " + std::to_string(pos.homology) + " at wedge degree " +
                                std::to_string(pos.position));
    }
  }
  if (report.cokernel != report.expected_cokernel) {
    report.failures.push_back("homology at the end of the complex has dimension " + std::to_string(report.cokernel) +
                              ", expected " + std::to_string(report.expected_cokernel));
  }
  if (report.multiplication_rank != report.expected_cokernel) {
    report.failures.push_back("multiplication reaches " + std::to_string(report.multiplication_rank) + " of " +
                              std::to_string(report.expected_cokernel) + " monomials");
  }
  return report;
}

}  // namespace

ExactnessReport bounded_exactness(std::size_t n, std::size_t bound, const Field& field, std::size_t cap) {
  return run_exactness(n, bound, field, cap, false);
}

ExactnessReport dual_bounded_exactness(std::size_t n, std::size_t bound, const Field& field, std::size_t cap) {
  return run_exactness(n, bound, field, cap, true);
}

bool is_symplectic(std::size_t n, const DenseMatrix& m, const Field& field) {
  if (m.size() != 2 * n) return false;
  for (const auto& row : m) {
    if (row.size() != 2 * n) return false;
  }
  // [x_i, d_j] = -delta_ij, [d_i, x_j] = delta_ij.
  DenseMatrix form(2 * n, std::vector<Scalar>(2 * n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    form[i][n + i] = -field.one();
    form[n + i][i] = field.one();
  }
  return matmul(field, matmul(field, transpose(m), form), m) == form;
}

WeylElement act_on_weyl(const DenseMatrix& m, const WeylElement& u) {
  const std::size_t n = u.n();
  const Field& f = u.field();
  std::vector<WeylElement> images;
  for (std::size_t c = 0; c < 2 * n; ++c) {
    WeylElement img(n, f);
    for (std::size_t r = 0; r < 2 * n; ++r) {
      if (!m[r][c].is_zero()) img += WeylElement::generator(n, f, r) * m[r][c];
    }
    images.push_back(std::move(img));
  }
  WeylElement out(n, f);
  for (const auto& [mono, c] : u.terms()) {
    WeylElement term = WeylElement::one(n, f) * c;
    for (std::size_t i = 0; i < n; ++i) {
      for (unsigned e = 0; e < mono.x[i]; ++e) term = term * images[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (unsigned e = 0; e < mono.d[i]; ++e) term = term * images[n + i];
    }
    out += term;
  }
  return out;
}

ChainElement act_on_chain(const DenseMatrix& m, const ChainElement& c) {
  const std::size_t n = c.n();
  const Field& f = c.field();
  ChainElement out(n, f);
  for (const auto& [key, coeff] : c.terms()) {
    WeylElement left = act_on_weyl(m, WeylElement::of(n, f, key.left, f.one()));
    WeylElement right = act_on_weyl(m, WeylElement::of(n, f, key.right, f.one()));
    // Expand g(e_{s1}) ^ ... ^ g(e_{sk}) and sort each wedge with its sign.
    std::vector<std::size_t> choice(key.wedge.size());
    std::function<void(std::size_t, Scalar)> expand = [&](std::size_t pos, Scalar weight) {
      if (pos == key.wedge.size()) {
        Wedge w = choice;
        int sign = 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
          for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return;
            if (w[i] > w[j]) sign = -sign;
          }
        }
        std::sort(w.begin(), w.end());
        out.add_product(w, left, right, sign > 0 ? weight : -weight);
        return;
      }
      for (std::size_t r = 0; r < 2 * n; ++r) {
        const Scalar& entry = m[r][key.wedge[pos]];
        if (entry.is_zero()) continue;
        choice[pos] = r;
        expand(pos + 1, weight * entry);
      }
    };
    expand(0, coeff);
  }
  return out;
}

std::string matrix_to_string(const DenseMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) out += (c ? ", " : "") + m[r][c].to_string();
    out += "]";
  }
  return out + "]";
}

bool SpReport::ok() const noexcept {
  for (const auto& m : matrices) {
    if (!m.failures.empty()) return false;
  }
  return true;
}

SpReport check_sp_equivariance(std::size_t n, const std::vector<DenseMatrix>& matrices, std::size_t bound,
                               const Field& field) {
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    if (!is_symplectic(n, matrices[k], field)) {
      throw Error(ErrorCode::NotSymplectic, "matrix " + std::to_string(k) + " " + matrix_to_string(matrices[k]) +
                                                " does not preserve the symplectic form");
    }
  }
  SpReport report;
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const auto& m = matrices[k];
    EquivarianceCheck check;
    check.matrix = k;
    for (std::size_t w = 0; w <= 2 * n; ++w) {
      for (const auto& key : chain_basis(n, w, bound, false)) {
        ChainElement c = ChainElement::of(n, field, key);
        ChainElement gc = act_on_chain(m, c);
        ++check.checked;
        if (w == 0) {
          WeylElement lhs = augmentation(gc);
          WeylElement rhs = act_on_weyl(m, augmentation(c));
          if (!(lhs == rhs)) check.failures.push_back("multiplication is not equivariant on " + c.to_string());
          continue;
        }
        ChainElement diff = koszul_differential(gc) - act_on_chain(m, koszul_differential(c));
        if (!diff.is_zero()) {
          check.failures.push_back("differential is not equivariant on " + c.to_string() + ": difference " +
                                   diff.to_string());
        }
      }
    }
    report.matrices.push_back(std::move(check));
  }
  return report;
}

}  // namespace skewgin
