#include "skewgin/document.hpp"

#include <algorithm>
#include <set>

namespace skewgin {

using nlohmann::json;

namespace {

std::string join_issues(const std::vector<DocumentIssue>& issues) {
  std::string out;
  for (const auto& i : issues) {
    if (!out.empty()) out += "; ";
    out += (i.pointer.empty() ? std::string("/") : i.pointer) + ": " + i.message;
  }
  return out;
}

std::string child(const std::string& ptr, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return ptr + "/" + escaped;
}

std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

class Issues {
 public:
  void add(std::string ptr, std::string msg) { list_.push_back({std::move(ptr), std::move(msg)}); }
  bool empty() const { return list_.empty(); }
  std::size_t size() const { return list_.size(); }
  [[noreturn]] void raise() const { throw DocumentError(ErrorCode::ValidationError, list_); }
  void raise_if_any() const {
    if (!list_.empty()) raise();
  }

 private:
  std::vector<DocumentIssue> list_;
};

std::optional<std::string> get_string(const json& j, const std::string& ptr, Issues& issues) {
  if (!j.is_string()) {
    issues.add(ptr, "expected a string");
    return std::nullopt;
  }
  return j.get<std::string>();
}

std::optional<long long> get_int(const json& j, const std::string& ptr, Issues& issues) {
  if (!j.is_number_integer()) {
    issues.add(ptr, "expected an integer");
    return std::nullopt;
  }
  return j.get<long long>();
}

std::optional<std::size_t> get_count(const json& j, const std::string& ptr, Issues& issues) {
  auto v = get_int(j, ptr, issues);
  if (!v) return std::nullopt;
  if (*v < 0) {
    issues.add(ptr, "expected a non-negative integer");
    return std::nullopt;
  }
  return static_cast<std::size_t>(*v);
}

std::optional<Scalar> get_scalar(const json& j, const Field& f, const std::string& ptr, Issues& issues) {
  auto s = get_string(j, ptr, issues);
  if (!s) return std::nullopt;
  try {
    return f.parse(*s);
  } catch (const Error& e) {
    issues.add(ptr, e.what());
    return std::nullopt;
  }
}

void check_keys(const json& obj, const std::string& ptr, const std::set<std::string>& allowed, Issues& issues) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) issues.add(child(ptr, key), "unknown key");
  }
}

std::optional<std::vector<NamedTerm>> parse_terms(const json& j, const Field& f, const std::string& ptr,
                                                  const std::string& word_key, Issues& issues) {
  if (!j.is_array()) {
    issues.add(ptr, "expected an array of terms");
    return std::nullopt;
  }
  std::vector<NamedTerm> out;
  bool ok = true;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string tp = child(ptr, k);
    const json& t = j[k];
    if (!t.is_object()) {
      issues.add(tp, "expected an object with \"coeff\" and \"" + word_key + "\"");
      ok = false;
      continue;
    }
    check_keys(t, tp, {"coeff", word_key}, issues);
    NamedTerm term{f.one(), {}, tp};
    if (t.contains("coeff")) {
      auto c = get_scalar(t["coeff"], f, child(tp, "coeff"), issues);
      if (!c) ok = false;
      if (c) term.coeff = *c;
    }
    if (!t.contains(word_key) || !t[word_key].is_array() || t[word_key].empty()) {
      issues.add(child(tp, word_key), "expected a non-empty array of arrow names");
      ok = false;
      continue;
    }
    for (std::size_t a = 0; a < t[word_key].size(); ++a) {
      auto name = get_string(t[word_key][a], child(child(tp, word_key), a), issues);
      if (!name) {
        ok = false;
        continue;
      }
      term.arrows.push_back(*name);
    }
    out.push_back(std::move(term));
  }
  if (!ok) return std::nullopt;
  return out;
}

// Resolves arrow names with positioned issues; returns nullopt on failure.
std::optional<Path> resolve_word(const GradedQuiver& q, const NamedTerm& t, const std::string& key, Issues& issues) {
  std::vector<ArrowId> ids;
  bool ok = true;
  for (std::size_t k = 0; k < t.arrows.size(); ++k) {
    auto id = q.find_arrow(t.arrows[k]);
    if (!id) {
      issues.add(child(child(t.pointer, key), k), "unknown arrow \"" + t.arrows[k] + "\"");
      ok = false;
      continue;
    }
    ids.push_back(*id);
  }
  if (!ok) return std::nullopt;
  for (std::size_t k = 1; k < ids.size(); ++k) {
    if (q.arrow(ids[k - 1]).tgt != q.arrow(ids[k]).src) {
      issues.add(child(child(t.pointer, key), k), "arrow \"" + t.arrows[k] + "\" does not start where \"" +
                                                      t.arrows[k - 1] + "\" ends");
      return std::nullopt;
    }
  }
  return Path::from_arrows(q, ids);
}

QuiverPtr parse_quiver(const json& j, Issues& issues) {
  const std::string ptr = "/quiver";
  if (!j.is_object()) {
    issues.add(ptr, "expected an object with \"vertices\" and \"arrows\"");
    return nullptr;
  }
  check_keys(j, ptr, {"vertices", "arrows"}, issues);
  std::vector<std::string> vertices;
  std::set<std::string> vseen;
  std::size_t before = issues.size();
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    issues.add(child(ptr, "vertices"), "expected an array of vertex names");
  } else {
    for (std::size_t k = 0; k < j["vertices"].size(); ++k) {
      auto name = get_string(j["vertices"][k], child(child(ptr, "vertices"), k), issues);
      if (!name) continue;
      if (!vseen.insert(*name).second) issues.add(child(child(ptr, "vertices"), k), "duplicate vertex \"" + *name + "\"");
      vertices.push_back(*name);
    }
  }
  std::vector<GradedQuiver::ArrowSpec> arrows;
  std::set<std::string> aseen;
  if (j.contains("arrows")) {
    const json& arr = j["arrows"];
    const std::string ap = child(ptr, "arrows");
    if (!arr.is_array()) {
      issues.add(ap, "expected an array of arrows");
    } else {
      for (std::size_t k = 0; k < arr.size(); ++k) {
        std::string p = child(ap, k);
        const json& a = arr[k];
        if (!a.is_object()) {
          issues.add(p, "expected an arrow object");
          continue;
        }
        check_keys(a, p, {"name", "src", "tgt", "degree"}, issues);
        GradedQuiver::ArrowSpec spec;
        bool ok = true;
        for (const char* field : {"name", "src", "tgt"}) {
          if (!a.contains(field)) {
            issues.add(child(p, field), "missing");
            ok = false;
            continue;
          }
          auto s = get_string(a[field], child(p, field), issues);
          if (!s) {
            ok = false;
            continue;
          }
          std::string f = field;
          if (f == "name") spec.name = *s;
          if (f == "src") spec.src = *s;
          if (f == "tgt") spec.tgt = *s;
          if ((f == "src" || f == "tgt") && !vseen.count(*s)) {
            issues.add(child(p, field), "unknown vertex \"" + *s + "\"");
            ok = false;
          }
        }
        if (a.contains("degree")) {
          auto d = get_int(a["degree"], child(p, "degree"), issues);
          if (d) spec.degree = static_cast<int>(*d);
          if (!d) ok = false;
        }
        if (ok && !aseen.insert(spec.name).second) {
          issues.add(child(p, "name"), "duplicate arrow \"" + spec.name + "\"");
          ok = false;
        }
        if (ok) arrows.push_back(spec);
      }
    }
  }
  if (issues.size() != before) return nullptr;
  try {
    return std::make_shared<const GradedQuiver>(vertices, arrows);
  } catch (const Error& e) {
    issues.add(ptr, e.what());
    return nullptr;
  }
}

GroupPtr parse_group(const json& j, const Field& f, Issues& issues) {
  const std::string ptr = "/group";
  if (!j.is_object()) {
    issues.add(ptr, "expected an object with \"elements\" and \"table\"");
    return nullptr;
  }
  check_keys(j, ptr, {"elements", "table"}, issues);
  std::size_t before = issues.size();
  std::vector<std::string> names;
  if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty()) {
    issues.add(child(ptr, "elements"), "expected a non-empty array of element names");
  } else {
    std::set<std::string> seen;
    for (std::size_t k = 0; k < j["elements"].size(); ++k) {
      auto s = get_string(j["elements"][k], child(child(ptr, "elements"), k), issues);
      if (s && !seen.insert(*s).second) issues.add(child(child(ptr, "elements"), k), "duplicate element \"" + *s + "\"");
      if (s) names.push_back(*s);
    }
  }
  std::vector<std::vector<std::size_t>> table;
  const std::string tp = child(ptr, "table");
  if (!j.contains("table") || !j["table"].is_array()) {
    issues.add(tp, "expected a square array of element indices");
  } else if (j["table"].size() != names.size()) {
    issues.add(tp, "table has " + std::to_string(j["table"].size()) + " rows for " + std::to_string(names.size()) +
                       " elements");
  } else {
    for (std::size_t r = 0; r < names.size(); ++r) {
      const json& row = j["table"][r];
      if (!row.is_array() || row.size() != names.size()) {
        issues.add(child(tp, r), "row must list " + std::to_string(names.size()) + " entries");
        continue;
      }
      std::vector<std::size_t> out;
      for (std::size_t c = 0; c < row.size(); ++c) {
        auto v = get_count(row[c], child(child(tp, r), c), issues);
        if (v && *v >= names.size()) issues.add(child(child(tp, r), c), "entry out of range");
        out.push_back(v.value_or(0));
      }
      table.push_back(std::move(out));
    }
  }
  if (issues.size() != before) return nullptr;
  try {
    auto g = std::make_shared<const FiniteGroup>(names, table);
    GroupAlgebra check(g, f);
    return g;
  } catch (const Error& e) {
    issues.add(e.code() == ErrorCode::BadCharacteristic ? ptr : tp, e.what());
    return nullptr;
  }
}

std::optional<std::pair<VertexId, VertexId>> parse_pair_key(const GradedQuiver& q, const std::string& key) {
  if (key.size() < 5 || key.front() != '(' || key.back() != ')') return std::nullopt;
  std::string inner = key.substr(1, key.size() - 2);
  auto comma = inner.find(',');
  if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos) return std::nullopt;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(' ');
    auto e = s.find_last_not_of(' ');
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  auto i = q.find_vertex(trim(inner.substr(0, comma)));
  auto j = q.find_vertex(trim(inner.substr(comma + 1)));
  if (!i || !j) return std::nullopt;
  return std::make_pair(*i, *j);
}

std::optional<DenseMatrix> parse_matrix(const json& j, const Field& f, const std::string& ptr, Issues& issues) {
  if (!j.is_array()) {
    issues.add(ptr, "expected an array of rows");
    return std::nullopt;
  }
  DenseMatrix m;
  bool ok = true;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) {
      issues.add(child(ptr, r), "expected a row of scalar strings");
      ok = false;
      continue;
    }
    std::vector<Scalar> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      auto s = get_scalar(j[r][c], f, child(child(ptr, r), c), issues);
      if (!s) ok = false;
      row.push_back(s.value_or(f.zero()));
    }
    m.push_back(std::move(row));
  }
  if (!ok) return std::nullopt;
  return m;
}

std::optional<QuiverAction> parse_action(const json& j, const QuiverPtr& q, const GroupPtr& g, const Field& f,
                                         Issues& issues) {
  const std::string ptr = "/action";
  if (!j.is_object()) {
    issues.add(ptr, "expected an object keyed by group element names");
    return std::nullopt;
  }
  std::size_t before = issues.size();
  std::map<GroupElement, ElementAction> generators;
  for (const auto& [name, entry] : j.items()) {
    std::string ep = child(ptr, name);
    auto element = g->find(name);
    if (!element) {
      issues.add(ep, "unknown group element \"" + name + "\"");
      continue;
    }
    if (!entry.is_object()) {
      issues.add(ep, "expected an object with \"vertex_perm\" and \"arrow_matrices\"");
      continue;
    }
    check_keys(entry, ep, {"vertex_perm", "arrow_matrices"}, issues);
    std::vector<VertexId> perm(q->vertex_count());
    for (VertexId v = 0; v < q->vertex_count(); ++v) perm[v] = v;
    if (entry.contains("vertex_perm")) {
      const json& vp = entry["vertex_perm"];
      std::string vpp = child(ep, "vertex_perm");
      if (!vp.is_object()) {
        issues.add(vpp, "expected an object mapping vertex names");
      } else {
        for (const auto& [from, to] : vp.items()) {
          auto src = q->find_vertex(from);
          if (!src) {
            issues.add(child(vpp, from), "unknown vertex \"" + from + "\"");
            continue;
          }
          auto tname = get_string(to, child(vpp, from), issues);
          if (!tname) continue;
          auto tgt = q->find_vertex(*tname);
          if (!tgt) {
            issues.add(child(vpp, from), "unknown vertex \"" + *tname + "\"");
            continue;
          }
          perm[*src] = *tgt;
        }
      }
    }
    std::vector<BlockMatrix> blocks;
    if (entry.contains("arrow_matrices")) {
      const json& am = entry["arrow_matrices"];
      std::string amp = child(ep, "arrow_matrices");
      if (!am.is_object()) {
        issues.add(amp, "expected an object keyed by \"(i,j)\"");
      } else {
        for (const auto& [key, matrix] : am.items()) {
          auto pair = parse_pair_key(*q, key);
          if (!pair) {
            issues.add(child(amp, key), "expected a key \"(i,j)\" naming two vertices");
            continue;
          }
          auto m = parse_matrix(matrix, f, child(amp, key), issues);
          if (m) blocks.push_back({pair->first, pair->second, std::move(*m)});
        }
      }
    }
    if (issues.size() != before) continue;
    try {
      generators[*element] = QuiverAction::from_blocks(*q, f, perm, blocks);
    } catch (const Error& e) {
      issues.add(ep, e.what());
    }
  }
  if (issues.size() != before) return std::nullopt;
  try {
    return QuiverAction::from_generators(g, q, f, generators);
  } catch (const Error& e) {
    issues.add(ptr, e.what());
    return std::nullopt;
  }
}

std::map<VertexId, IdempotentSet> parse_idempotents(const json& j, const QuiverAction& action, Issues& issues) {
  const std::string ptr = "/idempotents";
  std::map<VertexId, IdempotentSet> out;
  if (!j.is_array()) {
    issues.add(ptr, "expected an array of per-vertex idempotent sets");
    return out;
  }
  const auto& q = *action.quiver();
  const auto& g = action.group();
  const Field& f = action.field();
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string p = child(ptr, k);
    const json& entry = j[k];
    if (!entry.is_object()) {
      issues.add(p, "expected an object with \"vertex\", \"elements\" and \"dims\"");
      continue;
    }
    check_keys(entry, p, {"vertex", "elements", "dims"}, issues);
    if (!entry.contains("vertex")) {
      issues.add(child(p, "vertex"), "missing");
      continue;
    }
    auto vname = get_string(entry["vertex"], child(p, "vertex"), issues);
    if (!vname) continue;
    auto v = q.find_vertex(*vname);
    if (!v) {
      issues.add(child(p, "vertex"), "unknown vertex \"" + *vname + "\"");
      continue;
    }
    if (out.count(*v)) {
      issues.add(child(p, "vertex"), "vertex listed twice");
      continue;
    }
    IdempotentSet set{g, {}, {}, {}};
    for (GroupElement h = 0; h < g->order(); ++h) {
      if (action.vertex_image(h, *v) == *v) set.subgroup.push_back(h);
    }
    const std::string elp = child(p, "elements");
    if (!entry.contains("elements") || !entry["elements"].is_array()) {
      issues.add(elp, "expected an array of coefficient vectors");
      continue;
    }
    for (std::size_t e = 0; e < entry["elements"].size(); ++e) {
      const json& vec = entry["elements"][e];
      std::string vp = child(elp, e);
      if (!vec.is_array() || vec.size() != g->order()) {
        issues.add(vp, "expected " + std::to_string(g->order()) + " coefficients, one per group element");
        continue;
      }
      GroupAlgebraElement x(g, f);
      for (GroupElement h = 0; h < g->order(); ++h) {
        auto c = get_scalar(vec[h], f, child(vp, h), issues);
        if (!c || c->is_zero()) continue;
        if (!std::binary_search(set.subgroup.begin(), set.subgroup.end(), h)) {
          issues.add(child(vp, h), "element \"" + g->name(h) + "\" does not fix vertex \"" + *vname + "\"");
          continue;
        }
        x.add_term(h, *c);
      }
      set.idempotents.push_back(std::move(x));
    }
    const std::string dp = child(p, "dims");
    if (!entry.contains("dims") || !entry["dims"].is_array()) {
      issues.add(dp, "expected an array of irreducible dimensions");
      continue;
    }
    for (std::size_t d = 0; d < entry["dims"].size(); ++d) {
      auto dim = get_count(entry["dims"][d], child(dp, d), issues);
      if (dim) set.dims.push_back(*dim);
    }
    auto report = validate_idempotent_set(set);
    for (const auto& failure : report.failures) issues.add(p, failure);
    out.emplace(*v, std::move(set));
  }
  return out;
}

}  // namespace

DocumentError::DocumentError(ErrorCode code, std::vector<DocumentIssue> issues)
    : Error(code, join_issues(issues)), issues_(std::move(issues)) {}

Field parse_field(const std::string& spec) {
  if (spec == "Q") return Field::rationals();
  if (spec.size() > 4 && spec.rfind("GF(", 0) == 0 && spec.back() == ')') {
    std::string digits = spec.substr(3, spec.size() - 4);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() <= 18) {
      return Field::prime(std::stoull(digits));
    }
  }
  throw Error(ErrorCode::ValidationError, "field must be \"Q\" or \"GF(p)\", found \"" + spec + "\"");
}

std::optional<Field> parse_matrices(const json& doc, const Field& field, std::vector<DenseMatrix>& out) {
  Issues issues;
  std::optional<Field> found;
  Field f = field;
  const json* list = &doc;
  std::string ptr;
  if (doc.is_object()) {
    check_keys(doc, "", {"field", "matrices"}, issues);
    if (doc.contains("field")) {
      auto s = get_string(doc["field"], "/field", issues);
      if (s) {
        try {
          f = parse_field(*s);
          found = f;
        } catch (const Error& e) {
          issues.add("/field", e.what());
        }
      }
    }
    if (!doc.contains("matrices")) {
      issues.add("/matrices", "missing");
      issues.raise();
    }
    list = &doc["matrices"];
    ptr = "/matrices";
  }
  if (!list->is_array()) {
    issues.add(ptr, "expected an array of matrices");
    issues.raise();
  }
  issues.raise_if_any();
  for (std::size_t k = 0; k < list->size(); ++k) {
    auto m = parse_matrix((*list)[k], f, child(ptr, k), issues);
    if (m) out.push_back(std::move(*m));
  }
  issues.raise_if_any();
  return found;
}

AlgElement resolve_terms(const QuiverPtr& q, const Field& f, const std::vector<NamedTerm>& terms, const std::string& key) {
  Issues issues;
  AlgElement out(q, f);
  for (const auto& t : terms) {
    auto p = resolve_word(*q, t, key, issues);
    if (p) out.add_term(*p, t.coeff);
  }
  issues.raise_if_any();
  return out;
}

ProblemDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(ErrorCode::ParseError, {{"", e.what()}});
  }
  return parse_document(doc);
}

ProblemDocument parse_document(const json& doc) {
  Issues issues;
  ProblemDocument out;
  out.raw = doc;
  if (!doc.is_object()) {
    issues.add("", "the document must be a JSON object");
    issues.raise();
  }
  check_keys(doc, "",
             {"field", "quiver", "potential", "cy_dimension", "group", "action", "idempotents",
              "differential_overrides", "reduced_potential", "weyl", "options"},
             issues);

  if (doc.contains("field")) {
    auto s = get_string(doc["field"], "/field", issues);
    if (s) {
      try {
        out.field = parse_field(*s);
      } catch (const Error& e) {
        issues.add("/field", e.what());
        issues.raise();
      }
    }
  }
  const Field& f = out.field;

  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) {
      issues.add("/options", "expected an object");
    } else {
      check_keys(o, "/options", {"max_len", "filtration", "cap"}, issues);
      if (o.contains("max_len")) out.max_len = get_count(o["max_len"], "/options/max_len", issues);
      if (o.contains("filtration")) out.filtration = get_count(o["filtration"], "/options/filtration", issues);
      if (o.contains("cap")) out.cap = get_count(o["cap"], "/options/cap", issues);
    }
  }

  if (doc.contains("weyl")) {
    const json& w = doc["weyl"];
    if (!w.is_object()) {
      issues.add("/weyl", "expected an object");
    } else {
      check_keys(w, "/weyl", {"n", "filtration", "matrices"}, issues);
      if (w.contains("n")) out.weyl_n = get_count(w["n"], "/weyl/n", issues);
      if (w.contains("filtration")) out.weyl_filtration = get_count(w["filtration"], "/weyl/filtration", issues);
      if (w.contains("matrices")) {
        if (!w["matrices"].is_array()) {
          issues.add("/weyl/matrices", "expected an array of matrices");
        } else {
          for (std::size_t k = 0; k < w["matrices"].size(); ++k) {
            auto m = parse_matrix(w["matrices"][k], f, child(std::string("/weyl/matrices"), k), issues);
            if (m) out.weyl_matrices.push_back(std::move(*m));
          }
        }
      }
    }
  }

  if (!doc.contains("quiver")) {
    // Weyl-only documents need no quiver.
    if (!doc.contains("weyl")) issues.add("/quiver", "missing");
    for (const char* key : {"potential", "group", "action", "idempotents", "differential_overrides", "reduced_potential"}) {
      if (doc.contains(key)) issues.add(std::string("/") + key, "needs a quiver");
    }
    issues.raise_if_any();
    return out;
  }
  out.quiver = parse_quiver(doc["quiver"], issues);
  if (!out.quiver) issues.raise();

  if (doc.contains("cy_dimension")) {
    auto d = get_int(doc["cy_dimension"], "/cy_dimension", issues);
    if (d && *d < 3) issues.add("/cy_dimension", "Calabi-Yau dimension must be at least 3");
    if (d && *d >= 3) out.cy_dimension = static_cast<int>(*d);
  }

  if (doc.contains("potential")) {
    auto terms = parse_terms(doc["potential"], f, "/potential", "cycle", issues);
    if (terms) {
      std::vector<Potential::RawTerm> raw;
      bool ok = true;
      for (const auto& t : *terms) {
        auto p = resolve_word(*out.quiver, t, "cycle", issues);
        if (!p) {
          ok = false;
          continue;
        }
        if (!p->is_cycle()) {
          issues.add(child(t.pointer, "cycle"), "path " + to_string(*out.quiver, *p) + " is not a cycle");
          ok = false;
          continue;
        }
        raw.emplace_back(t.coeff, *p);
      }
      if (ok) out.potential = Potential::canonicalize(out.quiver, f, raw);
    }
  }

  if (doc.contains("group")) out.group = parse_group(doc["group"], f, issues);
  if (doc.contains("action")) {
    if (!doc.contains("group")) {
      issues.add("/action", "an action needs a group");
    } else if (out.group) {
      out.action = parse_action(doc["action"], out.quiver, out.group, f, issues);
    }
  } else if (out.group) {
    out.action = QuiverAction::trivial(out.group, out.quiver, f);
  }
  if (doc.contains("idempotents")) {
    if (!doc.contains("group")) {
      issues.add("/idempotents", "idempotents need a group");
    } else if (out.action) {
      out.idempotents = parse_idempotents(doc["idempotents"], *out.action, issues);
    }
  }

  if (doc.contains("differential_overrides")) {
    const json& d = doc["differential_overrides"];
    const std::string dp = "/differential_overrides";
    if (!d.is_array()) {
      issues.add(dp, "expected an array");
    } else {
      for (std::size_t k = 0; k < d.size(); ++k) {
        std::string p = child(dp, k);
        if (!d[k].is_object() || !d[k].contains("generator") || !d[k].contains("terms")) {
          issues.add(p, "expected an object with \"generator\" and \"terms\"");
          continue;
        }
        check_keys(d[k], p, {"generator", "terms"}, issues);
        auto gen = get_string(d[k]["generator"], child(p, "generator"), issues);
        auto terms = d[k]["terms"].is_array() && d[k]["terms"].empty()
                         ? std::optional<std::vector<NamedTerm>>(std::vector<NamedTerm>{})
                         : parse_terms(d[k]["terms"], f, child(p, "terms"), "path", issues);
        if (gen && terms) out.differential_overrides.emplace_back(*gen, std::move(*terms));
      }
    }
  }

  if (doc.contains("reduced_potential")) {
    out.reduced_potential = parse_terms(doc["reduced_potential"], f, "/reduced_potential", "cycle", issues);
  }

  issues.raise_if_any();
  return out;
}

}  // namespace skewgin
