#include "skewgin/commands.hpp"

#include "skewgin/crossed.hpp"
#include "skewgin/morita.hpp"
#include "skewgin/weyl.hpp"

namespace skewgin {

using nlohmann::json;

namespace {

constexpr std::size_t kDefaultMaxLen = 4;
constexpr std::size_t kDefaultReduceLen = 3;
constexpr std::size_t kDefaultFiltration = 2;

json header(const std::string& command) {
  json out;
  out["command"] = command;
  out["version"] = std::string(kToolVersion);
  return out;
}

json path_json(const GradedQuiver& q, const Path& p) {
  json out = json::array();
  for (ArrowId a : p.arrows) out.push_back(q.arrow(a).name);
  return out;
}

json potential_json(const Potential& w) {
  json terms = json::array();
  for (const auto& [cycle, coeff] : w.terms()) {
    terms.push_back({{"coeff", coeff.to_string()}, {"cycle", path_json(*w.quiver(), cycle)}});
  }
  return {{"terms", terms}, {"text", w.to_string()}};
}

json quiver_json(const GradedQuiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"name", a.name}, {"src", q.vertex_name(a.src)}, {"tgt", q.vertex_name(a.tgt)}, {"degree", a.degree}});
  }
  return {{"vertices", q.vertex_names()}, {"arrows", arrows}};
}

std::string kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::original:
      return "arrow";
    case GeneratorKind::star:
      return "star";
    case GeneratorKind::loop:
      return "loop";
  }
  return "arrow";
}

void finish(CommandResult& r, bool ok) {
  r.report["status"] = ok ? "pass" : "fail";
  r.exit_code = ok ? kExitPass : kExitCheckFailed;
}

const QuiverPtr& need_quiver(const ProblemDocument& doc) {
  if (!doc.quiver) throw DocumentError(ErrorCode::ValidationError, {{"/quiver", "missing"}});
  return doc.quiver;
}

const Potential& need_potential(const ProblemDocument& doc) {
  if (!doc.potential) throw DocumentError(ErrorCode::ValidationError, {{"/potential", "this command needs a potential"}});
  return *doc.potential;
}

Potential potential_or_zero(const ProblemDocument& doc) {
  return doc.potential ? *doc.potential : Potential(need_quiver(doc), doc.field);
}

int cy_dimension(const ProblemDocument& doc, const CommandOptions& opt) {
  return opt.cy_dimension.value_or(doc.cy_dimension.value_or(3));
}

QuiverAction action_or_trivial(const ProblemDocument& doc) {
  if (doc.action) return *doc.action;
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  return QuiverAction::trivial(g, need_quiver(doc), doc.field);
}

json failures_json(const std::vector<std::string>& failures) { return failures; }

// ---------------------------------------------------------------- validate

CommandResult cmd_validate(const ProblemDocument& doc) {
  CommandResult r{header("validate"), kExitPass};
  r.report["field"] = doc.field.describe();
  bool ok = true;
  if (doc.quiver) {
    r.report["quiver"] = quiver_json(*doc.quiver);
    if (doc.potential) r.report["potential"] = potential_json(*doc.potential);
    if (doc.action) {
      auto report = validate_action(*doc.action);
      r.report["group_order"] = doc.group->order();
      r.report["action_failures"] = failures_json(report.failures);
      ok = ok && report.failures.empty();
    }
    json idem = json::array();
    for (const auto& [v, set] : doc.idempotents) {
      auto report = validate_idempotent_set(set);
      idem.push_back({{"vertex", doc.quiver->vertex_name(v)}, {"count", set.idempotents.size()}, {"failures", report.failures}});
      ok = ok && report.ok();
    }
    if (!doc.idempotents.empty()) r.report["idempotents"] = idem;
  }
  if (doc.weyl_n) r.report["weyl_n"] = *doc.weyl_n;
  if (!doc.weyl_matrices.empty()) r.report["weyl_matrices"] = doc.weyl_matrices.size();
  finish(r, ok);
  return r;
}

// ---------------------------------------------------------------- ginzburg

CommandResult cmd_ginzburg(const ProblemDocument& doc, const CommandOptions& opt) {
  CommandResult r{header("ginzburg"), kExitPass};
  const QuiverPtr& q = need_quiver(doc);
  int d = cy_dimension(doc, opt);
  GinzburgPresentation p = ginzburg(q, potential_or_zero(doc), d);
  const auto& bar = *p.doubled().quiver;

  std::map<ArrowId, std::string> overridden;
  for (std::size_t k = 0; k < doc.differential_overrides.size(); ++k) {
    const auto& [name, terms] = doc.differential_overrides[k];
    std::string ptr = "/differential_overrides/" + std::to_string(k);
    auto id = bar.find_arrow(name);
    if (!id) {
      throw DocumentError(ErrorCode::ValidationError, {{ptr + "/generator", "unknown generator \"" + name + "\""}});
    }
    p.override_differential(*id, resolve_terms(p.doubled().quiver, doc.field, terms, "path"));
    overridden[*id] = ptr;
  }

  r.report["field"] = doc.field.describe();
  r.report["cy_dimension"] = d;
  r.report["potential"] = potential_json(p.potential());
  json gens = json::array();
  for (ArrowId a = 0; a < bar.arrow_count(); ++a) {
    const auto& arrow = bar.arrow(a);
    gens.push_back({{"name", arrow.name},
                    {"kind", kind_name(p.doubled().kind(a))},
                    {"degree", arrow.degree},
                    {"src", bar.vertex_name(arrow.src)},
                    {"tgt", bar.vertex_name(arrow.tgt)},
                    {"differential", p.differential(a).to_string()}});
  }
  r.report["generators"] = gens;

  bool ok = true;
  if (opt.check) {
    auto report = check_d_squared(p);
    json violations = json::array();
    for (const auto& v : report.violations) {
      json entry = {{"generator", v.generator}, {"rule", v.rule}, {"d_squared", v.value.to_string()}};
      auto id = bar.find_arrow(v.generator);
      if (id && overridden.count(*id)) entry["pointer"] = overridden[*id];
      violations.push_back(entry);
    }
    json degree = json::array();
    for (const auto& v : report.degree_violations) {
      json entry = {{"generator", v.generator}, {"rule", "d raises degree by one"}, {"generator_degree", v.generator_degree},
                    {"differential_degree", v.found}};
      auto id = bar.find_arrow(v.generator);
      if (id && overridden.count(*id)) entry["pointer"] = overridden[*id];
      degree.push_back(entry);
    }
    r.report["check"] = {{"violations", violations}, {"degree_violations", degree}, {"ok", report.ok()}};
    ok = report.ok();
  }
  finish(r, ok);
  return r;
}

// -------------------------------------------------------------- invariance

CommandResult cmd_invariance(const ProblemDocument& doc, const CommandOptions& opt) {
  CommandResult r{header("invariance"), kExitPass};
  const Potential& w = need_potential(doc);
  QuiverAction action = action_or_trivial(doc);
  const auto& g = *action.group();

  auto validation = validate_action(action);
  r.report["action_failures"] = validation.failures;
  if (!validation.failures.empty()) {
    finish(r, false);
    return r;
  }

  json orbit = json::array();
  bool invariant = true;
  for (GroupElement h = 0; h < g.order(); ++h) {
    Potential image = Potential::from_element(act(action, h, w.representative()));
    Potential diff = image - w;
    json entry = {{"element", g.name(h)}, {"image", image.to_string()}, {"fixed", diff.is_zero()}};
    if (!diff.is_zero()) {
      invariant = false;
      entry["pointer"] = "/potential";
      entry["rule"] = "W must be fixed by every group element";
      entry["difference"] = diff.to_string();
    }
    orbit.push_back(entry);
  }
  r.report["potential"] = potential_json(w);
  r.report["invariant"] = invariant;
  r.report["images"] = orbit;
  if (!invariant) {
    finish(r, false);
    return r;
  }

  GinzburgPresentation p = ginzburg(w.quiver(), w, cy_dimension(doc, opt));
  auto extended = extend_to_ginzburg(action, p);
  json failures = json::array();
  for (const auto& f : extended.report.failures) {
    failures.push_back({{"generator", f.generator},
                        {"element", f.element},
                        {"rule", "d commutes with the group action"},
                        {"difference", f.difference.to_string()}});
  }
  const auto& bar = *p.doubled().quiver;
  json stars = json::object();
  for (GroupElement h = 0; h < g.order(); ++h) {
    json images = json::object();
    for (ArrowId a = 0; a < bar.arrow_count(); ++a) {
      images[bar.arrow(a).name] = act_on_path(extended.action, h, Path::of_arrow(bar, a)).to_string();
    }
    stars[g.name(h)] = images;
  }
  r.report["equivariance"] = {{"checks", extended.report.checks},
                              {"failures", failures},
                              {"action_failures", extended.report.action_failures},
                              {"generator_images", stars}};
  finish(r, extended.report.ok());
  return r;
}

// ------------------------------------------------------------------ reduce

json orbits_json(const MoritaData& md) {
  const auto& q = *md.ctx->action().quiver();
  const auto& g = *md.ctx->action().group();
  json orbits = json::array();
  for (VertexId rep : md.orbits.representatives) {
    json members = json::array();
    json kappa = json::object();
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      if (md.orbits.representative_of[v] != rep) continue;
      members.push_back(q.vertex_name(v));
      kappa[q.vertex_name(v)] = g.name(md.orbits.kappa[v]);
    }
    json stab = json::array();
    for (GroupElement h : md.orbits.stabilizers[rep]) stab.push_back(g.name(h));
    orbits.push_back({{"representative", q.vertex_name(rep)}, {"members", members}, {"kappa", kappa}, {"stabilizer", stab}});
  }
  return orbits;
}

json reduced_json(const MoritaData& md) {
  const auto& ctx = *md.ctx;
  const auto& q = *ctx.action().quiver();
  json vertices = json::array();
  for (const auto& v : md.vertices) {
    vertices.push_back({{"name", v.name},
                        {"representative", q.vertex_name(v.representative)},
                        {"irreducible", v.irreducible},
                        {"irreducible_dim", v.irreducible_dim},
                        {"idempotent", v.idempotent.to_string()}});
  }
  json arrows = json::array();
  for (const auto& a : md.arrows) {
    arrows.push_back({{"name", a.name},
                      {"src", md.vertices[a.src].name},
                      {"tgt", md.vertices[a.tgt].name},
                      {"degree", a.degree},
                      {"pivot", key_to_string(ctx, a.pivot)},
                      {"image", a.image.to_string()}});
  }
  return {{"vertices", vertices}, {"arrows", arrows}};
}

json bimodule_json(const MoritaData& md, const BimoduleReport& report) {
  const auto& q = *md.ctx->action().quiver();
  json dims = json::array();
  for (const auto& [pair, dim] : report.dimensions) {
    dims.push_back({{"src", q.vertex_name(pair.first)}, {"tgt", q.vertex_name(pair.second)}, {"dimension", dim}});
  }
  return {{"spanning_size", md.bimodule.spanning_size()}, {"dimensions", dims}, {"failures", report.failures}};
}

json embedding_json(const EmbeddingReport& report) {
  json levels = json::array();
  for (const auto& l : report.levels) {
    levels.push_back({{"length", l.length}, {"paths", l.paths}, {"image_rank", l.image_rank}, {"full", l.full}});
  }
  return {{"levels", levels}, {"failures", report.failures}};
}

json transport_json(const MoritaData& md, const Transport& t) {
  const auto& ctx = *md.ctx;
  json cert = json::array();
  for (const auto& c : t.reduction.certificate) {
    cert.push_back({{"left", key_to_string(ctx, c.left)}, {"right", key_to_string(ctx, c.right)}, {"coeff", c.coeff.to_string()}});
  }
  return {{"reduced_potential", potential_json(t.reduced)},
          {"corner_representative", t.reduction.representative.to_string()},
          {"certificate", cert},
          {"corner_dimension", t.reduction.corner_dimension},
          {"commutator_count", t.reduction.commutator_count},
          {"class_verified", t.class_verified}};
}

struct Pipeline {
  MoritaData md;
  BimoduleReport bimodule;
};

Pipeline build_pipeline(const ProblemDocument& doc, json& report) {
  need_quiver(doc);
  QuiverAction action = action_or_trivial(doc);
  auto validation = validate_action(action);
  if (!validation.failures.empty()) {
    std::vector<DocumentIssue> issues;
    for (const auto& f : validation.failures) issues.push_back({"/action", f});
    throw DocumentError(ErrorCode::InvalidAction, issues);
  }
  auto ctx = std::make_shared<const CrossedContext>(std::move(action));
  MoritaData md = reduced_quiver(ctx, doc.idempotents);
  BimoduleReport bim = check_bimodule(md.ctx, md.orbits, md.bimodule);
  report["field"] = doc.field.describe();
  report["orbits"] = orbits_json(md);
  report["reduced_quiver"] = reduced_json(md);
  report["bimodule"] = bimodule_json(md, bim);
  return {std::move(md), std::move(bim)};
}

CommandResult cmd_reduce(const ProblemDocument& doc, const CommandOptions& opt) {
  CommandResult r{header("reduce"), kExitPass};
  Pipeline pipe = build_pipeline(doc, r.report);
  std::size_t len = opt.max_len.value_or(doc.max_len.value_or(kDefaultReduceLen));
  EmbeddingReport emb = check_embedding(pipe.md, len);
  r.report["embedding"] = embedding_json(emb);
  bool ok = pipe.bimodule.ok() && emb.ok();
  if (doc.potential) {
    Transport t = transport_potential(*doc.potential, pipe.md);
    r.report["reduced_potential"] = potential_json(t.reduced);
    ok = ok && t.class_verified;
  }
  finish(r, ok);
  return r;
}

CommandResult cmd_transport(const ProblemDocument& doc) {
  CommandResult r{header("transport"), kExitPass};
  const Potential& w = need_potential(doc);
  Pipeline pipe = build_pipeline(doc, r.report);
  Transport t = transport_potential(w, pipe.md);
  CrossedElement lifted = CrossedElement::from_path_algebra(pipe.md.ctx, w.representative(), pipe.md.ctx->group()->identity());
  bool certified = w.is_zero() || verify_certificate(lifted, t.reduction);
  r.report["potential"] = potential_json(w);
  r.report["transport"] = transport_json(pipe.md, t);
  r.report["transport"]["certificate_verified"] = certified;
  finish(r, pipe.bimodule.ok() && certified && t.class_verified);
  return r;
}

CommandResult cmd_verify(const ProblemDocument& doc, const CommandOptions& opt) {
  CommandResult r{header("verify"), kExitPass};
  const Potential& w = need_potential(doc);
  std::size_t len = opt.max_len.value_or(doc.max_len.value_or(kDefaultMaxLen));
  Pipeline pipe = build_pipeline(doc, r.report);
  r.report["max_len"] = len;
  r.report["potential"] = potential_json(w);

  json failures = json::array();
  for (const auto& f : pipe.bimodule.failures) failures.push_back({{"check", "bimodule"}, {"message", f}});

  EmbeddingReport emb = check_embedding(pipe.md, len);
  r.report["embedding"] = embedding_json(emb);
  for (const auto& f : emb.failures) failures.push_back({{"check", "embedding"}, {"message", f}});

  Transport t = transport_potential(w, pipe.md);
  r.report["transport"] = transport_json(pipe.md, t);
  if (!t.class_verified) failures.push_back({{"check", "transport"}, {"message", "transported class not verified"}});

  Potential candidate = t.reduced;
  if (doc.reduced_potential) {
    AlgElement supplied = resolve_terms(pipe.md.reduced, doc.field, *doc.reduced_potential, "cycle");
    for (const auto& [path, coeff] : supplied.terms()) {
      if (!path.is_cycle()) {
        throw DocumentError(ErrorCode::ValidationError,
                            {{"/reduced_potential", "path " + to_string(*pipe.md.reduced, path) + " is not a cycle"}});
      }
    }
    candidate = Potential::from_element(supplied);
    bool same = same_class(w, candidate, pipe.md);
    r.report["supplied_reduced_potential"] = {{"potential", potential_json(candidate)}, {"same_class", same}};
    if (!same) {
      failures.push_back({{"check", "reduced potential"},
                          {"pointer", "/reduced_potential"},
                          {"rule", "W' must embed into the class of W modulo commutators"},
                          {"message", "supplied W' differs from the transported class " + t.reduced.to_string()}});
    }
  }

  DimensionReport dims = morita_dimension_check(w, candidate, pipe.md, len);
  json rows = json::array();
  for (const auto& row : dims.rows) {
    json entry = {{"length", row.length}, {"corner", row.corner}, {"reduced", row.reduced}, {"pass", row.pass()}};
    rows.push_back(entry);
    if (!row.pass()) {
      json f = {{"check", "dimension"},
                {"rule", "dim e(J(Q,W)#G)e = dim J(Q',W') in each length"},
                {"length", row.length},
                {"message", std::to_string(row.corner) + " != " + std::to_string(row.reduced)}};
      if (doc.reduced_potential) f["pointer"] = "/reduced_potential";
      failures.push_back(f);
    }
  }
  for (const auto& f : dims.failures) {
    bool row_failure = f.rfind("length", 0) == 0;
    if (!row_failure) failures.push_back({{"check", "dimension"}, {"message", f}});
  }
  r.report["dimension_table"] = rows;
  r.report["failures"] = failures;
  finish(r, failures.empty());
  return r;
}

// -------------------------------------------------------------------- weyl

json exactness_json(const ExactnessReport& e) {
  json positions = json::array();
  for (const auto& p : e.positions) {
    positions.push_back({{"position", p.position}, {"dimension", p.dimension}, {"rank_out", p.rank_out}, {"homology", p.homology}});
  }
  return {{"positions", positions},
          {"end_homology", e.cokernel},
          {"expected_end_homology", e.expected_cokernel},
          {"multiplication_rank", e.multiplication_rank},
          {"d_squared_zero", e.d_squared_zero},
          {"multiplication_kills_boundaries", e.multiplication_kills_boundaries},
          {"failures", e.failures}};
}

CommandResult cmd_weyl(const ProblemDocument& doc, const CommandOptions& opt) {
  CommandResult r{header("weyl"), kExitPass};
  std::size_t n = opt.weyl_n.value_or(doc.weyl_n.value_or(1));
  std::size_t bound = opt.filtration.value_or(doc.weyl_filtration.value_or(doc.filtration.value_or(kDefaultFiltration)));
  std::size_t cap = opt.cap.value_or(doc.cap.value_or(kDefaultWeylCap));
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "--n must be at least 1");

  Field field = doc.field;
  std::vector<DenseMatrix> matrices;
  std::string prefix;
  if (opt.matrices) {
    if (auto f = parse_matrices(*opt.matrices, field, matrices)) field = *f;
    prefix = opt.matrices->is_object() ? "/matrices/" : "/";
  } else {
    matrices = doc.weyl_matrices;
    prefix = "/weyl/matrices/";
  }

  ExactnessReport primal = bounded_exactness(n, bound, field, cap);
  ExactnessReport dual = dual_bounded_exactness(n, bound, field, cap);
  r.report["field"] = field.describe();
  r.report["n"] = n;
  r.report["filtration"] = bound;
  r.report["resolution"] = exactness_json(primal);
  r.report["dual"] = exactness_json(dual);
  bool ok = primal.ok() && dual.ok();

  json failures = json::array();
  std::vector<DenseMatrix> good;
  std::vector<std::size_t> good_index;
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const auto& m = matrices[k];
    bool square = m.size() == 2 * n;
    for (const auto& row : m) square = square && row.size() == 2 * n;
    std::string ptr = prefix + std::to_string(k);
    if (!square) {
      throw DocumentError(ErrorCode::ValidationError, {{ptr, "expected a " + std::to_string(2 * n) + "x" +
                                                                 std::to_string(2 * n) + " matrix"}});
    }
    if (!is_symplectic(n, m, field)) {
      failures.push_back({{"check", "symplectic"},
                          {"pointer", ptr},
                          {"matrix", matrix_to_string(m)},
                          {"rule", "the acting matrix must preserve the commutator form"}});
      continue;
    }
    good.push_back(m);
    good_index.push_back(k);
  }
  json equivariance = json::array();
  if (!good.empty()) {
    SpReport sp = check_sp_equivariance(n, good, bound, field);
    for (const auto& c : sp.matrices) {
      std::size_t k = good_index[c.matrix];
      equivariance.push_back({{"matrix", k}, {"checked", c.checked}, {"failures", c.failures}});
      for (const auto& f : c.failures) {
        failures.push_back({{"check", "equivariance"}, {"pointer", prefix + std::to_string(k)},
                            {"rule", "the differential commutes with the symplectic action"}, {"message", f}});
      }
    }
  }
  r.report["equivariance"] = equivariance;
  r.report["failures"] = failures;
  finish(r, ok && failures.empty());
  return r;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvariantPotential:
    case ErrorCode::NotSymplectic:
    case ErrorCode::EquivarianceFailure:
    case ErrorCode::NoSolution:
    case ErrorCode::BasisExpressFailure:
      return kExitCheckFailed;
    default:
      return kExitInputError;
  }
}

CommandResult error_result(const std::string& command, const Error& error) {
  CommandResult r{header(command), exit_code_for(error.code())};
  json err = {{"code", std::string(to_string(error.code()))}, {"message", error.what()}};
  json issues = json::array();
  if (const auto* doc = dynamic_cast<const DocumentError*>(&error)) {
    for (const auto& i : doc->issues()) issues.push_back({{"pointer", i.pointer}, {"message", i.message}});
  } else if (error.code() == ErrorCode::NotInvariantPotential) {
    issues.push_back({{"pointer", "/potential"}, {"message", "W is not fixed by the group action"}});
  }
  err["issues"] = issues;
  r.report["error"] = err;
  r.report["status"] = r.exit_code == kExitCheckFailed ? "fail" : "error";
  return r;
}

CommandResult run(const std::string& command, const ProblemDocument& doc, const CommandOptions& options) {
  try {
    if (command == "validate") return cmd_validate(doc);
    if (command == "ginzburg") return cmd_ginzburg(doc, options);
    if (command == "invariance") return cmd_invariance(doc, options);
    if (command == "reduce") return cmd_reduce(doc, options);
    if (command == "transport") return cmd_transport(doc);
    if (command == "verify") return cmd_verify(doc, options);
    if (command == "weyl") return cmd_weyl(doc, options);
    throw Error(ErrorCode::InvalidArgument, "unknown command \"" + command + "\"");
  } catch (const Error& e) {
    return error_result(command, e);
  }
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace skewgin
