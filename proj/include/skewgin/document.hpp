#pragma once

// The JSON problem document read by the command line tool.
//
//   {
//     "field": "Q" | "GF(p)",
//     "quiver": {"vertices": [...], "arrows": [{"name", "src", "tgt", "degree"}]},
//     "potential": [{"coeff": "1", "cycle": ["x", "y", "z"]}],
//     "cy_dimension": 3,
//     "group": {"elements": [...], "table": [[...]]},
//     "action": {"g": {"vertex_perm": {"1": "2"}, "arrow_matrices": {"(1,2)": [["1"]]}}},
//     "idempotents": [{"vertex": "v", "elements": [["1/2", "1/2"]], "dims": [1]}],
//     "differential_overrides": [{"generator": "c_v", "terms": [{"coeff": "1", "path": ["x", "x*"]}]}],
//     "reduced_potential": [{"coeff": "1", "cycle": ["m0", "m7", "m5"]}],
//     "weyl": {"n": 1, "filtration": 2, "matrices": [[["-1", "0"], ["0", "-1"]]]},
//     "options": {"max_len": 4, "filtration": 2, "cap": 50000}
//   }
//
// All scalars are strings. Arrow matrices have rows indexed by the arrows
// g.i -> g.j and columns by the arrows i -> j, both in name order. Action
// entries may list only generators; the rest of the group is filled in by
// closure.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewgin/action.hpp"
#include "skewgin/ginzburg.hpp"
#include "skewgin/group.hpp"
#include "skewgin/linalg.hpp"
#include "skewgin/potential.hpp"

namespace skewgin {

struct DocumentIssue {
  std::string pointer;  ///< JSON pointer into the document
  std::string message;
};

class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, std::vector<DocumentIssue> issues);
  const std::vector<DocumentIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<DocumentIssue> issues_;
};

struct NamedTerm {
  Scalar coeff;
  std::vector<std::string> arrows;
  std::string pointer;
};

struct ProblemDocument {
  nlohmann::json raw;
  Field field = Field::rationals();
  QuiverPtr quiver;
  std::optional<Potential> potential;
  std::optional<int> cy_dimension;
  GroupPtr group;
  std::optional<QuiverAction> action;
  std::map<VertexId, IdempotentSet> idempotents;
  /// Generator name -> replacement differential, by generator name on the doubled quiver.
  std::vector<std::pair<std::string, std::vector<NamedTerm>>> differential_overrides;
  /// Cycles on the reduced quiver, resolved once it is built.
  std::optional<std::vector<NamedTerm>> reduced_potential;

  std::optional<std::size_t> weyl_n;
  std::optional<std::size_t> weyl_filtration;
  std::vector<DenseMatrix> weyl_matrices;

  std::optional<std::size_t> max_len;
  std::optional<std::size_t> filtration;
  std::optional<std::size_t> cap;
};

/// Throws DocumentError (ParseError or ValidationError) listing every issue found.
ProblemDocument parse_document(const std::string& text);
ProblemDocument parse_document(const nlohmann::json& doc);

/// Parses "Q" or "GF(p)".
Field parse_field(const std::string& spec);

/// Matrices given either as a bare array or as {"field": ..., "matrices": [...]}.
/// Returns the field when one is given.
std::optional<Field> parse_matrices(const nlohmann::json& doc, const Field& field, std::vector<DenseMatrix>& out);

/// Resolves named terms on a quiver; throws DocumentError at the term's pointer.
AlgElement resolve_terms(const QuiverPtr& q, const Field& f, const std::vector<NamedTerm>& terms, const std::string& key);

}  // namespace skewgin
