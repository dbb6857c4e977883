#pragma once

// Seeded random quivers and potentials for property tests.

#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"

namespace random_problems {

using namespace skewgin;

struct Problem {
  QuiverPtr quiver;
  std::vector<Potential::RawTerm> raw;
  Potential potential;
};

/// Up to max_vertices vertices and max_arrows degree-0 arrows.
inline QuiverPtr random_quiver(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_arrows) {
  std::size_t nv = 1 + rng() % max_vertices;
  std::size_t na = rng() % (max_arrows + 1);
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<GradedQuiver::ArrowSpec> arrows;
  for (std::size_t a = 0; a < na; ++a) {
    arrows.push_back({"a" + std::to_string(a), vertices[rng() % nv], vertices[rng() % nv], 0});
  }
  return fixtures::make_quiver(vertices, arrows);
}

/// Linear combination of up to max_terms cycles; when length is nonzero all
/// cycles have exactly that length, otherwise lengths run over 1..max_length.
inline Problem random_potential(std::mt19937_64& rng, QuiverPtr q, const Field& f, std::size_t max_length,
                                std::size_t max_terms, std::size_t length = 0) {
  std::vector<Path> cycles;
  for (std::size_t l = 1; l <= max_length; ++l) {
    if (length != 0 && l != length) continue;
    for (const auto& p : paths_of_length(*q, l)) {
      if (p.is_cycle()) cycles.push_back(p);
    }
  }
  std::vector<Potential::RawTerm> raw;
  if (!cycles.empty()) {
    std::size_t terms = 1 + rng() % max_terms;
    for (std::size_t t = 0; t < terms; ++t) {
      long long c = static_cast<long long>(rng() % 7) - 3;
      if (c == 0) c = 1;
      raw.emplace_back(f.from_int(c), cycles[rng() % cycles.size()]);
    }
  }
  Potential w = Potential::canonicalize(q, f, raw);
  return {q, raw, w};
}

inline std::vector<std::pair<Scalar, std::vector<ArrowId>>> raw_words(const Problem& p) {
  std::vector<std::pair<Scalar, std::vector<ArrowId>>> out;
  for (const auto& [c, path] : p.raw) out.emplace_back(c, path.arrows);
  return out;
}

}  // namespace random_problems
