#pragma once

// Search for singular vectors: combinations of F-words whose image on the
// highest-weight vector is annihilated by every E^_j. At generic weight each
// such combination is a relation among the lowering operators that the
// contour representation respects.

#include "qsuper/contour.hpp"
#include "qsuper/sweep.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsuper {

/// Number of F_i letters for each index i.
using Multidegree = std::vector<unsigned>;

/// Parses "d1,d2,..." (nonnegative integers). Throws std::invalid_argument.
Multidegree parse_multidegree(std::string_view text);

/// F-word -> coefficient, coefficients in the module context's arity.
using Combination = std::map<Word, PhaseScalar>;

/// Compact F-word rendering, e.g. "F1F1F2".
std::string compact_word(const Word& word);

struct SingularVector {
  Combination combination;
  ModuleVector image;
};

struct SingularVectorBasis {
  Multidegree degree;
  std::vector<Word> words;
  std::vector<SingularVector> vectors;

  std::size_t dimension() const { return vectors.size(); }
};

/// Distinct orderings of the multiset {F_i with multiplicity d_i}, in
/// lexicographic order. Throws DepthExceeded when sum(d) > depth.
std::vector<Word> enumerate_words(const Multidegree& degree, std::size_t depth);

/// Multidegree of a word made only of F letters; nullopt for other words.
std::optional<Multidegree> f_word_degree(const Word& word, std::size_t rank);

/// Image of sum_w c_w w(V_lambda).
ModuleVector combination_image(const ModuleContext& ctx, const Combination& combination);

/// Solves E^_j(sum_w c_w w(V_lambda)) = 0 for all j over the fraction field.
/// Needs a generic weight and sum(d) < depth (std::invalid_argument otherwise).
SingularVectorBasis singular_scan(const ModuleContext& ctx, const Multidegree& degree,
                                  Execution exec = Execution::serial);
/// Same, over an explicit list of words (all of one multidegree), in that order.
SingularVectorBasis singular_scan(const ModuleContext& ctx, const Multidegree& degree, const std::vector<Word>& words,
                                  Execution exec = Execution::serial);

struct CandidateCheck {
  bool singular = true;
  /// E^_j applied to the image, one entry per j.
  std::vector<ModuleVector> residuals;
};

/// Throws std::invalid_argument when a word is not an F-word of multidegree d.
CandidateCheck verify_candidate(const ModuleContext& ctx, const Combination& combination, const Multidegree& degree);

/// Substitutes z_k -> q^{exponents[k]} in every coefficient; nullopt when a
/// denominator vanishes.
std::optional<Combination> specialized(const Combination& combination, std::span<const Rational> exponents);

/// {"multidegree": [...], "dimension": n, "basis": [{word: coeff}],
///  "residual_checks": "pass"|"fail"}
nlohmann::json to_json(const SingularVectorBasis& result, bool residuals_pass);

}  // namespace qsuper
