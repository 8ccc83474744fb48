#include "qsuper/serre.hpp"

#include "qsuper/linear.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace qsuper {

Multidegree parse_multidegree(std::string_view text) {
  Multidegree degree;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    unsigned value = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
      throw std::invalid_argument("malformed multidegree '" + std::string(text) + "'");
    }
    degree.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return degree;
}

std::string compact_word(const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& g : word) out += to_string(g);
  return out;
}

std::vector<Word> enumerate_words(const Multidegree& degree, std::size_t depth) {
  const unsigned total = std::accumulate(degree.begin(), degree.end(), 0u);
  if (total > depth) {
    throw DepthExceeded("multidegree of total " + std::to_string(total) + " exceeds depth " + std::to_string(depth));
  }
  std::vector<std::size_t> letters;
  for (std::size_t i = 0; i < degree.size(); ++i) letters.insert(letters.end(), degree[i], i);
  std::vector<Word> words;
  do {
    Word w;
    for (std::size_t i : letters) w.push_back(Generator{GeneratorKind::F, i});
    words.push_back(std::move(w));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return words;
}

std::optional<Multidegree> f_word_degree(const Word& word, std::size_t rank) {
  Multidegree degree(rank, 0);
  for (const auto& g : word) {
    if (g.kind != GeneratorKind::F || g.index >= rank) return std::nullopt;
    ++degree[g.index];
  }
  return degree;
}

ModuleVector combination_image(const ModuleContext& ctx, const Combination& combination) {
  ModuleVector image(ctx.arity());
  const auto top = ModuleVector::highest_weight(ctx.arity());
  for (const auto& [word, c] : combination) image += apply_word(ctx, word, top).scaled(c);
  return image;
}

namespace {

void check_degree(const ModuleContext& ctx, const Multidegree& degree) {
  if (degree.size() != ctx.rank()) {
    throw std::invalid_argument("multidegree needs " + std::to_string(ctx.rank()) + " entries");
  }
}

}  // namespace

SingularVectorBasis singular_scan(const ModuleContext& ctx, const Multidegree& degree, Execution exec) {
  check_degree(ctx, degree);
  return singular_scan(ctx, degree, enumerate_words(degree, ctx.depth()), exec);
}

SingularVectorBasis singular_scan(const ModuleContext& ctx, const Multidegree& degree, const std::vector<Word>& words,
                                  Execution exec) {
  check_degree(ctx, degree);
  if (!is_generic(ctx.weight())) throw std::invalid_argument("singular scan needs a generic weight");
  const unsigned total = std::accumulate(degree.begin(), degree.end(), 0u);
  if (total >= ctx.depth()) {
    throw std::invalid_argument("singular scan needs total degree below the depth (" + std::to_string(ctx.depth()) +
                                ")");
  }
  for (const auto& w : words) {
    if (f_word_degree(w, ctx.rank()) != degree) {
      throw std::invalid_argument("word " + compact_word(w) + " does not have the scanned multidegree");
    }
  }

  // Column k holds the coefficients of E^_j(w_k(V)) for every j.
  using Column = std::map<std::pair<std::size_t, Sequence>, PhaseScalar>;
  std::vector<Column> columns(words.size());
  const auto top = ModuleVector::highest_weight(ctx.arity());
  auto assemble = [&](std::size_t k) -> std::optional<Counterexample> {
    const ModuleVector image = apply_word(ctx, words[k], top);
    for (std::size_t j = 0; j < ctx.rank(); ++j) {
      const ModuleVector residual = apply_Ehat(ctx, j, image);
      for (const auto& [seq, c] : residual.terms()) columns[k].emplace(std::make_pair(j, seq), c);
    }
    return std::nullopt;
  };
  first_failure(words.size(), assemble, exec);

  std::map<std::pair<std::size_t, Sequence>, std::size_t> row_index;
  for (const auto& column : columns) {
    for (const auto& [key, c] : column) row_index.emplace(key, 0);
  }
  std::size_t next = 0;
  for (auto& [key, index] : row_index) index = next++;
  ScalarMatrix matrix(row_index.size(), std::vector<PhaseScalar>(words.size(), PhaseScalar::zero(ctx.arity())));
  for (std::size_t k = 0; k < words.size(); ++k) {
    for (const auto& [key, c] : columns[k]) matrix[row_index.at(key)][k] = c;
  }

  SingularVectorBasis result{degree, words, {}};
  for (const auto& x : nullspace(matrix, words.size(), ctx.arity())) {
    SingularVector v;
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (!x[k].is_zero()) v.combination.emplace(words[k], x[k]);
    }
    v.image = combination_image(ctx, v.combination);
    result.vectors.push_back(std::move(v));
  }
  return result;
}

CandidateCheck verify_candidate(const ModuleContext& ctx, const Combination& combination, const Multidegree& degree) {
  check_degree(ctx, degree);
  for (const auto& [word, c] : combination) {
    if (f_word_degree(word, ctx.rank()) != degree) {
      throw std::invalid_argument("word " + compact_word(word) + " does not match the multidegree");
    }
  }
  const ModuleVector image = combination_image(ctx, combination);
  CandidateCheck check;
  for (std::size_t j = 0; j < ctx.rank(); ++j) {
    check.residuals.push_back(apply_Ehat(ctx, j, image));
    if (!check.residuals.back().is_zero()) check.singular = false;
  }
  return check;
}

std::optional<Combination> specialized(const Combination& combination, std::span<const Rational> exponents) {
  Combination out;
  for (const auto& [word, c] : combination) {
    auto value = c.specialized(exponents);
    if (!value) return std::nullopt;
    if (!value->is_zero()) out.emplace(word, std::move(*value));
  }
  return out;
}

nlohmann::json to_json(const SingularVectorBasis& result, bool residuals_pass) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : result.vectors) {
    nlohmann::json entry = nlohmann::json::object();
    for (const auto& [word, c] : v.combination) entry[compact_word(word)] = c.to_string();
    basis.push_back(std::move(entry));
  }
  return {{"multidegree", result.degree},
          {"dimension", result.dimension()},
          {"basis", basis},
          {"residual_checks", residuals_pass ? "pass" : "fail"}};
}

}  // namespace qsuper
