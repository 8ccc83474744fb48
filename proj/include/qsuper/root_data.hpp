#pragma once

// Simple-root data of a Lie superalgebra, given only through the Gram matrix
// n_ij = alpha_i . alpha_j and the set of odd simple roots.
//
// Indices are zero-based throughout the library. Text formats (config files,
// CLI tokens, rendered sequences) are one-based.

#include "qsuper/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qsuper {

using RationalMatrix = std::vector<std::vector<Rational>>;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RootDatum {
 public:
  /// Validates the invariants: rank >= 1, square symmetric Gram matrix,
  /// nonzero diagonal for every even root, odd indices in range and distinct.
  /// Throws ConfigError otherwise.
  RootDatum(RationalMatrix gram, std::vector<std::size_t> odd, std::string name = "custom");

  std::size_t rank() const { return gram_.size(); }
  const RationalMatrix& gram() const { return gram_; }
  const Rational& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const std::vector<std::size_t>& odd() const { return odd_; }
  const std::string& name() const { return name_; }

  bool is_odd(std::size_t i) const { return odd_mask_.at(i); }
  bool is_isotropic(std::size_t i) const { return gram_[i][i] == 0; }

 private:
  RationalMatrix gram_;
  std::vector<std::size_t> odd_;
  std::vector<bool> odd_mask_;
  std::string name_;
};

/// A_ij = 2 n_ij / n_ii for non-isotropic i, n_ij otherwise.
RationalMatrix cartan_matrix(const RootDatum& datum);

/// D_i = n_ii / 2 for non-isotropic i, 1 otherwise. D_i A_ij is symmetric.
std::vector<Rational> symmetrizers(const RootDatum& datum);

/// Z2 grading of E_i, F_i (and of the screening current S_i).
/// Throws std::out_of_range for i >= rank.
int parity(const RootDatum& datum, std::size_t i);

/// Braiding exponents in units of 1/t. numerators(i, j) = n_ij; the hatted
/// variant adds the parity product, which contributes the sign hat_signs(i, j).
struct OmegaData {
  RationalMatrix numerators;
  std::vector<std::vector<int>> hat_signs;
};

OmegaData omega_data(const RootDatum& datum);

/// Distinguished simple-root systems: sl2, sl3, sl2_1, osp1_2.
/// Throws ConfigError for an unknown name.
RootDatum catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// {"rank": r, "gram": [[...]], "odd": [1-based indices]}; entries are
/// integers or "p/q" strings. Throws ConfigError.
RootDatum parse_config(const nlohmann::json& config);
RootDatum load_config(const std::filesystem::path& path);
nlohmann::json to_config(const RootDatum& datum);

/// Weight of the highest-weight vector. A generic weight is carried by the
/// formal variables z_i = q^{-alpha_i . lambda}; a concrete weight is
/// lambda = sum_i coords[i] alpha_i.
struct GenericWeight {};
struct ConcreteWeight {
  std::vector<Rational> coords;
};
using Weight = std::variant<GenericWeight, ConcreteWeight>;

inline bool is_generic(const Weight& w) { return std::holds_alternative<GenericWeight>(w); }

/// alpha_j . lambda = sum_i c_i n_ji.
Rational root_pairing(const RootDatum& datum, std::size_t j, const ConcreteWeight& weight);
/// lambda . lambda' = c^T gram c'.
Rational weight_pairing(const RootDatum& datum, const ConcreteWeight& a, const ConcreteWeight& b);

/// Throws ConfigError when the coordinate count differs from the rank.
void check_weight(const RootDatum& datum, const Weight& weight);

}  // namespace qsuper
