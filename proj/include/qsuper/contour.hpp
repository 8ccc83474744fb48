#pragma once

// Representation space of screened vertex operators U_{lambda,I} and the
// actions of F_j, K_j^{+-1}, E^_j and E_j = K_j E^_j on it.
//
// A basis vector is labelled by the ordered screening sequence I. Position 0
// is the outermost contour; F_j prepends a new outermost contour.

#include "qsuper/phase.hpp"
#include "qsuper/root_data.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsuper {

class DepthExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class GeneratorKind { E, F, K, KInverse };

struct Generator {
  GeneratorKind kind;
  std::size_t index;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Product of generators, written left to right and acting right to left.
using Word = std::vector<Generator>;

/// Tokens "E<i>", "F<i>", "K<i>", "K<i>-" with one-based i.
/// Throws std::invalid_argument on anything else.
Generator parse_generator(std::string_view token);
/// Whitespace-separated tokens; the empty string is the empty word.
Word parse_word(std::string_view text);
std::string to_string(const Generator& g);
std::string to_string(const Word& word);

int generator_parity(const RootDatum& datum, const Generator& g);
int word_parity(const RootDatum& datum, const Word& word);

using Sequence = std::vector<std::size_t>;

/// Shorter sequences first, then lexicographic.
struct LengthLexOrder {
  bool operator()(const Sequence& a, const Sequence& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// "U[1,2]" (one-based).
std::string basis_label(const Sequence& seq);

/// Convention switches used only to demonstrate that the verification suites
/// detect a wrong sign or prefactor.
struct Faults {
  bool hat_sign = false;        ///< drop the parity term of the hatted braiding exponent
  bool tensor_sign = false;     ///< drop the super interchange sign on tensor products
  bool ehat_prefactor = false;  ///< drop the crossing factor of outer contours in E^_j
};

/// Where the z variables of this module live inside a larger context.
struct VariableLayout {
  std::size_t offset = 0;
  std::size_t arity = 0;
};

class ModuleContext {
 public:
  /// Generic weights use arity = rank; concrete weights use arity 0.
  ModuleContext(RootDatum datum, Weight weight, std::size_t depth, Faults faults = {});
  /// Generic weight with z_j placed at variable layout.offset + j.
  ModuleContext(RootDatum datum, std::size_t depth, VariableLayout layout, Faults faults = {});

  const RootDatum& datum() const { return datum_; }
  const OmegaData& omega() const { return omega_; }
  const Weight& weight() const { return weight_; }
  std::size_t depth() const { return depth_; }
  std::size_t rank() const { return datum_.rank(); }
  std::size_t arity() const { return layout_.arity; }
  const Faults& faults() const { return faults_; }

  /// (e^{i pi Omega_{j lambda}})^power: z_j^power, or q^{-power alpha_j.lambda}.
  PhaseScalar weight_phase(std::size_t j, int power) const;
  PhaseScalar q_pow(const Rational& exponent) const { return q_power(exponent, arity()); }
  /// q_j - q_j^{-1} with q_j = q^{D_j}.
  const PhaseScalar& normalization(std::size_t j) const { return normalization_.at(j); }
  /// Sign (-1)^{p(i)p(j)} of the hatted braiding exponent, honouring faults.
  int hat_sign(std::size_t i, std::size_t j) const;

  int sequence_parity(const Sequence& seq) const;
  /// All sequences of length <= max_length in length-lexicographic order.
  std::vector<Sequence> basis(std::size_t max_length) const;

 private:
  RootDatum datum_;
  OmegaData omega_;
  Weight weight_;
  std::size_t depth_;
  VariableLayout layout_;
  Faults faults_;
  std::vector<PhaseScalar> normalization_;
};

/// Sparse linear combination of basis vectors U_{lambda,I}.
class ModuleVector {
 public:
  using Terms = std::map<Sequence, PhaseScalar, LengthLexOrder>;

  explicit ModuleVector(std::size_t arity = 0) : arity_(arity) {}

  static ModuleVector basis(const Sequence& seq, std::size_t arity);
  /// V_lambda = U_{lambda, empty}.
  static ModuleVector highest_weight(std::size_t arity) { return basis({}, arity); }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Sequence& seq, const PhaseScalar& coeff);

  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  ModuleVector scaled(const PhaseScalar& factor) const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  /// "c1 · U[..] + c2 · U[..]" in length-lexicographic order; "0" when empty.
  std::string to_string() const;

 private:
  std::size_t arity_;
  Terms terms_;
};

ModuleVector apply_F(const ModuleContext& ctx, std::size_t j, const ModuleVector& v);
/// sign = +1 for K_j, -1 for K_j^{-1}.
ModuleVector apply_K(const ModuleContext& ctx, std::size_t j, int sign, const ModuleVector& v);
ModuleVector apply_Ehat(const ModuleContext& ctx, std::size_t j, const ModuleVector& v);
ModuleVector apply_E(const ModuleContext& ctx, std::size_t j, const ModuleVector& v);
ModuleVector apply_generator(const ModuleContext& ctx, const Generator& g, const ModuleVector& v);
ModuleVector apply_word(const ModuleContext& ctx, const Word& word, const ModuleVector& v);

/// Substitutes z_k -> q^{exponents[k]} in every coefficient. Returns nullopt
/// when some coefficient's denominator vanishes.
std::optional<ModuleVector> specialized(const ModuleVector& v, std::span<const Rational> exponents);

/// E^_j on a single basis vector, as (sequence, coefficient) pairs.
ModuleVector ehat_on_basis(const ModuleContext& ctx, std::size_t j, const Sequence& seq);
/// Eigenvalue of K_j^{sign} on U_{lambda,seq}.
PhaseScalar k_eigenvalue(const ModuleContext& ctx, std::size_t j, int sign, const Sequence& seq);

}  // namespace qsuper
