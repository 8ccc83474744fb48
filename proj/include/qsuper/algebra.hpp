#pragma once

// Formal words in E_i, F_i, K_i^{+-1}, their tensor products, and the Hopf
// structure maps (coproduct, antipode, counit) on them.
//
// Words are kept as written; no normal ordering is attempted. Identities that
// need the algebra relations are decided through the action on modules.
// Coefficients are pure q-scalars (arity 0).

#include "qsuper/contour.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsuper {

class AlgebraElement {
 public:
  using Terms = std::map<Word, PhaseScalar>;

  AlgebraElement() = default;

  static AlgebraElement unit() { return from_word({}); }
  static AlgebraElement from_word(const Word& word, const PhaseScalar& coeff = PhaseScalar::one(0));
  static AlgebraElement from_generator(const Generator& g) { return from_word({g}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& word, const PhaseScalar& coeff);
  AlgebraElement scaled(const PhaseScalar& factor) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  /// Concatenation product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  /// Literal equality of the stored words and coefficients.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Linear combination of k-fold tensor words.
class TensorElement {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, PhaseScalar>;

  explicit TensorElement(std::size_t factors) : factors_(factors) {}

  static TensorElement from_key(const Key& key, const PhaseScalar& coeff = PhaseScalar::one(0));

  std::size_t factors() const { return factors_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& key, const PhaseScalar& coeff);
  TensorElement scaled(const PhaseScalar& factor) const;

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

  friend bool operator==(const TensorElement& a, const TensorElement& b);

  std::string to_string() const;

 private:
  std::size_t factors_;
  Terms terms_;
};

/// Super tensor product: (A (x) B)(C (x) D) = (-1)^{p(B)p(C)} AC (x) BD,
/// generalized to k factors.
TensorElement multiply(const RootDatum& datum, const TensorElement& a, const TensorElement& b);

/// Delta(F_j) = F_j (x) 1 + K_j^{-1} (x) F_j, Delta(K_j^{+-1}) = K_j^{+-1} (x) K_j^{+-1},
/// Delta(E_j) = E_j (x) K_j + 1 (x) E_j.
TensorElement coproduct(const Generator& g);
/// Extension to words as a superalgebra homomorphism.
TensorElement coproduct(const RootDatum& datum, const AlgebraElement& x);
/// (Delta (x) id) and (id (x) Delta) on a two-fold tensor.
TensorElement coproduct_first(const RootDatum& datum, const TensorElement& t);
TensorElement coproduct_second(const RootDatum& datum, const TensorElement& t);

/// gamma(E_j) = -E_j K_j^{-1}, gamma(K_j^{+-1}) = K_j^{-+1}, gamma(F_j) = -K_j F_j.
AlgebraElement antipode(const Generator& g);
/// Super anti-homomorphism: gamma(xy) = (-1)^{p(x)p(y)} gamma(y) gamma(x).
AlgebraElement antipode(const RootDatum& datum, const AlgebraElement& x);

/// epsilon(E_j) = epsilon(F_j) = 0, epsilon(K_j^{+-1}) = 1.
PhaseScalar counit(const Generator& g);
PhaseScalar counit(const AlgebraElement& x);

/// (epsilon (x) id) and (id (x) epsilon) on a two-fold tensor.
AlgebraElement counit_first(const TensorElement& t);
AlgebraElement counit_second(const TensorElement& t);
/// m (gamma (x) id) and m (id (x) gamma) on a two-fold tensor.
AlgebraElement antipode_first(const RootDatum& datum, const TensorElement& t);
AlgebraElement antipode_second(const RootDatum& datum, const TensorElement& t);

/// Sum of coefficient * word acting on v.
ModuleVector apply_element(const ModuleContext& ctx, const AlgebraElement& x, const ModuleVector& v);

}  // namespace qsuper
