#pragma once

// Double tensor module V_{lambda1} (x) V_{lambda2} at generic weights. The
// first factor uses z_1..z_r, the second z_{r+1}..z_{2r}.

#include "qsuper/algebra.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsuper {

using TensorBasis = std::pair<Sequence, Sequence>;

struct TensorBasisOrder {
  bool operator()(const TensorBasis& a, const TensorBasis& b) const {
    LengthLexOrder less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

std::string basis_label(const TensorBasis& basis);

class TensorContext {
 public:
  TensorContext(const RootDatum& datum, std::size_t depth, Faults faults = {});

  const ModuleContext& first() const { return first_; }
  const ModuleContext& second() const { return second_; }
  const RootDatum& datum() const { return first_.datum(); }
  std::size_t depth() const { return first_.depth(); }
  std::size_t arity() const { return first_.arity(); }
  const Faults& faults() const { return first_.faults(); }

  /// Pairs with each factor of length <= max_length.
  std::vector<TensorBasis> basis(std::size_t max_length) const;

 private:
  ModuleContext first_;
  ModuleContext second_;
};

class TensorVector {
 public:
  using Terms = std::map<TensorBasis, PhaseScalar, TensorBasisOrder>;

  explicit TensorVector(std::size_t arity = 0) : arity_(arity) {}

  static TensorVector basis(const TensorBasis& b, std::size_t arity);
  /// a (x) b, coefficients multiplied.
  static TensorVector outer(const ModuleVector& a, const ModuleVector& b);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const TensorBasis& b, const PhaseScalar& coeff);
  TensorVector scaled(const PhaseScalar& factor) const;

  TensorVector& operator+=(const TensorVector& other);
  TensorVector& operator-=(const TensorVector& other);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }

  friend bool operator==(const TensorVector& a, const TensorVector& b);

  std::string to_string() const;

 private:
  std::size_t arity_;
  Terms terms_;
};

/// (A1 (x) A2)(U1 (x) U2) = (-1)^{p(A2)p(U1)} A1(U1) (x) A2(U2), extended linearly.
TensorVector act_tensor(const TensorContext& ctx, const TensorElement& t, const TensorVector& v);

/// Contour C around both insertion points split as C_1 + C_2: the new contour
/// around the first factor, plus the crossing phase
/// prod_{i in I1} q^{n_ji} (-1)^{p(j)p(i)} * z_j^{(1)} times the new contour
/// around the second factor.
TensorVector coproduct_F_contour(const TensorContext& ctx, std::size_t j, const TensorVector& v);

}  // namespace qsuper
