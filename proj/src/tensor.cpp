#include "qsuper/tensor.hpp"

namespace qsuper {

std::string basis_label(const TensorBasis& basis) {
  return basis_label(basis.first) + " ⊗ " + basis_label(basis.second);
}

TensorContext::TensorContext(const RootDatum& datum, std::size_t depth, Faults faults)
    : first_(datum, depth, VariableLayout{0, 2 * datum.rank()}, faults),
      second_(datum, depth, VariableLayout{datum.rank(), 2 * datum.rank()}, faults) {}

std::vector<TensorBasis> TensorContext::basis(std::size_t max_length) const {
  const auto single = first_.basis(max_length);
  std::vector<TensorBasis> out;
  out.reserve(single.size() * single.size());
  for (const auto& a : single) {
    for (const auto& b : single) out.emplace_back(a, b);
  }
  return out;
}

TensorVector TensorVector::basis(const TensorBasis& b, std::size_t arity) {
  TensorVector v(arity);
  v.add(b, PhaseScalar::one(arity));
  return v;
}

TensorVector TensorVector::outer(const ModuleVector& a, const ModuleVector& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("tensor factors live in different contexts");
  TensorVector out(a.arity());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) out.add({sa, sb}, ca * cb);
  }
  return out;
}

void TensorVector::add(const TensorBasis& b, const PhaseScalar& coeff) {
  if (coeff.arity() != arity_) throw ArityMismatch("tensor coefficient arity mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorVector TensorVector::scaled(const PhaseScalar& factor) const {
  TensorVector out(arity_);
  if (factor.is_zero()) return out;
  for (const auto& [b, c] : terms_) out.add(b, c * factor);
  return out;
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& other) {
  for (const auto& [b, c] : other.terms_) add(b, -c);
  return *this;
}

bool operator==(const TensorVector& a, const TensorVector& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [key, c] : a.terms_) {
    if (key != ib->first || c != ib->second) return false;
    ++ib;
  }
  return true;
}

std::string TensorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c.is_one()) {
      out += basis_label(key);
      continue;
    }
    std::string coeff = c.to_string();
    if (c.is_laurent() && c.numerator().size() > 1) coeff = "(" + coeff + ")";
    out += coeff + " · (" + basis_label(key) + ")";
  }
  return out;
}

TensorVector act_tensor(const TensorContext& ctx, const TensorElement& t, const TensorVector& v) {
  if (t.factors() != 2) throw std::invalid_argument("act_tensor needs a two-fold tensor element");
  if (v.arity() != ctx.arity()) throw ArityMismatch("tensor vector arity does not match its context");
  const std::size_t n = ctx.arity();
  TensorVector out(n);
  for (const auto& [key, c] : t.terms()) {
    const int p_second = word_parity(ctx.datum(), key[1]);
    const PhaseScalar coeff = c.lifted(n);
    for (const auto& [basis, d] : v.terms()) {
      const ModuleVector left = apply_word(ctx.first(), key[0], ModuleVector::basis(basis.first, n));
      if (left.is_zero()) continue;
      const ModuleVector right = apply_word(ctx.second(), key[1], ModuleVector::basis(basis.second, n));
      if (right.is_zero()) continue;
      const bool negate = !ctx.faults().tensor_sign && (p_second & ctx.first().sequence_parity(basis.first));
      const PhaseScalar factor = negate ? -(coeff * d) : coeff * d;
      out += TensorVector::outer(left, right).scaled(factor);
    }
  }
  return out;
}

TensorVector coproduct_F_contour(const TensorContext& ctx, std::size_t j, const TensorVector& v) {
  if (v.arity() != ctx.arity()) throw ArityMismatch("tensor vector arity does not match its context");
  const auto& first = ctx.first();
  const std::size_t n = ctx.arity();
  TensorVector out(n);
  for (const auto& [basis, d] : v.terms()) {
    const auto& [seq1, seq2] = basis;
    const ModuleVector inner_first = apply_F(first, j, ModuleVector::basis(seq1, n));
    out += TensorVector::outer(inner_first, ModuleVector::basis(seq2, n)).scaled(d);

    Rational exponent = 0;
    int sign = 1;
    for (std::size_t i : seq1) {
      exponent += first.omega().numerators[j][i];
      sign *= first.hat_sign(j, i);
    }
    PhaseScalar crossing = first.q_pow(exponent) * first.weight_phase(j, 1);
    if (sign < 0) crossing = -crossing;
    const ModuleVector inner_second = apply_F(ctx.second(), j, ModuleVector::basis(seq2, n));
    out += TensorVector::outer(ModuleVector::basis(seq1, n), inner_second).scaled(crossing * d);
  }
  return out;
}

}  // namespace qsuper
