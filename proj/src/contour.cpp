#include "qsuper/contour.hpp"

#include <charconv>
#include <sstream>

namespace qsuper {

Generator parse_generator(std::string_view token) {
  auto fail = [&token]() -> Generator {
    throw std::invalid_argument("cannot parse generator token '" + std::string(token) + "'");
  };
  if (token.size() < 2) return fail();
  GeneratorKind kind;
  switch (token.front()) {
    case 'E': kind = GeneratorKind::E; break;
    case 'F': kind = GeneratorKind::F; break;
    case 'K': kind = GeneratorKind::K; break;
    default: return fail();
  }
  std::string_view digits = token.substr(1);
  if (kind == GeneratorKind::K && digits.back() == '-') {
    kind = GeneratorKind::KInverse;
    digits.remove_suffix(1);
  }
  std::size_t index = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size() || index == 0) return fail();
  return Generator{kind, index - 1};
}

Word parse_word(std::string_view text) {
  Word word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) word.push_back(parse_generator(token));
  return word;
}

std::string to_string(const Generator& g) {
  const std::string i = std::to_string(g.index + 1);
  switch (g.kind) {
    case GeneratorKind::E: return "E" + i;
    case GeneratorKind::F: return "F" + i;
    case GeneratorKind::K: return "K" + i;
    case GeneratorKind::KInverse: return "K" + i + "-";
  }
  return "?";
}

std::string to_string(const Word& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out.empty() ? "1" : out;
}

int generator_parity(const RootDatum& datum, const Generator& g) {
  if (g.kind == GeneratorKind::K || g.kind == GeneratorKind::KInverse) return 0;
  return parity(datum, g.index);
}

int word_parity(const RootDatum& datum, const Word& word) {
  int p = 0;
  for (const auto& g : word) p ^= generator_parity(datum, g);
  return p;
}

std::string basis_label(const Sequence& seq) {
  std::string out = "U[";
  for (std::size_t l = 0; l < seq.size(); ++l) {
    if (l) out += ',';
    out += std::to_string(seq[l] + 1);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

ModuleContext::ModuleContext(RootDatum datum, Weight weight, std::size_t depth, Faults faults)
    : datum_(std::move(datum)),
      omega_(omega_data(datum_)),
      weight_(std::move(weight)),
      depth_(depth),
      layout_{0, is_generic(weight_) ? datum_.rank() : 0},
      faults_(faults) {
  if (depth_ < 1) throw ConfigError("depth must be at least 1");
  check_weight(datum_, weight_);
  const auto d = symmetrizers(datum_);
  for (std::size_t j = 0; j < datum_.rank(); ++j) {
    normalization_.push_back(q_pow(d[j]) - q_pow(-d[j]));
  }
}

ModuleContext::ModuleContext(RootDatum datum, std::size_t depth, VariableLayout layout, Faults faults)
    : ModuleContext(std::move(datum), GenericWeight{}, depth, faults) {
  if (layout.offset + rank() > layout.arity) throw ArityMismatch("variable layout does not fit the rank");
  layout_ = layout;
  const auto d = symmetrizers(datum_);
  normalization_.clear();
  for (std::size_t j = 0; j < datum_.rank(); ++j) {
    normalization_.push_back(q_pow(d[j]) - q_pow(-d[j]));
  }
}

PhaseScalar ModuleContext::weight_phase(std::size_t j, int power) const {
  if (const auto* concrete = std::get_if<ConcreteWeight>(&weight_)) {
    return q_pow(-power * root_pairing(datum_, j, *concrete));
  }
  return z_power(layout_.offset + j, power, layout_.arity);
}

int ModuleContext::hat_sign(std::size_t i, std::size_t j) const {
  if (faults_.hat_sign) return 1;
  return omega_.hat_signs[i][j];
}

int ModuleContext::sequence_parity(const Sequence& seq) const {
  int p = 0;
  for (std::size_t i : seq) p ^= parity(datum_, i);
  return p;
}

std::vector<Sequence> ModuleContext::basis(std::size_t max_length) const {
  std::vector<Sequence> out{Sequence{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (std::size_t i = 0; i < rank(); ++i) {
        Sequence next = out[k];
        next.push_back(i);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

// ---------------------------------------------------------------------------

ModuleVector ModuleVector::basis(const Sequence& seq, std::size_t arity) {
  ModuleVector v(arity);
  v.add(seq, PhaseScalar::one(arity));
  return v;
}

void ModuleVector::add(const Sequence& seq, const PhaseScalar& coeff) {
  if (coeff.arity() != arity_) throw ArityMismatch("module coefficient arity mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(seq, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  for (const auto& [seq, c] : other.terms_) add(seq, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  for (const auto& [seq, c] : other.terms_) add(seq, -c);
  return *this;
}

ModuleVector ModuleVector::scaled(const PhaseScalar& factor) const {
  ModuleVector out(arity_);
  if (factor.is_zero()) return out;
  for (const auto& [seq, c] : terms_) out.add(seq, c * factor);
  return out;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [seq, c] : a.terms_) {
    if (seq != ib->first || c != ib->second) return false;
    ++ib;
  }
  return true;
}

std::string ModuleVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [seq, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c.is_one()) {
      out += basis_label(seq);
      continue;
    }
    std::string coeff = c.to_string();
    if (c.is_laurent() && c.numerator().size() > 1) coeff = "(" + coeff + ")";
    out += coeff + " · " + basis_label(seq);
  }
  return out;
}

std::optional<ModuleVector> specialized(const ModuleVector& v, std::span<const Rational> exponents) {
  ModuleVector out(0);
  for (const auto& [seq, c] : v.terms()) {
    auto value = c.specialized(exponents);
    if (!value) return std::nullopt;
    out.add(seq, *value);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_index(const ModuleContext& ctx, std::size_t j) {
  if (j >= ctx.rank()) throw std::out_of_range("generator index " + std::to_string(j + 1) + " out of range");
}

void check_arity(const ModuleContext& ctx, const ModuleVector& v) {
  if (v.arity() != ctx.arity()) throw ArityMismatch("module vector arity does not match its context");
}

}  // namespace

PhaseScalar k_eigenvalue(const ModuleContext& ctx, std::size_t j, int sign, const Sequence& seq) {
  Rational exponent = 0;
  for (std::size_t i : seq) exponent -= ctx.omega().numerators[j][i];
  return ctx.q_pow(sign * exponent) * ctx.weight_phase(j, -sign);
}

ModuleVector ehat_on_basis(const ModuleContext& ctx, std::size_t j, const Sequence& seq) {
  const auto& n = ctx.omega().numerators;
  const std::size_t len = seq.size();
  // inner[l] = sum of n_{j, i_l'} over positions l' > l.
  std::vector<Rational> inner(len + 1, Rational(0));
  for (std::size_t l = len; l-- > 0;) inner[l] = inner[l + 1] + (l + 1 < len ? n[j][seq[l + 1]] : Rational(0));

  std::map<Sequence, LaurentSum, LengthLexOrder> numerators;
  Rational outer = 0;
  int outer_sign = 1;
  const PhaseScalar z_sq = ctx.weight_phase(j, 2);
  for (std::size_t l = 0; l < len; ++l) {
    if (seq[l] == j) {
      PhaseScalar coeff = PhaseScalar::one(ctx.arity()) - ctx.q_pow(2 * inner[l]) * z_sq;
      if (!ctx.faults().ehat_prefactor) {
        coeff = coeff * ctx.q_pow(outer);
        if (outer_sign < 0) coeff = -coeff;
      }
      Sequence removed;
      removed.reserve(len - 1);
      removed.insert(removed.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(l));
      removed.insert(removed.end(), seq.begin() + static_cast<std::ptrdiff_t>(l + 1), seq.end());
      auto [it, inserted] = numerators.try_emplace(removed, LaurentSum(ctx.arity()));
      it->second += coeff.numerator();
    }
    outer += n[j][seq[l]];
    outer_sign *= ctx.hat_sign(j, seq[l]);
  }

  ModuleVector out(ctx.arity());
  const auto& norm = ctx.normalization(j);
  for (auto& [target, numerator] : numerators) {
    out.add(target, PhaseScalar(numerator * norm.denominator(), norm.numerator()));
  }
  return out;
}

ModuleVector apply_F(const ModuleContext& ctx, std::size_t j, const ModuleVector& v) {
  check_index(ctx, j);
  check_arity(ctx, v);
  ModuleVector out(ctx.arity());
  for (const auto& [seq, c] : v.terms()) {
    if (seq.size() >= ctx.depth()) {
      throw DepthExceeded("F" + std::to_string(j + 1) + " on " + basis_label(seq) + " exceeds depth " +
                          std::to_string(ctx.depth()));
    }
    Sequence next;
    next.reserve(seq.size() + 1);
    next.push_back(j);
    next.insert(next.end(), seq.begin(), seq.end());
    out.add(next, c);
  }
  return out;
}

ModuleVector apply_K(const ModuleContext& ctx, std::size_t j, int sign, const ModuleVector& v) {
  check_index(ctx, j);
  check_arity(ctx, v);
  ModuleVector out(ctx.arity());
  for (const auto& [seq, c] : v.terms()) out.add(seq, c * k_eigenvalue(ctx, j, sign, seq));
  return out;
}

ModuleVector apply_Ehat(const ModuleContext& ctx, std::size_t j, const ModuleVector& v) {
  check_index(ctx, j);
  check_arity(ctx, v);
  ModuleVector out(ctx.arity());
  for (const auto& [seq, c] : v.terms()) out += ehat_on_basis(ctx, j, seq).scaled(c);
  return out;
}

ModuleVector apply_E(const ModuleContext& ctx, std::size_t j, const ModuleVector& v) {
  return apply_K(ctx, j, +1, apply_Ehat(ctx, j, v));
}

ModuleVector apply_generator(const ModuleContext& ctx, const Generator& g, const ModuleVector& v) {
  switch (g.kind) {
    case GeneratorKind::E: return apply_E(ctx, g.index, v);
    case GeneratorKind::F: return apply_F(ctx, g.index, v);
    case GeneratorKind::K: return apply_K(ctx, g.index, +1, v);
    case GeneratorKind::KInverse: return apply_K(ctx, g.index, -1, v);
  }
  return v;
}

ModuleVector apply_word(const ModuleContext& ctx, const Word& word, const ModuleVector& v) {
  ModuleVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (out.is_zero()) break;
    out = apply_generator(ctx, *it, out);
  }
  return out;
}

}  // namespace qsuper
