#include "qsuper/algebra.hpp"

#include <stdexcept>

namespace qsuper {

namespace {

PhaseScalar one() { return PhaseScalar::one(0); }

std::string coefficient_prefix(const PhaseScalar& c) {
  if (c.is_one()) return "";
  if (c == -one()) return "-";
  std::string text = c.to_string();
  if (c.is_laurent() && c.numerator().size() > 1) text = "(" + text + ")";
  return text + "·";
}

Generator inverse_k(const Generator& g) {
  return Generator{g.kind == GeneratorKind::K ? GeneratorKind::KInverse : GeneratorKind::K, g.index};
}

}  // namespace

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::from_word(const Word& word, const PhaseScalar& coeff) {
  AlgebraElement x;
  x.add(word, coeff);
  return x;
}

void AlgebraElement::add(const Word& word, const PhaseScalar& coeff) {
  if (coeff.arity() != 0) throw ArityMismatch("algebra coefficients must be pure q-scalars");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::scaled(const PhaseScalar& factor) const {
  AlgebraElement out;
  for (const auto& [w, c] : terms_) out.add(w, c * factor);
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(c) + qsuper::to_string(w);
  }
  return out;
}

// ---------------------------------------------------------------------------

TensorElement TensorElement::from_key(const Key& key, const PhaseScalar& coeff) {
  TensorElement t(key.size());
  t.add(key, coeff);
  return t;
}

void TensorElement::add(const Key& key, const PhaseScalar& coeff) {
  if (key.size() != factors_) throw std::invalid_argument("tensor key has the wrong number of factors");
  if (coeff.arity() != 0) throw ArityMismatch("tensor coefficients must be pure q-scalars");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::scaled(const PhaseScalar& factor) const {
  TensorElement out(factors_);
  for (const auto& [k, c] : terms_) out.add(k, c * factor);
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.factors_ == b.factors_ && a.terms_ == b.terms_;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string body;
    for (const auto& w : key) {
      if (!body.empty()) body += " ⊗ ";
      body += w.size() > 1 ? "(" + qsuper::to_string(w) + ")" : qsuper::to_string(w);
    }
    out += coefficient_prefix(c) + body;
  }
  return out;
}

TensorElement multiply(const RootDatum& datum, const TensorElement& a, const TensorElement& b) {
  if (a.factors() != b.factors()) throw std::invalid_argument("tensor factor counts differ");
  const std::size_t k = a.factors();
  TensorElement out(k);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // Moving b's factor m past a's factors m+1..k-1.
      int sign_parity = 0;
      for (std::size_t m = 0; m < k; ++m) {
        const int pb = word_parity(datum, kb[m]);
        if (!pb) continue;
        for (std::size_t later = m + 1; later < k; ++later) sign_parity ^= word_parity(datum, ka[later]);
      }
      TensorElement::Key key(k);
      for (std::size_t m = 0; m < k; ++m) {
        key[m] = ka[m];
        key[m].insert(key[m].end(), kb[m].begin(), kb[m].end());
      }
      PhaseScalar c = ca * cb;
      out.add(key, sign_parity ? -c : c);
    }
  }
  return out;
}

TensorElement coproduct(const Generator& g) {
  TensorElement t(2);
  switch (g.kind) {
    case GeneratorKind::F:
      t.add({{g}, {}}, one());
      t.add({{inverse_k(Generator{GeneratorKind::K, g.index})}, {g}}, one());
      break;
    case GeneratorKind::E:
      t.add({{g}, {Generator{GeneratorKind::K, g.index}}}, one());
      t.add({{}, {g}}, one());
      break;
    case GeneratorKind::K:
    case GeneratorKind::KInverse:
      t.add({{g}, {g}}, one());
      break;
  }
  return t;
}

TensorElement coproduct(const RootDatum& datum, const AlgebraElement& x) {
  TensorElement out(2);
  for (const auto& [w, c] : x.terms()) {
    TensorElement product = TensorElement::from_key({{}, {}});
    for (const auto& g : w) product = multiply(datum, product, coproduct(g));
    out += product.scaled(c);
  }
  return out;
}

TensorElement coproduct_first(const RootDatum& datum, const TensorElement& t) {
  if (t.factors() != 2) throw std::invalid_argument("expected a two-fold tensor");
  TensorElement out(3);
  for (const auto& [key, c] : t.terms()) {
    const TensorElement split = coproduct(datum, AlgebraElement::from_word(key[0]));
    for (const auto& [inner, ci] : split.terms()) {
      out.add({inner[0], inner[1], key[1]}, c * ci);
    }
  }
  return out;
}

TensorElement coproduct_second(const RootDatum& datum, const TensorElement& t) {
  if (t.factors() != 2) throw std::invalid_argument("expected a two-fold tensor");
  TensorElement out(3);
  for (const auto& [key, c] : t.terms()) {
    const TensorElement split = coproduct(datum, AlgebraElement::from_word(key[1]));
    for (const auto& [inner, ci] : split.terms()) {
      out.add({key[0], inner[0], inner[1]}, c * ci);
    }
  }
  return out;
}

AlgebraElement antipode(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::E:
      return AlgebraElement::from_word({g, Generator{GeneratorKind::KInverse, g.index}}, -one());
    case GeneratorKind::F:
      return AlgebraElement::from_word({Generator{GeneratorKind::K, g.index}, g}, -one());
    case GeneratorKind::K:
    case GeneratorKind::KInverse:
      return AlgebraElement::from_generator(inverse_k(g));
  }
  return {};
}

AlgebraElement antipode(const RootDatum& datum, const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [w, c] : x.terms()) {
    // Reversing the word costs (-1)^{p_a p_b} for every pair of letters.
    int odd_letters = 0;
    for (const auto& g : w) odd_letters += generator_parity(datum, g);
    const bool negate = (odd_letters * (odd_letters - 1) / 2) % 2 != 0;
    AlgebraElement product = AlgebraElement::unit();
    for (auto it = w.rbegin(); it != w.rend(); ++it) product = product * antipode(*it);
    out += product.scaled(negate ? -c : c);
  }
  return out;
}

PhaseScalar counit(const Generator& g) {
  return (g.kind == GeneratorKind::K || g.kind == GeneratorKind::KInverse) ? one() : PhaseScalar::zero(0);
}

PhaseScalar counit(const AlgebraElement& x) {
  PhaseScalar sum = PhaseScalar::zero(0);
  for (const auto& [w, c] : x.terms()) {
    PhaseScalar value = c;
    for (const auto& g : w) value *= counit(g);
    sum += value;
  }
  return sum;
}

AlgebraElement counit_first(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [key, c] : t.terms()) out.add(key.at(1), c * counit(AlgebraElement::from_word(key[0])));
  return out;
}

AlgebraElement counit_second(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [key, c] : t.terms()) out.add(key.at(0), c * counit(AlgebraElement::from_word(key[1])));
  return out;
}

AlgebraElement antipode_first(const RootDatum& datum, const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [key, c] : t.terms()) {
    out += (antipode(datum, AlgebraElement::from_word(key.at(0))) * AlgebraElement::from_word(key.at(1))).scaled(c);
  }
  return out;
}

AlgebraElement antipode_second(const RootDatum& datum, const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [key, c] : t.terms()) {
    out += (AlgebraElement::from_word(key.at(0)) * antipode(datum, AlgebraElement::from_word(key.at(1)))).scaled(c);
  }
  return out;
}

ModuleVector apply_element(const ModuleContext& ctx, const AlgebraElement& x, const ModuleVector& v) {
  ModuleVector out(ctx.arity());
  for (const auto& [w, c] : x.terms()) out += apply_word(ctx, w, v).scaled(c.lifted(ctx.arity()));
  return out;
}

}  // namespace qsuper
