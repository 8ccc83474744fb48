#include "qsuper/phase.hpp"

#include <algorithm>
#include <sstream>

namespace qsuper {

namespace {

void require_same_arity(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ArityMismatch("weight-variable arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Monomial order used by the division algorithm: lexicographic on
// (q, z_1, ..., z_N), larger exponent is larger.
bool lex_less(const Monomial& a, const Monomial& b) {
  if (a.q != b.q) return a.q < b.q;
  return a.z < b.z;
}

const LaurentSum::Terms::value_type& lex_leading(const LaurentSum& sum) {
  auto best = sum.terms().begin();
  for (auto it = sum.terms().begin(); it != sum.terms().end(); ++it) {
    if (lex_less(best->first, it->first)) best = it;
  }
  return *best;
}

bool nonnegative(const Monomial& m) {
  if (m.q < 0) return false;
  return std::all_of(m.z.begin(), m.z.end(), [](int e) { return e >= 0; });
}

// Componentwise minimum exponent over all terms.
Monomial min_exponents(const LaurentSum& sum) {
  auto it = sum.terms().begin();
  Monomial low = it->first;
  for (++it; it != sum.terms().end(); ++it) {
    if (it->first.q < low.q) low.q = it->first.q;
    for (std::size_t k = 0; k < low.z.size(); ++k) low.z[k] = std::min(low.z[k], it->first.z[k]);
  }
  return low;
}

int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

std::string exponent_text(const Rational& e) {
  if (is_integer(e)) return to_string(e);
  return "{" + to_string(e) + "}";
}

std::string monomial_text(const Monomial& m) {
  std::string out;
  auto append = [&out](const std::string& factor) {
    if (!out.empty()) out += "·";
    out += factor;
  };
  if (m.q != 0) append(m.q == 1 ? std::string("q") : "q^" + exponent_text(m.q));
  for (std::size_t k = 0; k < m.z.size(); ++k) {
    if (m.z[k] == 0) continue;
    std::string name = "z" + std::to_string(k + 1);
    append(m.z[k] == 1 ? name : name + "^" + std::to_string(m.z[k]));
  }
  return out;
}

std::string term_text(const Monomial& m, const Rational& c) {
  if (m.is_unit()) return to_string(c);
  if (c == 1) return monomial_text(m);
  if (c == -1) return "-" + monomial_text(m);
  return to_string(c) + "·" + monomial_text(m);
}

}  // namespace

bool Monomial::is_unit() const {
  return q == 0 && std::all_of(z.begin(), z.end(), [](int e) { return e == 0; });
}

Monomial Monomial::inverse() const {
  Monomial out{-q, z};
  for (auto& e : out.z) e = -e;
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_arity(arity(), other.arity());
  Monomial out{q + other.q, z};
  for (std::size_t k = 0; k < z.size(); ++k) out.z[k] += other.z[k];
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.q != b.q) return a.q > b.q;
  return a.z < b.z;
}

LaurentSum LaurentSum::constant(const Rational& value, std::size_t arity) {
  LaurentSum out(arity);
  out.add_term(Monomial::unit(arity), value);
  return out;
}

LaurentSum LaurentSum::monomial(const Monomial& key, const Rational& coeff) {
  LaurentSum out(key.arity());
  out.add_term(key, coeff);
  return out;
}

void LaurentSum::add_term(const Monomial& key, const Rational& coeff) {
  require_same_arity(arity_, key.arity());
  if (coeff == 0) return;
  // Callers may build mpq values without canonicalizing; map keys must be canonical.
  if (!is_canonical(key.q) || !is_canonical(coeff)) {
    Monomial k = key;
    k.q.canonicalize();
    Rational v = coeff;
    v.canonicalize();
    add_term(k, v);
    return;
  }
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentSum LaurentSum::scaled(const Rational& factor) const {
  LaurentSum out(arity_);
  if (factor == 0) return out;
  for (const auto& [key, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), key, c * factor);
  return out;
}

LaurentSum LaurentSum::shifted(const Monomial& factor) const {
  LaurentSum out(arity_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key * factor, c);
  return out;
}

LaurentSum& LaurentSum::operator+=(const LaurentSum& other) {
  require_same_arity(arity_, other.arity_);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

LaurentSum& LaurentSum::operator-=(const LaurentSum& other) {
  require_same_arity(arity_, other.arity_);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

LaurentSum operator*(const LaurentSum& a, const LaurentSum& b) {
  require_same_arity(a.arity_, b.arity_);
  LaurentSum out(a.arity_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka * kb, ca * cb);
  }
  return out;
}

std::string LaurentSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (first) {
      out = term_text(key, c);
      first = false;
    } else if (c < 0) {
      out += " - " + term_text(key, -c);
    } else {
      out += " + " + term_text(key, c);
    }
  }
  return out;
}

std::optional<LaurentSum> exact_divide(const LaurentSum& dividend, const LaurentSum& divisor) {
  require_same_arity(dividend.arity(), divisor.arity());
  if (divisor.is_zero()) throw std::domain_error("division by zero Laurent sum");
  if (dividend.is_zero()) return LaurentSum(dividend.arity());

  // Strip monomial content so both sides are polynomials not divisible by any
  // variable; Laurent divisibility then coincides with polynomial divisibility.
  const Monomial low_n = min_exponents(dividend);
  const Monomial low_d = min_exponents(divisor);
  LaurentSum rest = dividend.shifted(low_n.inverse());
  const LaurentSum poly_d = divisor.shifted(low_d.inverse());
  const auto& [lead_d, lead_c] = lex_leading(poly_d);

  LaurentSum quotient(dividend.arity());
  while (!rest.is_zero()) {
    const auto [lead_n, lead_nc] = lex_leading(rest);
    Monomial step = lead_n / lead_d;
    if (!nonnegative(step)) return std::nullopt;
    const Rational coeff = lead_nc / lead_c;
    quotient.add_term(step, coeff);
    rest -= poly_d.shifted(step).scaled(coeff);
  }
  return quotient.shifted(low_n / low_d);
}

PhaseScalar::PhaseScalar(std::size_t arity) : num_(arity), den_(LaurentSum::constant(Rational(1), arity)) {}

PhaseScalar::PhaseScalar(LaurentSum numerator)
    : num_(std::move(numerator)), den_(LaurentSum::constant(Rational(1), num_.arity())) {}

PhaseScalar::PhaseScalar(LaurentSum numerator, LaurentSum denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_arity(num_.arity(), den_.arity());
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

PhaseScalar PhaseScalar::constant(const Rational& value, std::size_t arity) {
  return PhaseScalar(LaurentSum::constant(value, arity));
}

bool PhaseScalar::is_laurent() const { return den_ == LaurentSum::constant(Rational(1), arity()); }

bool PhaseScalar::is_one() const { return num_ == den_; }

void PhaseScalar::normalize() {
  const std::size_t n = arity();
  if (num_.is_zero()) {
    den_ = LaurentSum::constant(Rational(1), n);
    return;
  }
  if (den_.size() == 1) {
    const auto& [key, c] = *den_.terms().begin();
    num_ = num_.shifted(key.inverse()).scaled(Rational(1) / c);
    den_ = LaurentSum::constant(Rational(1), n);
    return;
  }
  if (auto quotient = exact_divide(num_, den_)) {
    num_ = std::move(*quotient);
    den_ = LaurentSum::constant(Rational(1), n);
    return;
  }
  Monomial center = Monomial::unit(n);
  {
    auto it = den_.terms().begin();
    Rational q_lo = it->first.q;
    Rational q_hi = it->first.q;
    std::vector<int> z_lo = it->first.z;
    std::vector<int> z_hi = it->first.z;
    for (; it != den_.terms().end(); ++it) {
      q_lo = std::min(q_lo, it->first.q);
      q_hi = std::max(q_hi, it->first.q);
      for (std::size_t k = 0; k < n; ++k) {
        z_lo[k] = std::min(z_lo[k], it->first.z[k]);
        z_hi[k] = std::max(z_hi[k], it->first.z[k]);
      }
    }
    center.q = (q_lo + q_hi) / 2;
    for (std::size_t k = 0; k < n; ++k) center.z[k] = floor_half(z_lo[k] + z_hi[k]);
  }
  const Monomial shift = center.inverse();
  const Rational lead = Rational(1) / den_.terms().begin()->second;
  num_ = num_.shifted(shift).scaled(lead);
  den_ = den_.shifted(shift).scaled(lead);
}

PhaseScalar PhaseScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return PhaseScalar(den_, num_);
}

PhaseScalar PhaseScalar::lifted(std::size_t new_arity) const {
  if (arity() == new_arity) return *this;
  if (arity() != 0) {
    throw ArityMismatch("only arity-0 scalars can be lifted (arity " + std::to_string(arity()) + ")");
  }
  auto lift = [new_arity](const LaurentSum& sum) {
    LaurentSum out(new_arity);
    for (const auto& [key, c] : sum.terms()) out.add_term(Monomial{key.q, std::vector<int>(new_arity, 0)}, c);
    return out;
  };
  return PhaseScalar(lift(num_), lift(den_));
}

std::optional<PhaseScalar> PhaseScalar::specialized(std::span<const Rational> exponents) const {
  require_same_arity(arity(), exponents.size());
  auto substitute = [&exponents](const LaurentSum& sum) {
    LaurentSum out(0);
    for (const auto& [key, c] : sum.terms()) {
      Rational e = key.q;
      for (std::size_t k = 0; k < key.z.size(); ++k) e += key.z[k] * exponents[k];
      out.add_term(Monomial{e, {}}, c);
    }
    return out;
  };
  LaurentSum den = substitute(den_);
  if (den.is_zero()) return std::nullopt;
  return PhaseScalar(substitute(num_), std::move(den));
}

PhaseScalar& PhaseScalar::operator+=(const PhaseScalar& other) {
  require_same_arity(arity(), other.arity());
  if (other.is_zero()) return *this;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

PhaseScalar& PhaseScalar::operator-=(const PhaseScalar& other) { return *this += -other; }

PhaseScalar& PhaseScalar::operator*=(const PhaseScalar& other) {
  require_same_arity(arity(), other.arity());
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = other;
  if (other.is_laurent()) {
    num_ = num_ * other.num_;
  } else if (is_laurent()) {
    num_ = num_ * other.num_;
    den_ = other.den_;
  } else {
    num_ = num_ * other.num_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

PhaseScalar& PhaseScalar::operator/=(const PhaseScalar& other) { return *this *= other.inverse(); }

PhaseScalar PhaseScalar::operator-() const {
  PhaseScalar out = *this;
  out.num_ = -out.num_;
  return out;
}

bool operator==(const PhaseScalar& a, const PhaseScalar& b) {
  require_same_arity(a.arity(), b.arity());
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string PhaseScalar::to_string() const {
  if (is_laurent()) return num_.to_string();
  auto wrap = [](const LaurentSum& s) { return s.size() > 1 ? "(" + s.to_string() + ")" : s.to_string(); };
  return wrap(num_) + "/" + wrap(den_);
}

PhaseScalar q_power(const Rational& a, std::size_t arity) {
  Monomial key = Monomial::unit(arity);
  key.q = a;
  return PhaseScalar(LaurentSum::monomial(key));
}

PhaseScalar z_power(std::size_t k, int n, std::size_t arity) {
  if (k >= arity) throw std::out_of_range("weight variable index out of range");
  Monomial key = Monomial::unit(arity);
  key.z[k] = n;
  return PhaseScalar(LaurentSum::monomial(key));
}

PhaseScalar pow(const PhaseScalar& base, int n) {
  if (n < 0) return pow(base.inverse(), -n);
  PhaseScalar out = PhaseScalar::one(base.arity());
  PhaseScalar square = base;
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) out *= square;
    if (e > 1) square *= square;
  }
  return out;
}

PhaseScalar q_number(unsigned a, const PhaseScalar& base) {
  PhaseScalar sum = PhaseScalar::zero(base.arity());
  PhaseScalar power = PhaseScalar::one(base.arity());
  for (unsigned k = 0; k < a; ++k) {
    sum += power;
    power *= base;
  }
  return sum;
}

}  // namespace qsuper
