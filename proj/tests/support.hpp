#pragma once

#include "qsuper/phase.hpp"

#include <ostream>
#include <random>

namespace qsuper {
inline void PrintTo(const PhaseScalar& x, std::ostream* os) { *os << x.to_string(); }
}  // namespace qsuper

namespace qsuper::testing {

inline PhaseScalar q(const Rational& a, std::size_t arity = 0) { return q_power(a, arity); }
inline PhaseScalar c(long value, std::size_t arity = 0) { return PhaseScalar::constant(Rational(value), arity); }

// Small random Laurent sum: up to 3 terms, half-integer q powers, z powers in [-2, 2].
inline LaurentSum random_sum(std::mt19937& rng, std::size_t arity) {
  std::uniform_int_distribution<int> terms(1, 3), coeff(-3, 3), qexp(-4, 4), zexp(-2, 2);
  LaurentSum out(arity);
  const int n = terms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m = Monomial::unit(arity);
    m.q = Rational(qexp(rng), 2);
    for (auto& e : m.z) e = zexp(rng);
    int v = coeff(rng);
    if (v == 0) v = 1;
    out.add_term(m, Rational(v));
  }
  return out;
}

inline PhaseScalar random_scalar(std::mt19937& rng, std::size_t arity) {
  LaurentSum den = random_sum(rng, arity);
  while (den.is_zero()) den = random_sum(rng, arity);
  return PhaseScalar(random_sum(rng, arity), den);
}

}  // namespace qsuper::testing
