#pragma once

#include "qsuper/phase.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace qsuper::oracle {

// Evaluates the E^ formula directly at rational q and z (integer Gram entries,
// unit symmetrizers) and solves the singular-vector system by plain Gaussian
// elimination over Q. Shares no code with the library beyond mpq.

inline Rational ipow(const Rational& base, long n) {
  Rational out = 1;
  for (long k = 0; k < std::abs(n); ++k) out *= base;
  return n < 0 ? Rational(1) / out : out;
}

using NumVector = std::map<std::vector<int>, Rational>;

inline NumVector numeric_ehat(const std::vector<std::vector<long>>& gram, const std::vector<int>& odd, const Rational& qv,
                       const std::vector<Rational>& z, int j, const std::vector<int>& seq) {
  NumVector out;
  for (std::size_t l = 0; l < seq.size(); ++l) {
    if (seq[l] != j) continue;
    long inner = 0;
    for (std::size_t m = l + 1; m < seq.size(); ++m) inner += gram[j][seq[m]];
    Rational outer = 1;
    for (std::size_t m = 0; m < l; ++m) {
      outer *= ipow(qv, gram[j][seq[m]]);
      if (odd[j] && odd[seq[m]]) outer = -outer;
    }
    const Rational coeff = (1 - ipow(qv, 2 * inner) * z[j] * z[j]) / (qv - 1 / qv) * outer;
    std::vector<int> rest = seq;
    rest.erase(rest.begin() + static_cast<long>(l));
    out[rest] += coeff;
  }
  return out;
}

// Returns a nullspace basis, each vector scaled so its first nonzero entry is 1.
inline std::vector<std::vector<Rational>> numeric_nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational lead = m[row][c];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = -m[p][free];
    const auto first = *std::find_if(x.begin(), x.end(), [](const Rational& v) { return v != 0; });
    for (auto& v : x) v /= first;
    basis.push_back(x);
  }
  return basis;
}

inline std::vector<std::vector<Rational>> oracle_scan(const std::vector<std::vector<long>>& gram, const std::vector<int>& odd,
                                               const std::vector<std::vector<int>>& words, const Rational& qv,
                                               const std::vector<Rational>& z) {
  std::map<std::pair<int, std::vector<int>>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::pair<int, std::vector<int>>, Rational>>> columns;
  for (const auto& w : words) {
    columns.emplace_back();
    for (int j = 0; j < static_cast<int>(gram.size()); ++j) {
      for (const auto& [seq, c] : numeric_ehat(gram, odd, qv, z, j, w)) {
        if (c == 0) continue;
        rows.emplace(std::make_pair(j, seq), 0);
        columns.back().push_back({{j, seq}, c});
      }
    }
  }
  std::size_t next = 0;
  for (auto& [key, index] : rows) index = next++;
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(words.size(), Rational(0)));
  for (std::size_t k = 0; k < words.size(); ++k) {
    for (const auto& [key, c] : columns[k]) m[rows.at(key)][k] += c;
  }
  return numeric_nullspace(m, words.size());
}

inline Rational evaluate(const LaurentSum& s, const Rational& qv, const std::vector<Rational>& z) {
  Rational out = 0;
  for (const auto& [key, c] : s.terms()) {
    if (!is_integer(key.q)) throw std::invalid_argument("oracle evaluation needs integer q powers");
    Rational term = c * ipow(qv, key.q.get_num().get_si());
    for (std::size_t k = 0; k < key.z.size(); ++k) term *= ipow(z[k], key.z[k]);
    out += term;
  }
  return out;
}

inline Rational evaluate(const PhaseScalar& x, const Rational& qv, const std::vector<Rational>& z) {
  return evaluate(x.numerator(), qv, z) / evaluate(x.denominator(), qv, z);
}

}  // namespace qsuper::oracle
