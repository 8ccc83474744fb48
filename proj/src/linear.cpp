#include "qsuper/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsuper {

namespace {

using PolyRow = std::vector<LaurentSum>;

PolyRow clear_denominators(const std::vector<PhaseScalar>& row, std::size_t arity) {
  std::vector<LaurentSum> dens;
  for (const auto& entry : row) {
    if (entry.is_zero() || entry.is_laurent()) continue;
    if (std::find(dens.begin(), dens.end(), entry.denominator()) == dens.end()) dens.push_back(entry.denominator());
  }
  PhaseScalar scale = PhaseScalar::one(arity);
  for (const auto& d : dens) scale *= PhaseScalar(d);
  PolyRow out;
  out.reserve(row.size());
  for (const auto& entry : row) {
    const PhaseScalar cleared = entry * scale;
    if (!cleared.is_laurent()) throw std::logic_error("denominator clearing left a fraction");
    out.push_back(cleared.numerator());
  }
  return out;
}

// Divides a row by the monomial and rational content of its first nonzero
// entry. Keeps entries small without any gcd computation.
void rescale(PolyRow& row) {
  auto it = std::find_if(row.begin(), row.end(), [](const LaurentSum& s) { return !s.is_zero(); });
  if (it == row.end()) return;
  const auto& [key, c] = *it->terms().begin();
  const Monomial shift = key.inverse();
  const Rational factor = Rational(1) / c;
  for (auto& entry : row) entry = entry.shifted(shift).scaled(factor);
}

}  // namespace

std::vector<std::vector<PhaseScalar>> nullspace(const ScalarMatrix& rows, std::size_t columns, std::size_t arity) {
  std::vector<PolyRow> m;
  for (const auto& row : rows) {
    if (row.size() != columns) throw std::invalid_argument("matrix row has the wrong length");
    PolyRow cleared = clear_denominators(row, arity);
    if (std::any_of(cleared.begin(), cleared.end(), [](const LaurentSum& s) { return !s.is_zero(); })) {
      m.push_back(std::move(cleared));
    }
  }

  std::vector<std::size_t> pivot_columns;
  std::size_t next = 0;
  for (std::size_t col = 0; col < columns && next < m.size(); ++col) {
    std::size_t best = m.size();
    for (std::size_t k = next; k < m.size(); ++k) {
      if (m[k][col].is_zero()) continue;
      if (best == m.size() || m[k][col].size() < m[best][col].size()) best = k;
    }
    if (best == m.size()) continue;
    std::swap(m[next], m[best]);
    const PolyRow& pivot = m[next];
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == next || m[k][col].is_zero()) continue;
      const LaurentSum a = pivot[col];
      const LaurentSum b = m[k][col];
      for (std::size_t c = 0; c < columns; ++c) m[k][c] = a * m[k][c] - b * pivot[c];
      rescale(m[k]);
    }
    pivot_columns.push_back(col);
    ++next;
  }

  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<PhaseScalar>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<PhaseScalar> x(columns, PhaseScalar::zero(arity));
    x[free] = PhaseScalar::one(arity);
    for (std::size_t p = 0; p < pivot_columns.size(); ++p) {
      const std::size_t c = pivot_columns[p];
      if (m[p][free].is_zero()) continue;
      x[c] = -PhaseScalar(m[p][free], m[p][c]);
    }
    const auto lead = std::find_if(x.begin(), x.end(), [](const PhaseScalar& s) { return !s.is_zero(); });
    const PhaseScalar inv = lead->inverse();
    for (auto& entry : x) entry *= inv;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace qsuper
