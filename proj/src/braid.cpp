#include "qsuper/braid.hpp"

namespace qsuper {

PhaseScalar braid_phase(const RootDatum& datum, const Weight& first, const Sequence& first_seq, const Weight& second,
                        const Sequence& second_seq) {
  const auto* w1 = std::get_if<ConcreteWeight>(&first);
  const auto* w2 = std::get_if<ConcreteWeight>(&second);
  if (!w1 || !w2) throw std::invalid_argument("braid phase needs concrete weights");
  check_weight(datum, first);
  check_weight(datum, second);
  for (const auto& seq : {first_seq, second_seq}) {
    for (std::size_t i : seq) {
      if (i >= datum.rank()) throw std::out_of_range("screening index out of range");
    }
  }

  Rational exponent = weight_pairing(datum, *w1, *w2);
  for (std::size_t i : first_seq) exponent -= root_pairing(datum, i, *w2);
  for (std::size_t j : second_seq) exponent -= root_pairing(datum, j, *w1);
  int odd_pairs = 0;
  for (std::size_t i : first_seq) {
    for (std::size_t j : second_seq) {
      exponent += datum.gram(i, j);
      odd_pairs += datum.is_odd(i) && datum.is_odd(j);
    }
  }
  PhaseScalar phase = q_power(exponent);
  return odd_pairs % 2 ? -phase : phase;
}

}  // namespace qsuper
