#pragma once

#include "qsuper/contour.hpp"

namespace qsuper {

/// Total phase for moving U_{lambda1,I1} past U_{lambda2,I2}, taken as the
/// product of the pairwise braiding factors of the constituents:
///
///   q^{lambda1.lambda2} * prod_{i in I1} q^{-alpha_i.lambda2}
///     * prod_{j in I2} q^{-alpha_j.lambda1}
///     * prod_{i in I1, j in I2} (-1)^{p(i)p(j)} q^{n_ij}
///
/// Every factor is the exchange phase e^{i pi Omega} in the direction
/// "first operand passes the second"; no analytic-continuation convention
/// beyond that is implied. Arity-0 result. Throws std::invalid_argument when
/// either weight is generic.
PhaseScalar braid_phase(const RootDatum& datum, const Weight& first, const Sequence& first_seq, const Weight& second,
                        const Sequence& second_seq);

}  // namespace qsuper
