#pragma once

// Machine verification of the defining relations, the coproduct, and the
// Hopf axioms, all as exact operator identities on depth-truncated modules.

#include "qsuper/algebra.hpp"
#include "qsuper/report.hpp"
#include "qsuper/sweep.hpp"
#include "qsuper/tensor.hpp"

#include <string>
#include <vector>

namespace qsuper {

struct Identity {
  std::string name;
  AlgebraElement lhs;
  AlgebraElement rhs;
};

/// For all i, j:
///   K_i K_j = K_j K_i,  K_i K_i^{-1} = 1,
///   K_i E_j = q_i^{A_ij} E_j K_i,  K_i F_j = q_i^{-A_ij} F_j K_i,
///   E_i F_j - (-1)^{p(i)p(j)} F_j E_i = delta_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1}),
/// with q_i = q^{D_i}.
std::vector<Identity> relation_identities(const RootDatum& datum);

/// Every relation on every basis vector of length <= depth - 1, plus the
/// exponent identity D_i A_ij = n_ij.
VerificationReport verify_relations(const ModuleContext& ctx, Execution exec = Execution::serial);

/// Contour-split Delta(F_j) against the closed form, and Delta applied to
/// every relation, on tensor basis vectors with factors of length <= depth - 1.
VerificationReport verify_coproduct(const TensorContext& ctx, Execution exec = Execution::serial);

/// Coassociativity and counit identities literally, antipode identities as
/// operators on basis vectors of length <= depth - 1, for every generator.
VerificationReport verify_hopf_axioms(const ModuleContext& ctx, Execution exec = Execution::serial);

/// Rank one only: the multi-contour E^ action against the single-current
/// closed form (1 - z^2 s^{n-1}) [n]_s / (q_1 - q_1^{-1}) with s = +-q^{n_11},
/// for 1 <= n <= depth. Throws std::invalid_argument for rank > 1.
VerificationReport verify_single_current(const ModuleContext& ctx);

/// Computes every generator action and every relation side at generic weight,
/// substitutes z_k -> q^{-alpha_k . lambda}, and compares with the same
/// computation at the concrete weight. Vanishing denominators are recorded as
/// notes and counted as failures of the affected check.
VerificationReport verify_specialization(const RootDatum& datum, std::size_t depth, const ConcreteWeight& weight,
                                         Execution exec = Execution::serial);

/// z exponents realizing a concrete weight: e_k = -alpha_k . lambda.
std::vector<Rational> specialization_exponents(const RootDatum& datum, const ConcreteWeight& weight);

}  // namespace qsuper
