#include "qsuper/verify.hpp"

#include <stdexcept>

namespace qsuper {

namespace {

Generator gen(GeneratorKind kind, std::size_t j) { return Generator{kind, j}; }

AlgebraElement word(std::initializer_list<Generator> letters) { return AlgebraElement::from_word(Word(letters)); }

std::string name_of(const Generator& g) { return to_string(g); }

PhaseScalar normalization(const std::vector<Rational>& d, std::size_t i) {
  return q_power(d[i]) - q_power(-d[i]);
}

std::string wrap(const std::string& text) {
  return text.find(' ') == std::string::npos ? text : "(" + text + ")";
}

CheckResult check_on_module(const ModuleContext& ctx, const Identity& id, const std::vector<Sequence>& basis,
                            Execution exec) {
  auto check = [&](std::size_t k) -> std::optional<Counterexample> {
    const auto v = ModuleVector::basis(basis[k], ctx.arity());
    const auto lhs = apply_element(ctx, id.lhs, v);
    const auto rhs = apply_element(ctx, id.rhs, v);
    if (lhs == rhs) return std::nullopt;
    return Counterexample{basis_label(basis[k]), lhs.to_string(), rhs.to_string()};
  };
  CheckResult result{id.name, true, basis.size(), first_failure(basis.size(), check, exec)};
  result.passed = !result.counterexample;
  return result;
}

CheckResult check_on_tensor(const TensorContext& ctx, const std::string& name, const TensorElement& lhs,
                            const TensorElement& rhs, const std::vector<TensorBasis>& basis, Execution exec) {
  auto check = [&](std::size_t k) -> std::optional<Counterexample> {
    const auto v = TensorVector::basis(basis[k], ctx.arity());
    const auto left = act_tensor(ctx, lhs, v);
    const auto right = act_tensor(ctx, rhs, v);
    if (left == right) return std::nullopt;
    return Counterexample{basis_label(basis[k]), left.to_string(), right.to_string()};
  };
  CheckResult result{name, true, basis.size(), first_failure(basis.size(), check, exec)};
  result.passed = !result.counterexample;
  return result;
}

CheckResult literal_check(const std::string& name, const std::string& lhs_text, const std::string& rhs_text,
                          bool equal) {
  CheckResult result{name, equal, 1, std::nullopt};
  if (!equal) result.counterexample = Counterexample{"literal", lhs_text, rhs_text};
  return result;
}

std::vector<Generator> all_generators(std::size_t rank) {
  std::vector<Generator> out;
  for (std::size_t j = 0; j < rank; ++j) {
    for (auto kind : {GeneratorKind::E, GeneratorKind::F, GeneratorKind::K, GeneratorKind::KInverse}) {
      out.push_back(gen(kind, j));
    }
  }
  return out;
}

}  // namespace

std::vector<Identity> relation_identities(const RootDatum& datum) {
  const std::size_t r = datum.rank();
  const auto a = cartan_matrix(datum);
  const auto d = symmetrizers(datum);
  std::vector<Identity> out;
  for (std::size_t i = 0; i < r; ++i) {
    const Generator ki = gen(GeneratorKind::K, i);
    for (std::size_t j = 0; j < r; ++j) {
      const Generator kj = gen(GeneratorKind::K, j);
      if (i < j) {
        out.push_back({name_of(ki) + " " + name_of(kj) + " = " + name_of(kj) + " " + name_of(ki), word({ki, kj}),
                       word({kj, ki})});
      }
    }
    out.push_back({name_of(ki) + " " + name_of(gen(GeneratorKind::KInverse, i)) + " = 1",
                   word({ki, gen(GeneratorKind::KInverse, i)}), AlgebraElement::unit()});
  }
  for (std::size_t i = 0; i < r; ++i) {
    const Generator ki = gen(GeneratorKind::K, i);
    for (std::size_t j = 0; j < r; ++j) {
      const Generator ej = gen(GeneratorKind::E, j);
      const Generator fj = gen(GeneratorKind::F, j);
      const Rational exponent = d[i] * a[i][j];
      const auto raise = AlgebraElement::from_word({ej, ki}, q_power(exponent));
      out.push_back({name_of(ki) + " " + name_of(ej) + " = " + raise.to_string(), word({ki, ej}), raise});
      const auto lower = AlgebraElement::from_word({fj, ki}, q_power(-exponent));
      out.push_back({name_of(ki) + " " + name_of(fj) + " = " + lower.to_string(), word({ki, fj}), lower});
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    const Generator ei = gen(GeneratorKind::E, i);
    for (std::size_t j = 0; j < r; ++j) {
      const Generator fj = gen(GeneratorKind::F, j);
      const bool anti = datum.is_odd(i) && datum.is_odd(j);
      AlgebraElement lhs = word({ei, fj});
      lhs.add({fj, ei}, anti ? PhaseScalar::one(0) : -PhaseScalar::one(0));
      std::string name = name_of(ei) + " " + name_of(fj) + (anti ? " + " : " - ") + name_of(fj) + " " + name_of(ei);
      AlgebraElement rhs;
      if (i == j) {
        const auto inv_norm = normalization(d, i).inverse();
        rhs.add({gen(GeneratorKind::K, i)}, inv_norm);
        rhs.add({gen(GeneratorKind::KInverse, i)}, -inv_norm);
        name += " = (" + name_of(gen(GeneratorKind::K, i)) + " - " + name_of(gen(GeneratorKind::KInverse, i)) +
                ")/" + wrap(normalization(d, i).to_string());
      } else {
        name += " = 0";
      }
      out.push_back({std::move(name), std::move(lhs), std::move(rhs)});
    }
  }
  return out;
}

VerificationReport verify_relations(const ModuleContext& ctx, Execution exec) {
  VerificationReport report("relations: " + ctx.datum().name() + ", depth " + std::to_string(ctx.depth()));
  const auto& datum = ctx.datum();
  {
    const auto a = cartan_matrix(datum);
    const auto d = symmetrizers(datum);
    CheckResult check{"D_i A_ij = n_ij", true, datum.rank() * datum.rank(), std::nullopt};
    for (std::size_t i = 0; i < datum.rank() && check.passed; ++i) {
      for (std::size_t j = 0; j < datum.rank(); ++j) {
        if (d[i] * a[i][j] != datum.gram(i, j)) {
          check.passed = false;
          check.counterexample = Counterexample{"(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                                to_string(Rational(d[i] * a[i][j])), to_string(datum.gram(i, j))};
          break;
        }
      }
    }
    report.add(std::move(check));
  }
  const auto basis = ctx.basis(ctx.depth() - 1);
  for (const auto& id : relation_identities(datum)) report.add(check_on_module(ctx, id, basis, exec));
  return report;
}

VerificationReport verify_coproduct(const TensorContext& ctx, Execution exec) {
  const auto& datum = ctx.datum();
  VerificationReport report("coproduct: " + datum.name() + ", depth " + std::to_string(ctx.depth()));
  const auto basis = ctx.basis(ctx.depth() - 1);
  for (std::size_t j = 0; j < datum.rank(); ++j) {
    const auto closed = coproduct(gen(GeneratorKind::F, j));
    auto check = [&](std::size_t k) -> std::optional<Counterexample> {
      const auto v = TensorVector::basis(basis[k], ctx.arity());
      const auto contour = coproduct_F_contour(ctx, j, v);
      const auto formula = act_tensor(ctx, closed, v);
      if (contour == formula) return std::nullopt;
      return Counterexample{basis_label(basis[k]), contour.to_string(), formula.to_string()};
    };
    CheckResult result{"contour split Δ(F" + std::to_string(j + 1) + ") = " + closed.to_string(), true, basis.size(),
                       first_failure(basis.size(), check, exec)};
    result.passed = !result.counterexample;
    report.add(std::move(result));
  }
  for (const auto& id : relation_identities(datum)) {
    report.add(check_on_tensor(ctx, "Δ(" + id.name + ")", coproduct(datum, id.lhs), coproduct(datum, id.rhs), basis,
                               exec));
  }
  return report;
}

VerificationReport verify_hopf_axioms(const ModuleContext& ctx, Execution exec) {
  const auto& datum = ctx.datum();
  VerificationReport report("hopf axioms: " + datum.name() + ", depth " + std::to_string(ctx.depth()));
  const auto basis = ctx.basis(ctx.depth() - 1);
  for (const auto& g : all_generators(datum.rank())) {
    const std::string name = to_string(g);
    const auto delta = coproduct(g);
    const auto element = AlgebraElement::from_generator(g);

    const auto left3 = coproduct_first(datum, delta);
    const auto right3 = coproduct_second(datum, delta);
    report.add(literal_check("(Δ⊗id)Δ(" + name + ") = (id⊗Δ)Δ(" + name + ")", left3.to_string(), right3.to_string(),
                             left3 == right3));

    const auto counit_left = counit_first(delta);
    report.add(literal_check("(ε⊗id)Δ(" + name + ") = " + name, counit_left.to_string(), element.to_string(),
                             counit_left == element));
    const auto counit_right = counit_second(delta);
    report.add(literal_check("(id⊗ε)Δ(" + name + ") = " + name, counit_right.to_string(), element.to_string(),
                             counit_right == element));

    const auto unit = AlgebraElement::unit().scaled(counit(g));
    report.add(check_on_module(ctx, {"m(γ⊗id)Δ(" + name + ") = ε(" + name + ")", antipode_first(datum, delta), unit},
                               basis, exec));
    report.add(check_on_module(ctx, {"m(id⊗γ)Δ(" + name + ") = ε(" + name + ")", antipode_second(datum, delta), unit},
                               basis, exec));
  }
  return report;
}

VerificationReport verify_single_current(const ModuleContext& ctx) {
  if (ctx.rank() != 1) throw std::invalid_argument("single-current reduction needs rank 1");
  VerificationReport report("single-current reduction: " + ctx.datum().name() + ", depth " +
                            std::to_string(ctx.depth()));
  const int sign = ctx.omega().hat_signs[0][0];
  PhaseScalar base = ctx.q_pow(ctx.omega().numerators[0][0]);
  if (sign < 0) base = -base;
  const PhaseScalar z_sq = ctx.weight_phase(0, 2);
  for (std::size_t n = 1; n <= ctx.depth(); ++n) {
    const Sequence seq(n, 0);
    const ModuleVector multi = ehat_on_basis(ctx, 0, seq);
    const PhaseScalar coeff = (PhaseScalar::one(ctx.arity()) - z_sq * pow(base, static_cast<int>(n) - 1)) *
                              q_number(static_cast<unsigned>(n), base) / ctx.normalization(0);
    const ModuleVector closed = ModuleVector::basis(Sequence(n - 1, 0), ctx.arity()).scaled(coeff);
    report.add(literal_check("E^1 U[1^" + std::to_string(n) + "] single-current form", multi.to_string(),
                             closed.to_string(), multi == closed));
  }
  return report;
}

std::vector<Rational> specialization_exponents(const RootDatum& datum, const ConcreteWeight& weight) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < datum.rank(); ++k) out.emplace_back(-root_pairing(datum, k, weight));
  return out;
}

VerificationReport verify_specialization(const RootDatum& datum, std::size_t depth, const ConcreteWeight& weight,
                                         Execution exec) {
  std::string label;
  for (const auto& c : weight.coords) label += (label.empty() ? "" : ",") + to_string(c);
  VerificationReport report("specialization: " + datum.name() + " at λ = (" + label + "), depth " +
                            std::to_string(depth));
  const ModuleContext generic(datum, GenericWeight{}, depth);
  const ModuleContext concrete(datum, weight, depth);
  const auto exponents = specialization_exponents(datum, weight);
  const auto basis = generic.basis(depth - 1);

  auto compare = [&](const std::string& name, const AlgebraElement& x) {
    auto check = [&](std::size_t k) -> std::optional<Counterexample> {
      const auto g = apply_element(generic, x, ModuleVector::basis(basis[k], generic.arity()));
      const auto c = apply_element(concrete, x, ModuleVector::basis(basis[k], 0));
      const auto s = specialized(g, exponents);
      if (!s) return Counterexample{basis_label(basis[k]), g.to_string(), "denominator vanishes at this weight"};
      if (*s == c) return std::nullopt;
      return Counterexample{basis_label(basis[k]), s->to_string(), c.to_string()};
    };
    CheckResult result{name, true, basis.size(), first_failure(basis.size(), check, exec)};
    result.passed = !result.counterexample;
    if (result.counterexample && result.counterexample->rhs == "denominator vanishes at this weight") {
      report.add_note("denominator of " + name + " on " + result.counterexample->basis + " vanishes at λ = (" + label +
                      ")");
    }
    report.add(std::move(result));
  };

  for (const auto& g : all_generators(datum.rank())) compare("specialize " + to_string(g), AlgebraElement::from_generator(g));
  for (const auto& id : relation_identities(datum)) {
    compare("specialize lhs of " + id.name, id.lhs);
    compare("specialize rhs of " + id.name, id.rhs);
  }
  return report;
}

}  // namespace qsuper
