#include "hyperred/pfq/reduce.hpp"

#include <algorithm>
#include <functional>

#include "hyperred/errors.hpp"

namespace hyperred {
namespace {

const ParameterExpr kOne = ParameterExpr::integer(1);

void validate_target(const PFQSpec& f) {
  f.validate();
  for (const auto& b : f.lower) {
    if (b.is_pure_integer() && b.numeric_value() <= 0) {
      throw DomainError("lower parameter " + b.to_string() + " is a nonpositive integer (pole)");
    }
  }
  for (const auto& a : f.upper) {
    if (a.is_pure_integer() && a.numeric_value() <= 0) {
      throw ExceptionalParameter("upper parameter " + a.to_string() + " terminates the series",
                                 {a.to_string() + " is a nonpositive integer"});
    }
  }
}

bool is_exactly(const ParameterExpr& p, long value) { return p.is_pure_integer() && p.numeric_value() == value; }

struct KarlssonPair {
  std::size_t upper;
  std::size_t lower;
  long m;
};

std::vector<KarlssonPair> karlsson_pairs(const PFQSpec& f) {
  std::vector<KarlssonPair> pairs;
  std::vector<bool> used(f.upper.size(), false);
  for (std::size_t l = 0; l < f.lower.size(); ++l) {
    for (std::size_t u = 0; u < f.upper.size(); ++u) {
      if (used[u] || !f.upper[u].same_family(f.lower[l])) continue;
      const long m = f.upper[u].offset() - f.lower[l].offset();
      if (m < 0) continue;
      used[u] = true;
      pairs.push_back({u, l, m});
      break;
    }
  }
  return pairs;
}

std::optional<std::pair<std::size_t, std::size_t>> unit_pattern(const PFQSpec& f) {
  auto u = std::find_if(f.upper.begin(), f.upper.end(), [](const auto& a) { return is_exactly(a, 1); });
  auto l = std::find_if(f.lower.begin(), f.lower.end(), [](const auto& b) { return is_exactly(b, 2); });
  if (u == f.upper.end() || l == f.lower.end()) return std::nullopt;
  return std::pair{static_cast<std::size_t>(u - f.upper.begin()), static_cast<std::size_t>(l - f.lower.begin())};
}

struct Pattern3 {
  std::size_t upper;
  std::size_t lower;
  PFQSpec reduced;
  RationalFunction weight;
};

std::optional<Pattern3> match_pattern3(const PFQSpec& f) {
  const auto hit = unit_pattern(f);
  if (!hit) return std::nullopt;
  Pattern3 out{hit->first, hit->second, PFQSpec{{}, {}, f.argument}, RationalFunction(1)};
  RationalFunction num(1);
  RationalFunction den(RationalFunction(f.argument));
  for (std::size_t j = 0; j < f.upper.size(); ++j) {
    if (j == out.upper) continue;
    const RationalFunction v = f.upper[j].value() - RationalFunction(1);
    if (v.is_zero()) return std::nullopt;
    den = den * v;
    out.reduced.upper.push_back(f.upper[j].shifted(-1));
  }
  for (std::size_t l = 0; l < f.lower.size(); ++l) {
    if (l == out.lower) continue;
    const RationalFunction v = f.lower[l].value() - RationalFunction(1);
    if (v.is_zero()) return std::nullopt;
    num = num * v;
    out.reduced.lower.push_back(f.lower[l].shifted(-1));
  }
  out.weight = num / den;
  return out;
}

ReductionResult1D reduce_impl(const PFQSpec& target, bool allow_pattern3);

ReductionResult1D reduce_by_stepping(const PFQSpec& target) {
  const bool exceptional =
      std::any_of(target.upper.begin(), target.upper.end(), [](const auto& a) { return a.is_pure_integer(); });
  PFQSpec base = target;
  for (auto& a : base.upper) a = a.is_pure_integer() ? kOne : a.with_offset(exceptional ? 1 : 0);
  for (auto& b : base.lower) b = b.is_pure_integer() ? ParameterExpr::integer(2) : b.with_offset(exceptional ? 2 : 1);

  ReductionResult1D result;
  result.base = base;
  result.basis_dimension = static_cast<unsigned>(exceptional ? base.p() : base.p() + 1);
  result.op = ThetaOperator1D::identity();
  for (std::size_t i = 0; i < target.upper.size(); ++i) {
    for (std::size_t j = i + 1; j < target.upper.size(); ++j) {
      if (!target.upper[i].is_pure_integer() && target.upper[i].same_family(target.upper[j]) &&
          target.upper[i].offset() != target.upper[j].offset()) {
        result.notes.push_back("upper parameters " + target.upper[i].to_string() + " and " +
                               target.upper[j].to_string() + " share a family; each reduced to its own base");
      }
    }
  }

  ThetaReducer reducer(base, exceptional);
  PFQSpec current = base;
  const auto apply = [&](const Step& step) {
    auto image = reducer.reduce(compose_raw(step.op, result.op, base.argument));
    result.inhomogeneous = apply_to_rational(step.op, result.inhomogeneous, base.argument) + image.remainder;
    result.op = std::move(image.op);
    current = step.target;
  };
  // Direct steps first, then the inverse ones; leftmost parameter first.
  for (std::size_t i = 0; i < target.upper.size(); ++i) {
    while (current.upper[i].offset() < target.upper[i].offset()) apply(step_up_upper(current, i));
  }
  for (std::size_t i = 0; i < target.lower.size(); ++i) {
    while (current.lower[i].offset() > target.lower[i].offset()) apply(step_down_lower(current, i));
  }
  for (std::size_t i = 0; i < target.upper.size(); ++i) {
    while (current.upper[i].offset() > target.upper[i].offset()) apply(step_down_upper(current, i));
  }
  for (std::size_t i = 0; i < target.lower.size(); ++i) {
    while (current.lower[i].offset() < target.lower[i].offset()) apply(step_up_lower(current, i));
  }
  if (result.op.is_zero() && result.inhomogeneous.is_zero()) {
    throw Error("reduction of " + target.to_string() + " collapsed to zero");
  }
  return result;
}

void accumulate(ReductionResult1D& sum, const ReductionResult1D& term, const RationalFunction& weight) {
  if (!(sum.base == term.base)) {
    throw Error("expansion terms landed on different bases: " + sum.base.to_string() + " and " +
                term.base.to_string());
  }
  sum.op = sum.op + term.op.scaled(weight * term.factor);
  sum.inhomogeneous += weight * term.inhomogeneous;
  for (const auto& note : term.notes) {
    if (std::find(sum.notes.begin(), sum.notes.end(), note) == sum.notes.end()) sum.notes.push_back(note);
  }
}

ReductionResult1D reduce_impl(const PFQSpec& target, bool allow_pattern3) {
  validate_target(target);
  if (!karlsson_pairs(target).empty()) {
    const auto terms = karlsson_reduce(target);
    ReductionResult1D sum;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto part = reduce_impl(terms[i].spec, false);
      if (i == 0) {
        sum = part;
        sum.op = ThetaOperator1D();
        sum.inhomogeneous = RationalFunction();
      }
      accumulate(sum, part, terms[i].weight);
    }
    return sum;
  }
  if (allow_pattern3 && match_pattern3(target)) return special_contiguous(target);
  return reduce_by_stepping(target);
}

std::vector<RationalFunction> stirling2_row(unsigned k) {
  // S(k, j) for j = 0..k.
  std::vector<std::vector<Integer>> s(k + 1, std::vector<Integer>(k + 1, 0));
  s[0][0] = 1;
  for (unsigned n = 1; n <= k; ++n) {
    for (unsigned j = 1; j <= n; ++j) s[n][j] = Integer(j) * s[n - 1][j] + s[n - 1][j - 1];
  }
  std::vector<RationalFunction> row;
  for (unsigned j = 0; j <= k; ++j) row.emplace_back(Rational(s[k][j]));
  return row;
}

PFQSpec shift_all(const PFQSpec& f, long m) {
  PFQSpec out = f;
  for (auto& a : out.upper) a = a.shifted(m);
  for (auto& b : out.lower) b = b.shifted(m);
  return out;
}

}  // namespace

RationalFunction pochhammer(const RationalFunction& x, unsigned n) {
  RationalFunction out(1);
  for (unsigned k = 0; k < n; ++k) out = out * (x + RationalFunction(static_cast<long>(k)));
  return out;
}

std::vector<RationalFunction> ReductionResult1D::dense_coefficients() const {
  std::vector<RationalFunction> out;
  for (unsigned k = 0; k < basis_dimension; ++k) out.push_back(op.coefficient(k));
  return out;
}

ReductionResult1D reduce(const PFQSpec& target) { return reduce_impl(target, true); }

UnitRelation unit_upper_identity(const PFQSpec& f) {
  f.validate();
  auto unit = std::find_if(f.upper.begin(), f.upper.end(), [](const auto& a) { return is_exactly(a, 1); });
  if (unit == f.upper.end()) throw DomainError("no upper parameter equals 1 in " + f.to_string());
  const std::size_t p = f.p();
  std::vector<RationalFunction> a;
  for (auto it = f.upper.begin(); it != f.upper.end(); ++it) {
    if (it != unit) a.push_back(it->value());
  }
  std::vector<RationalFunction> b1;
  for (const auto& b : f.lower) b1.push_back(b.value() - RationalFunction(1));
  const auto pa = elementary_symmetric_all(a);
  const auto pb = elementary_symmetric_all(b1);
  const RationalFunction z(f.argument);
  const RationalFunction inv = RationalFunction(1) / (RationalFunction(1) - z);
  // [prod(theta + b - 1) - z prod(theta + a)] F = prod(b - 1); the theta^p
  // coefficient is 1 - z.
  UnitRelation rule;
  for (std::size_t m = 0; m < p; ++m) rule.op.add_term(static_cast<unsigned>(m), -(pb[p - m] - z * pa[p - m]) * inv);
  rule.inhomogeneous = pb[p] * inv;
  return rule;
}

std::vector<WeightedSpec> karlsson_reduce(const PFQSpec& f) {
  f.validate();
  const auto pairs = karlsson_pairs(f);
  if (pairs.empty()) throw DomainError("no upper parameter exceeds a lower one by an integer in " + f.to_string());
  std::vector<bool> paired_upper(f.upper.size(), false);
  std::vector<bool> paired_lower(f.lower.size(), false);
  for (const auto& pr : pairs) {
    paired_upper[pr.upper] = true;
    paired_lower[pr.lower] = true;
  }
  std::vector<WeightedSpec> out;
  const RationalFunction z(f.argument);
  std::vector<long> j(pairs.size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t depth) {
    if (depth < pairs.size()) {
      for (j[depth] = 0; j[depth] <= pairs[depth].m; ++j[depth]) walk(depth + 1);
      return;
    }
    RationalFunction weight(1);
    long total = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const RationalFunction b = f.lower[pairs[i].lower].value();
      weight = weight * RationalFunction(Rational(binomial(static_cast<unsigned>(pairs[i].m),
                                                           static_cast<unsigned>(j[i]))));
      // (b_i + m_i)_{J_{i-1}} for i >= 2, over (b_i)_{J_i}.
      if (i > 0) weight = weight * pochhammer(b + RationalFunction(pairs[i].m), static_cast<unsigned>(total));
      total += j[i];
      weight = weight / pochhammer(b, static_cast<unsigned>(total));
    }
    PFQSpec term{{}, {}, f.argument};
    for (std::size_t u = 0; u < f.upper.size(); ++u) {
      if (paired_upper[u]) continue;
      weight = weight * pochhammer(f.upper[u].value(), static_cast<unsigned>(total));
      term.upper.push_back(f.upper[u].shifted(total));
    }
    for (std::size_t l = 0; l < f.lower.size(); ++l) {
      if (paired_lower[l]) continue;
      weight = weight / pochhammer(f.lower[l].value(), static_cast<unsigned>(total));
      term.lower.push_back(f.lower[l].shifted(total));
    }
    weight = weight * z.pow(static_cast<int>(total));
    auto same = std::find_if(out.begin(), out.end(), [&](const WeightedSpec& w) { return w.spec == term; });
    if (same == out.end()) {
      out.push_back({weight, term});
    } else {
      same->weight += weight;
    }
  };
  walk(0);
  std::erase_if(out, [](const WeightedSpec& w) { return w.weight.is_zero(); });
  return out;
}

AllShiftDerivative all_shift_derivative(const PFQSpec& base, unsigned m) {
  base.validate();
  AllShiftDerivative out{RationalFunction(1), m, ThetaOperator1D::identity(), base, shift_all(base, m)};
  std::vector<std::string> violations;
  for (const auto& a : base.upper) {
    const RationalFunction pa = pochhammer(a.value(), m);
    if (pa.is_zero()) violations.push_back("(" + a.to_string() + ")_" + std::to_string(m) + " = 0");
    else out.prefactor = out.prefactor / pa;
  }
  if (!violations.empty()) throw ExceptionalParameter("all-parameter shift is singular", violations);
  for (const auto& b : base.lower) out.prefactor = out.prefactor * pochhammer(b.value(), m);
  // (d/dz)^m = z^-m theta (theta - 1) ... (theta - m + 1).
  ThetaOperator1D poly = ThetaOperator1D::identity();
  for (unsigned k = 0; k < m; ++k) {
    poly = compose_raw(ThetaOperator1D({{0U, RationalFunction(-static_cast<long>(k))}, {1U, RationalFunction(1)}}),
                       poly, base.argument);
  }
  out.op = normalize_theta(poly.scaled(RationalFunction(base.argument).pow(-static_cast<int>(m))), base);
  return out;
}

ReductionResult1D special_contiguous(const PFQSpec& f) {
  validate_target(f);
  const auto match = match_pattern3(f);
  if (!match) throw NotApplicable("no upper 1 over lower 2 pattern with other parameters away from 1 in " + f.to_string());
  ReductionResult1D inner = reduce_impl(match->reduced, true);
  ReductionResult1D out = inner;
  out.op = inner.op.scaled(match->weight * inner.factor);
  out.factor = RationalFunction(1);
  out.inhomogeneous = match->weight * (inner.inhomogeneous - RationalFunction(1));
  return out;
}

ContiguousRelation paired_theta_power(const PFQSpec& f, unsigned k) {
  f.validate();
  for (std::size_t u = 0; u < f.upper.size(); ++u) {
    for (std::size_t l = 0; l < f.lower.size(); ++l) {
      if (!f.upper[u].same_family(f.lower[l]) || f.lower[l].offset() != f.upper[u].offset() + 1) continue;
      const RationalFunction minus_a = -f.upper[u].value();
      PFQSpec reduced = f;
      reduced.upper.erase(reduced.upper.begin() + static_cast<std::ptrdiff_t>(u));
      reduced.lower.erase(reduced.lower.begin() + static_cast<std::ptrdiff_t>(l));
      ContiguousRelation rel;
      rel.terms.emplace_back(ThetaOperator1D::monomial(0, minus_a.pow(static_cast<int>(k))), f);
      ThetaOperator1D tail;
      for (unsigned j = 0; j < k; ++j) tail.add_term(j, -minus_a.pow(static_cast<int>(k - j)));
      if (!tail.is_zero()) rel.terms.emplace_back(tail, reduced);
      return rel;
    }
  }
  throw NotApplicable("no parameter pair A over 1+A in " + f.to_string());
}

ContiguousRelation paired_binomial(const PFQSpec& f, unsigned q) {
  f.validate();
  for (std::size_t u = 0; u < f.upper.size(); ++u) {
    const RationalFunction a = f.upper[u].value();
    const RationalFunction a1 = a + RationalFunction(1);
    std::vector<std::size_t> ups;
    std::vector<std::size_t> lows;
    for (std::size_t i = 0; i < f.upper.size(); ++i) {
      if (f.upper[i].value() == a) ups.push_back(i);
    }
    for (std::size_t i = 0; i < f.lower.size(); ++i) {
      if (f.lower[i].value() == a1) lows.push_back(i);
    }
    const std::size_t r = std::min(ups.size(), lows.size());
    if (r == 0 || r < q) continue;
    ContiguousRelation rel;
    for (unsigned j = 0; j <= q; ++j) {
      PFQSpec g = f;
      // Drop j pairs, highest indices first so earlier ones stay valid.
      for (unsigned t = 0; t < j; ++t) g.upper.erase(g.upper.begin() + static_cast<std::ptrdiff_t>(ups[j - 1 - t]));
      for (unsigned t = 0; t < j; ++t) g.lower.erase(g.lower.begin() + static_cast<std::ptrdiff_t>(lows[j - 1 - t]));
      Rational w(binomial(q, j));
      if ((j + q) % 2 == 1) w = -w;
      rel.terms.emplace_back(ThetaOperator1D::monomial(0, RationalFunction(w)), g);
    }
    return rel;
  }
  throw NotApplicable("fewer than " + std::to_string(q) + " identical pairs A over 1+A in " + f.to_string());
}

ExplicitForm explicit_form(const ReductionResult1D& result) {
  ExplicitForm out;
  out.inhomogeneous = result.inhomogeneous;
  const RationalFunction z(result.base.argument);
  for (const auto& [k, c] : result.op.coeffs()) {
    const auto s = stirling2_row(k);
    for (unsigned j = 0; j <= k; ++j) {
      if (s[j].is_zero()) continue;
      RationalFunction w = result.factor * c * s[j] * z.pow(static_cast<int>(j));
      for (const auto& a : result.base.upper) w = w * pochhammer(a.value(), j);
      for (const auto& b : result.base.lower) w = w / pochhammer(b.value(), j);
      const PFQSpec spec = shift_all(result.base, j);
      auto same = std::find_if(out.terms.begin(), out.terms.end(), [&](const WeightedSpec& t) { return t.spec == spec; });
      if (same == out.terms.end()) {
        out.terms.push_back({w, spec});
      } else {
        same->weight += w;
      }
    }
  }
  std::erase_if(out.terms, [](const WeightedSpec& t) { return t.weight.is_zero(); });
  return out;
}

}  // namespace hyperred
