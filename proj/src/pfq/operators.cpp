#include "hyperred/pfq/operators.hpp"

#include "hyperred/errors.hpp"
#include "hyperred/pfq/reduce.hpp"

namespace hyperred {
namespace {

std::vector<RationalFunction> values(const std::vector<ParameterExpr>& params, long offset = 0) {
  std::vector<RationalFunction> out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(p.shifted(offset).value());
  return out;
}

RationalFunction one_minus(const Symbol& z) { return RationalFunction(1) - RationalFunction(z); }

// Left-multiplies by 1/prod(factors), one factor at a time so that the
// denominator stays factored.
ThetaOperator1D divide_by_product(const ThetaOperator1D& op, const std::vector<RationalFunction>& factors) {
  RationalFunction scale(1);
  for (const auto& f : factors) scale = scale / f;
  return op.scaled(scale);
}

}  // namespace

std::vector<RationalFunction> elementary_symmetric_all(const std::vector<RationalFunction>& roots) {
  std::vector<RationalFunction> e{RationalFunction(1)};
  for (const auto& r : roots) {
    e.emplace_back();
    for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += r * e[j - 1];
  }
  return e;
}

RationalFunction elementary_symmetric(const std::vector<RationalFunction>& roots, std::size_t j) {
  if (j > roots.size()) {
    throw DomainError("elementary symmetric index " + std::to_string(j) + " out of range 0.." +
                      std::to_string(roots.size()));
  }
  return elementary_symmetric_all(roots)[j];
}

Step step_up_upper(const PFQSpec& f, std::size_t i) {
  const RationalFunction a = f.upper.at(i).value();
  if (a.is_zero()) throw SingularOperator("upper parameter " + f.upper[i].to_string() + " is zero");
  Step step{ThetaOperator1D({{0U, RationalFunction(1)}, {1U, RationalFunction(1) / a}}), f};
  step.target.upper[i] = f.upper[i].shifted(1);
  return step;
}

Step step_down_lower(const PFQSpec& f, std::size_t i) {
  const RationalFunction b1 = f.lower.at(i).value() - RationalFunction(1);
  if (b1.is_zero()) throw SingularOperator("lower parameter " + f.lower[i].to_string() + " is one");
  Step step{ThetaOperator1D({{0U, RationalFunction(1)}, {1U, RationalFunction(1) / b1}}), f};
  step.target.lower[i] = f.lower[i].shifted(-1);
  return step;
}

Step step_down_upper(const PFQSpec& f, std::size_t i) {
  const std::size_t p = f.p();
  const RationalFunction a = f.upper.at(i).value() - RationalFunction(1);
  std::vector<RationalFunction> denominators;
  std::vector<std::string> violations;
  if (a.is_zero()) violations.push_back(f.upper[i].shifted(-1).to_string() + " = 0");
  for (const auto& b : f.lower) {
    RationalFunction d = b.value() - RationalFunction(1) - a;
    if (d.is_zero()) violations.push_back(b.to_string() + " = " + f.upper[i].to_string());
    denominators.push_back(std::move(d));
  }
  if (!violations.empty()) {
    throw ExceptionalParameter("cannot lower " + f.upper[i].to_string() + " in " + f.to_string(), violations);
  }
  const auto pb = elementary_symmetric_all(values(f.lower, -1));
  std::vector<RationalFunction> others;
  for (std::size_t j = 0; j < f.upper.size(); ++j) {
    if (j != i) others.push_back(f.upper[j].value());
  }
  const auto pa = elementary_symmetric_all(others);
  const RationalFunction z(f.argument);
  ThetaOperator1D bracket;
  for (std::size_t m = 0; m <= p; ++m) {
    // t(x) = sum_j P_{p-j}(b-1) sum_k x^(j-k) (-a)^k, collected by x^m.
    RationalFunction t;
    RationalFunction power(1);
    for (std::size_t j = m; j <= p; ++j) {
      t += pb[p - j] * power;
      power = power * (-a);
    }
    bracket.add_term(static_cast<unsigned>(m), t - z * pa[p - m]);
  }
  Step step{divide_by_product(bracket, denominators), f};
  step.target.upper[i] = f.upper[i].shifted(-1);
  return step;
}

Step step_up_lower(const PFQSpec& f, std::size_t i) {
  const std::size_t p = f.p();
  const RationalFunction b = f.lower.at(i).value();
  std::vector<RationalFunction> denominators;
  std::vector<std::string> violations;
  for (const auto& a : f.upper) {
    RationalFunction d = a.value() - b;
    if (d.is_zero()) violations.push_back(a.to_string() + " = " + f.lower[i].to_string());
    denominators.push_back(std::move(d));
  }
  if (b.is_zero()) violations.push_back(f.lower[i].to_string() + " = 0");
  if (!violations.empty()) {
    throw ExceptionalParameter("cannot raise " + f.lower[i].to_string() + " in " + f.to_string(), violations);
  }
  std::vector<RationalFunction> others;
  for (std::size_t j = 0; j < p; ++j) {
    if (j != i) others.push_back(f.lower[j].value() - RationalFunction(1));
  }
  const auto q = elementary_symmetric_all(others);
  const auto pa = elementary_symmetric_all(values(f.upper));
  const RationalFunction inv_z = RationalFunction(1) / RationalFunction(f.argument);
  ThetaOperator1D bracket;
  // (1/z) theta prod_{j != i} (theta + b_j - 1); q has p entries for p-1 roots.
  for (std::size_t m = 0; m + 1 <= p; ++m) bracket.add_term(static_cast<unsigned>(m + 1), inv_z * q[p - 1 - m]);
  for (std::size_t m = 0; m <= p; ++m) {
    // s(x) = sum_j P_{p-j}(a) sum_k x^(j-k) (-b)^k, collected by x^m.
    RationalFunction s;
    RationalFunction power(1);
    for (std::size_t j = m; j <= p; ++j) {
      s += pa[p - j] * power;
      power = power * (-b);
    }
    bracket.add_term(static_cast<unsigned>(m), -s);
  }
  Step step{divide_by_product(bracket.scaled(b), denominators), f};
  step.target.lower[i] = f.lower[i].shifted(1);
  return step;
}

ThetaOperator1D ode_eliminate(const PFQSpec& f) {
  const std::size_t p = f.p();
  const auto pa = elementary_symmetric_all(values(f.upper));
  const auto pb = elementary_symmetric_all(values(f.lower, -1));
  const RationalFunction z(f.argument);
  const RationalFunction inv = RationalFunction(1) / one_minus(f.argument);
  ThetaOperator1D image;
  image.add_term(0, z * pa[p + 1] * inv);
  for (std::size_t r = 1; r <= p; ++r) {
    image.add_term(static_cast<unsigned>(r), (z * pa[p + 1 - r] - pb[p + 1 - r]) * inv);
  }
  return image;
}

ThetaReducer::ThetaReducer(const PFQSpec& f, bool unit_relation) : z_(f.argument) {
  if (unit_relation) {
    const auto rule = unit_upper_identity(f);
    cap_ = static_cast<unsigned>(f.p());
    images_.push_back(Image{rule.op, rule.inhomogeneous});
  } else {
    cap_ = static_cast<unsigned>(f.p() + 1);
    images_.push_back(Image{ode_eliminate(f), RationalFunction()});
  }
}

const ThetaReducer::Image& ThetaReducer::power_image(unsigned k) {
  while (images_.size() <= k - cap_) {
    const Image& last = images_.back();
    // theta o (op + r) = theta o op + theta(r); only the top power can reach cap.
    const ThetaOperator1D raised = compose_raw(ThetaOperator1D::monomial(1), last.op, z_);
    Image next{ThetaOperator1D(), theta_apply(last.remainder, z_)};
    for (const auto& [power, c] : raised.coeffs()) {
      if (power < cap_) {
        next.op.add_term(power, c);
      } else {
        const Image& base = images_.front();
        next.op = next.op + base.op.scaled(c);
        next.remainder += c * base.remainder;
      }
    }
    images_.push_back(std::move(next));
  }
  return images_[k - cap_];
}

ThetaReducer::Image ThetaReducer::reduce(const ThetaOperator1D& op) {
  Image out;
  for (const auto& [k, c] : op.coeffs()) {
    if (k < cap_) {
      out.op.add_term(k, c);
    } else {
      const Image& image = power_image(k);
      out.op = out.op + image.op.scaled(c);
      out.remainder += c * image.remainder;
    }
  }
  return out;
}

ThetaOperator1D normalize_theta(const ThetaOperator1D& op, const PFQSpec& f) {
  if (op.max_power() <= static_cast<int>(f.p())) return op;
  ThetaReducer reducer(f, false);
  return reducer.reduce(op).op;
}

ThetaOperator1D compose(const ThetaOperator1D& outer, const ThetaOperator1D& inner, const PFQSpec& f) {
  return normalize_theta(compose_raw(outer, inner, f.argument), f);
}

}  // namespace hyperred
