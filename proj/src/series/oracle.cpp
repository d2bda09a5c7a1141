#include "hyperred/series/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "hyperred/errors.hpp"

namespace hyperred {
namespace {

template <class T>
T from_rational(const Rational& q);

template <>
Rational from_rational<Rational>(const Rational& q) {
  return q;
}

template <>
Float from_rational<Float>(const Rational& q) {
  return to_float(q);
}

Rational magnitude(const Rational& q) { return abs(q); }
Float magnitude(const Float& f) { return boost::multiprecision::abs(f); }

// PoleError when value + k = 0 for some 0 <= k < count.
void check_denominator(const Rational& value, unsigned long count, const std::string& name) {
  if (!is_integer(value) || value > 0) return;
  if (-value < count) throw PoleError(name + " = " + to_string(value));
}

template <class T>
std::vector<T> powers(const T& base, unsigned N) {
  std::vector<T> out{T(1)};
  out.reserve(N + 1);
  for (unsigned k = 0; k < N; ++k) out.push_back(out.back() * base);
  return out;
}

template <class T>
T int_power(unsigned base, unsigned exponent) {
  T out(1);
  for (unsigned k = 0; k < exponent; ++k) out *= T(base);
  return out;
}

// Coefficients with all parameter symbols and the given arguments bound.
Bindings with_point(Bindings params, std::initializer_list<std::pair<const Symbol*, const Rational*>> point) {
  for (const auto& [s, v] : point) params[s->name()] = *v;
  return params;
}

// Multiplies every coefficient by the least common denominator, giving
// polynomials; parameters are bound first.
template <class Key>
std::map<Key, Polynomial> clear_denominators(const std::map<Key, RationalFunction>& coeffs, const Bindings& params) {
  std::map<Key, RationalFunction> bound;
  for (const auto& [k, c] : coeffs) bound.emplace(k, c.substitute(params));
  std::vector<RationalFunction::Factor> lcm;
  for (const auto& [k, c] : bound) {
    for (const auto& f : c.denominator_factors()) {
      auto it = std::find_if(lcm.begin(), lcm.end(), [&](const auto& g) { return g.base == f.base; });
      if (it == lcm.end()) {
        lcm.push_back(f);
      } else {
        it->multiplicity = std::max(it->multiplicity, f.multiplicity);
      }
    }
  }
  std::map<Key, Polynomial> out;
  for (const auto& [k, c] : bound) {
    Polynomial p = c.numerator();
    for (const auto& f : lcm) {
      unsigned have = 0;
      for (const auto& g : c.denominator_factors()) {
        if (g.base == f.base) have = g.multiplicity;
      }
      p = p * f.base.pow(f.multiplicity - have);
    }
    out.emplace(k, std::move(p));
  }
  return out;
}

std::uint32_t exponent_only(const Monomial& m, const Symbol& a, const Symbol* b, std::uint32_t* other) {
  std::uint32_t e = 0;
  if (other) *other = 0;
  for (const auto& [s, k] : m.factors()) {
    if (s == a) {
      e = k;
    } else if (b && s == *b) {
      *other = k;
    } else {
      throw DomainError("unbound symbol '" + s.name() + "' in residual operator");
    }
  }
  return e;
}

}  // namespace

unsigned precision_digits() {
  if (const char* env = std::getenv("HYPERRED_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 50 && v <= 100000) return static_cast<unsigned>(v);
  }
  return 50;
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Float::default_precision()) {
  Float::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Float::default_precision(saved_); }

Float to_float(const Rational& value) {
  Float out;
  mpfr_set_q(out.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return out;
}

template <class T>
TruncatedSeries1D<T> pfq_coefficients(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                                      unsigned N) {
  for (std::size_t j = 0; j < lower.size(); ++j) check_denominator(lower[j], N, "lower parameter " + std::to_string(j + 1));
  std::vector<T> a, b;
  for (const auto& v : upper) a.push_back(from_rational<T>(v));
  for (const auto& v : lower) b.push_back(from_rational<T>(v));
  TruncatedSeries1D<T> s;
  s.coefficients.reserve(N + 1);
  s.coefficients.push_back(T(1));
  for (unsigned k = 0; k < N; ++k) {
    T num(1), den(static_cast<long>(k) + 1);
    for (const auto& v : a) num *= v + T(static_cast<long>(k));
    for (const auto& v : b) den *= v + T(static_cast<long>(k));
    s.coefficients.push_back(s.coefficients.back() * num / den);
  }
  return s;
}

template <class T>
TruncatedSeries2D<T> appell_coefficients(AppellKind kind, const std::vector<Rational>& params, unsigned N) {
  if (params.size() != parameter_count(kind)) throw DomainError("wrong number of Appell parameters");
  const auto& names = slot_names(kind);
  switch (kind) {
    case AppellKind::F1: check_denominator(params[3], 2UL * N, names[3]); break;
    case AppellKind::F3: check_denominator(params[4], 2UL * N, names[4]); break;
    case AppellKind::F2:
      check_denominator(params[3], N, names[3]);
      check_denominator(params[4], N, names[4]);
      break;
    case AppellKind::F4:
      check_denominator(params[2], N, names[2]);
      check_denominator(params[3], N, names[3]);
      break;
  }
  std::vector<T> p;
  for (const auto& v : params) p.push_back(from_rational<T>(v));
  auto at = [](const T& v, unsigned k) -> T { return v + T(static_cast<long>(k)); };
  // Ratios c[m+1][n] / c[m][n] and c[m][n+1] / c[m][n].
  auto x_ratio = [&](unsigned m, unsigned n) -> T {
    const T m1(static_cast<long>(m) + 1);
    switch (kind) {
      case AppellKind::F1: return at(p[0], m + n) * at(p[1], m) / (at(p[3], m + n) * m1);
      case AppellKind::F2: return at(p[0], m + n) * at(p[1], m) / (at(p[3], m) * m1);
      case AppellKind::F3: return at(p[0], m) * at(p[2], m) / (at(p[4], m + n) * m1);
      case AppellKind::F4: return at(p[0], m + n) * at(p[1], m + n) / (at(p[2], m) * m1);
    }
    return T(0);
  };
  auto y_ratio = [&](unsigned m, unsigned n) -> T {
    const T n1(static_cast<long>(n) + 1);
    switch (kind) {
      case AppellKind::F1: return at(p[0], m + n) * at(p[2], n) / (at(p[3], m + n) * n1);
      case AppellKind::F2: return at(p[0], m + n) * at(p[2], n) / (at(p[4], n) * n1);
      case AppellKind::F3: return at(p[1], n) * at(p[3], n) / (at(p[4], m + n) * n1);
      case AppellKind::F4: return at(p[0], m + n) * at(p[1], m + n) / (at(p[3], n) * n1);
    }
    return T(0);
  };
  TruncatedSeries2D<T> s;
  s.coefficients.assign(N + 1, std::vector<T>(N + 1));
  auto& c = s.coefficients;
  c[0][0] = T(1);
  for (unsigned n = 0; n < N; ++n) c[0][n + 1] = c[0][n] * y_ratio(0, n);
  for (unsigned n = 0; n <= N; ++n) {
    for (unsigned m = 0; m < N; ++m) c[m + 1][n] = c[m][n] * x_ratio(m, n);
  }
  return s;
}

void check_pfq_point(const Rational& z) {
  if (abs(z) >= 1) throw ConvergenceError("pFq series needs |z| < 1, got z = " + to_string(z));
}

void check_appell_point(AppellKind kind, const Rational& x, const Rational& y) {
  const Rational ax = abs(x);
  const Rational ay = abs(y);
  bool ok = false;
  switch (kind) {
    case AppellKind::F1:
    case AppellKind::F3: ok = ax < 1 && ay < 1; break;
    case AppellKind::F2: ok = ax + ay < 1; break;
    case AppellKind::F4: {
      // sqrt(ax) + sqrt(ay) < 1  <=>  2 sqrt(ay) < 1 + ay - ax
      const Rational t = 1 + ay - ax;
      ok = ay < 1 && t > 0 && 4 * ay < t * t;
      break;
    }
  }
  if (!ok) {
    throw ConvergenceError("Appell " + kind_name(kind) + " series diverges at (" + to_string(x) + ", " +
                           to_string(y) + ")");
  }
}

template <class T>
SeriesValue<T> theta_sum(const TruncatedSeries1D<T>& series, const T& z, unsigned power) {
  const unsigned N = series.order();
  const auto zp = powers(z, N);
  SeriesValue<T> out{T(0), T(0)};
  for (unsigned k = 0; k <= N; ++k) {
    if (k == 0 && power > 0) continue;
    out.value += int_power<T>(k, power) * series.coefficients[k] * zp[k];
  }
  out.last_term = magnitude(int_power<T>(N, power) * series.coefficients[N] * zp[N]);
  return out;
}

template <class T>
SeriesValue<T> theta_sum(const TruncatedSeries2D<T>& series, const T& x, const T& y, unsigned i, unsigned j) {
  const unsigned N = series.order();
  const auto xp = powers(x, N);
  const auto yp = powers(y, N);
  std::vector<T> wi, wj;
  for (unsigned k = 0; k <= N; ++k) {
    wi.push_back(int_power<T>(k, i));
    wj.push_back(int_power<T>(k, j));
  }
  SeriesValue<T> out{T(0), T(0)};
  for (unsigned m = 0; m <= N; ++m) {
    T row(0);
    for (unsigned n = 0; n <= N; ++n) {
      T term = wj[n] * series.coefficients[m][n] * yp[n];
      if (m == N || n == N) {
        T edge = magnitude(wi[m] * term * xp[m]);
        if (edge > out.last_term) out.last_term = edge;
      }
      row += term;
    }
    out.value += wi[m] * xp[m] * row;
  }
  return out;
}

SeriesValue<Float> series_pfq(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const Rational& z,
                              unsigned N, unsigned digits) {
  check_pfq_point(z);
  PrecisionScope scope(digits);
  return theta_sum(pfq_coefficients<Float>(upper, lower, N), to_float(z));
}

SeriesValue<Rational> series_pfq_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                                       const Rational& z, unsigned N) {
  check_pfq_point(z);
  return theta_sum(pfq_coefficients<Rational>(upper, lower, N), z);
}

SeriesValue<Float> series_appell(AppellKind kind, const std::vector<Rational>& params, const Rational& x,
                                 const Rational& y, unsigned N, unsigned digits) {
  check_appell_point(kind, x, y);
  PrecisionScope scope(digits);
  return theta_sum(appell_coefficients<Float>(kind, params, N), to_float(x), to_float(y));
}

template <class T>
SeriesValue<T> apply_theta_series(const TruncatedSeries1D<T>& series, const ThetaOperator1D& op, const Symbol& z,
                                  const Rational& point, const Bindings& params) {
  const Bindings bindings = with_point(params, {{&z, &point}});
  const T zt = from_rational<T>(point);
  SeriesValue<T> out{T(0), T(0)};
  for (const auto& [k, c] : op.coeffs()) {
    const T w = from_rational<T>(c.evaluate(bindings));
    const SeriesValue<T> image = theta_sum(series, zt, k);
    out.value += w * image.value;
    out.last_term += magnitude(w) * image.last_term;
  }
  return out;
}

template <class T>
SeriesValue<T> apply_theta_series(const TruncatedSeries2D<T>& series, const ThetaOperator2D& op, const Symbol& x,
                                  const Symbol& y, const Rational& px, const Rational& py, const Bindings& params) {
  const Bindings bindings = with_point(params, {{&x, &px}, {&y, &py}});
  const T xt = from_rational<T>(px);
  const T yt = from_rational<T>(py);
  SeriesValue<T> out{T(0), T(0)};
  for (const auto& [key, c] : op.coeffs()) {
    const T w = from_rational<T>(c.evaluate(bindings));
    const SeriesValue<T> image = theta_sum(series, xt, yt, key.first, key.second);
    out.value += w * image.value;
    out.last_term += magnitude(w) * image.last_term;
  }
  return out;
}

std::vector<Rational> evaluate_params(const std::vector<ParameterExpr>& params, const Bindings& bindings) {
  std::vector<Rational> out;
  for (const auto& p : params) out.push_back(p.evaluate(bindings));
  return out;
}

namespace {

EvalReport finish(Float lhs, Float rhs, Float truncation, double tol) {
  EvalReport report;
  const Float floor("1e-30");
  Float scale = std::max({magnitude(lhs), magnitude(rhs), floor});
  report.relative_error = magnitude(lhs - rhs) / scale;
  report.truncation_estimate = std::move(truncation);
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.passed = report.relative_error < Float(tol) && report.truncation_estimate < Float(tol / 10);
  return report;
}

}  // namespace

EvalReport verify_reduction(const PFQSpec& lhs, const ReductionResult1D& result, const Rational& z,
                            const Bindings& params, unsigned N, double tol, unsigned digits) {
  check_pfq_point(z);
  PrecisionScope scope(digits);
  const SeriesValue<Float> left =
      theta_sum(pfq_coefficients<Float>(evaluate_params(lhs.upper, params), evaluate_params(lhs.lower, params), N),
                to_float(z));
  const auto base = pfq_coefficients<Float>(evaluate_params(result.base.upper, params),
                                            evaluate_params(result.base.lower, params), N);
  const Symbol& arg = result.base.argument;
  const SeriesValue<Float> image = apply_theta_series(base, result.op, arg, z, params);
  const Bindings at = with_point(params, {{&arg, &z}});
  const Float factor = to_float(result.factor.evaluate(at));
  Float right = factor * image.value + to_float(result.inhomogeneous.evaluate(at));
  Float truncation = std::max(left.last_term, magnitude(factor) * image.last_term);
  return finish(left.value, std::move(right), std::move(truncation), tol);
}

EvalReport verify_reduction(const AppellSpec& lhs, const ReductionResult2D& result, const Rational& x,
                            const Rational& y, const Bindings& params, unsigned N, double tol, unsigned digits) {
  check_appell_point(lhs.kind, x, y);
  PrecisionScope scope(digits);
  const Float xf = to_float(x);
  const Float yf = to_float(y);
  const SeriesValue<Float> left =
      theta_sum(appell_coefficients<Float>(lhs.kind, evaluate_params(lhs.params, params), N), xf, yf);
  const auto base = appell_coefficients<Float>(result.base.kind, evaluate_params(result.base.params, params), N);
  const SeriesValue<Float> right = apply_theta_series(base, result.op, result.base.x, result.base.y, x, y, params);
  return finish(left.value, right.value, std::max(left.last_term, right.last_term), tol);
}

std::vector<Rational> residual_1d(const ThetaOperator1D& op, const Symbol& z, const Bindings& params,
                                  const TruncatedSeries1D<Rational>& series) {
  const auto polys = clear_denominators(op.coeffs(), params);
  const unsigned N = series.order();
  std::vector<Rational> out(N + 1);
  for (const auto& [power, poly] : polys) {
    for (const auto& term : poly.terms()) {
      const std::uint32_t e = exponent_only(term.monomial, z, nullptr, nullptr);
      for (unsigned k = e; k <= N; ++k) {
        out[k] += term.coefficient * int_power<Rational>(k - e, power) * series.coefficients[k - e];
      }
    }
  }
  return out;
}

std::vector<std::vector<Rational>> residual_2d(const ThetaOperator2D& op, const Symbol& x, const Symbol& y,
                                               const Bindings& params, const TruncatedSeries2D<Rational>& series) {
  const auto polys = clear_denominators(op.coeffs(), params);
  const unsigned N = series.order();
  std::vector<std::vector<Rational>> out(N + 1, std::vector<Rational>(N + 1));
  for (const auto& [key, poly] : polys) {
    for (const auto& term : poly.terms()) {
      std::uint32_t ey = 0;
      const std::uint32_t ex = exponent_only(term.monomial, x, &y, &ey);
      for (unsigned m = ex; m <= N; ++m) {
        const Rational wm = term.coefficient * int_power<Rational>(m - ex, key.first);
        for (unsigned n = ey; n <= N; ++n) {
          out[m][n] += wm * int_power<Rational>(n - ey, key.second) * series.coefficients[m - ex][n - ey];
        }
      }
    }
  }
  return out;
}

template TruncatedSeries1D<Rational> pfq_coefficients<Rational>(const std::vector<Rational>&,
                                                                const std::vector<Rational>&, unsigned);
template TruncatedSeries1D<Float> pfq_coefficients<Float>(const std::vector<Rational>&, const std::vector<Rational>&,
                                                          unsigned);
template TruncatedSeries2D<Rational> appell_coefficients<Rational>(AppellKind, const std::vector<Rational>&, unsigned);
template TruncatedSeries2D<Float> appell_coefficients<Float>(AppellKind, const std::vector<Rational>&, unsigned);
template SeriesValue<Rational> theta_sum(const TruncatedSeries1D<Rational>&, const Rational&, unsigned);
template SeriesValue<Float> theta_sum(const TruncatedSeries1D<Float>&, const Float&, unsigned);
template SeriesValue<Rational> theta_sum(const TruncatedSeries2D<Rational>&, const Rational&, const Rational&, unsigned,
                                         unsigned);
template SeriesValue<Float> theta_sum(const TruncatedSeries2D<Float>&, const Float&, const Float&, unsigned, unsigned);
template SeriesValue<Rational> apply_theta_series(const TruncatedSeries1D<Rational>&, const ThetaOperator1D&,
                                                  const Symbol&, const Rational&, const Bindings&);
template SeriesValue<Float> apply_theta_series(const TruncatedSeries1D<Float>&, const ThetaOperator1D&, const Symbol&,
                                               const Rational&, const Bindings&);
template SeriesValue<Rational> apply_theta_series(const TruncatedSeries2D<Rational>&, const ThetaOperator2D&,
                                                  const Symbol&, const Symbol&, const Rational&, const Rational&,
                                                  const Bindings&);
template SeriesValue<Float> apply_theta_series(const TruncatedSeries2D<Float>&, const ThetaOperator2D&, const Symbol&,
                                               const Symbol&, const Rational&, const Rational&, const Bindings&);

}  // namespace hyperred
