#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <vector>

#include "hyperred/appell/reduce.hpp"
#include "hyperred/pfq/reduce.hpp"

namespace hyperred {

using Float = boost::multiprecision::mpfr_float;

// Significant decimal digits for float mode: HYPERRED_PRECISION if set and
// at least 50, otherwise 50.
unsigned precision_digits();

// Sets the working precision of new Float values on this thread and restores
// the previous one on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Float to_float(const Rational& value);

// coefficients[k] multiplies z^k, k = 0..N.
template <class T>
struct TruncatedSeries1D {
  std::vector<T> coefficients;
  unsigned order() const { return static_cast<unsigned>(coefficients.size()) - 1; }
};

// coefficients[m][n] multiplies x^m y^n, m, n = 0..N.
template <class T>
struct TruncatedSeries2D {
  std::vector<std::vector<T>> coefficients;
  unsigned order() const { return static_cast<unsigned>(coefficients.size()) - 1; }
};

// Coefficients by running Pochhammer products; T is Rational or Float (the
// latter at the precision in effect). PoleError when a lower parameter is a
// nonpositive integer reached within the truncation.
template <class T>
TruncatedSeries1D<T> pfq_coefficients(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                                      unsigned N);
template <class T>
TruncatedSeries2D<T> appell_coefficients(AppellKind kind, const std::vector<Rational>& params, unsigned N);

// ConvergenceError outside |z| < 1, resp. the kind's domain:
// F1, F3: |x|, |y| < 1; F2: |x| + |y| < 1; F4: sqrt|x| + sqrt|y| < 1.
void check_pfq_point(const Rational& z);
void check_appell_point(AppellKind kind, const Rational& x, const Rational& y);

template <class T>
struct SeriesValue {
  T value;
  // Largest retained term on the truncation boundary, in absolute value.
  T last_term;
};

// sum over k of k^power c_k z^k.
template <class T>
SeriesValue<T> theta_sum(const TruncatedSeries1D<T>& series, const T& z, unsigned power = 0);
template <class T>
SeriesValue<T> theta_sum(const TruncatedSeries2D<T>& series, const T& x, const T& y, unsigned i = 0, unsigned j = 0);

// Value and boundary term of pFq / Appell series at a point.
SeriesValue<Float> series_pfq(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const Rational& z,
                              unsigned N, unsigned digits = precision_digits());
SeriesValue<Rational> series_pfq_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                                       const Rational& z, unsigned N);
SeriesValue<Float> series_appell(AppellKind kind, const std::vector<Rational>& params, const Rational& x,
                                 const Rational& y, unsigned N, unsigned digits = precision_digits());

// Operator applied to the series, coefficients evaluated exactly at the
// point and parameters. PoleError when a coefficient has a pole there.
template <class T>
SeriesValue<T> apply_theta_series(const TruncatedSeries1D<T>& series, const ThetaOperator1D& op, const Symbol& z,
                                  const Rational& point, const Bindings& params);
template <class T>
SeriesValue<T> apply_theta_series(const TruncatedSeries2D<T>& series, const ThetaOperator2D& op, const Symbol& x,
                                  const Symbol& y, const Rational& px, const Rational& py, const Bindings& params);

struct EvalReport {
  Float lhs;
  Float rhs;
  // |lhs - rhs| / max(|lhs|, |rhs|, 1e-30)
  Float relative_error;
  Float truncation_estimate;
  bool passed = false;
};

// Compares the series of `lhs` with factor * op(base) + inhomogeneous.
EvalReport verify_reduction(const PFQSpec& lhs, const ReductionResult1D& result, const Rational& z,
                            const Bindings& params, unsigned N = 120, double tol = 1e-12,
                            unsigned digits = precision_digits());
EvalReport verify_reduction(const AppellSpec& lhs, const ReductionResult2D& result, const Rational& x,
                            const Rational& y, const Bindings& params, unsigned N = 80, double tol = 1e-12,
                            unsigned digits = precision_digits());

// Coefficients of D * op applied to the formal series, where D clears every
// denominator of op after the parameters are bound, up to the truncation
// order. An operator that annihilates the function gives all zeros.
std::vector<Rational> residual_1d(const ThetaOperator1D& op, const Symbol& z, const Bindings& params,
                                  const TruncatedSeries1D<Rational>& series);
std::vector<std::vector<Rational>> residual_2d(const ThetaOperator2D& op, const Symbol& x, const Symbol& y,
                                               const Bindings& params, const TruncatedSeries2D<Rational>& series);

// Numeric values of spec parameters.
std::vector<Rational> evaluate_params(const std::vector<ParameterExpr>& params, const Bindings& bindings);

}  // namespace hyperred
