#pragma once

#include <string>
#include <vector>

#include "hyperred/appell/rules.hpp"

namespace hyperred {

// Applying `op` to the source function gives `target`.
struct AppellStep {
  ThetaOperator2D op;
  AppellSpec target;
};

// Whether slot i is an upper (numerator) parameter; the others are c-type.
bool is_upper_slot(AppellKind kind, std::size_t slot);

// Unit shift that needs no inversion: +1 on an upper slot, -1 on a c-type
// slot. DomainError for the other direction, ExceptionalParameter when the
// prefactor vanishes.
AppellStep direct_shift(const AppellSpec& spec, std::size_t slot, int direction);
// -1 on an upper slot, +1 on a c-type slot. ExceptionalParameter when a
// denominator of the inverse relation vanishes identically.
AppellStep inverse_shift(const AppellSpec& spec, std::size_t slot, int direction);
// Dispatches to direct_shift or inverse_shift.
AppellStep unit_shift(const AppellSpec& spec, std::size_t slot, int direction);

enum class AppellSymmetry {
  // F1: b1<->b2, F2: b1<->b2 and c1<->c2, F3: a1<->a2 and b1<->b2, F4:
  // c1<->c2; always with x<->y.
  arguments,
  // F4 only: a<->b.
  upper,
};
// DomainError for AppellSymmetry::upper on F1..F3.
AppellSpec symmetry_map(const AppellSpec& spec, AppellSymmetry symmetry = AppellSymmetry::arguments);

// Integer combinations of Table-2 type that are pure integers, e.g. "c-a ∈ ℤ".
std::vector<std::string> exceptional_check(const AppellSpec& spec);

// target = op applied to base.
struct ReductionResult2D {
  ThetaOperator2D op;
  AppellSpec base;
};

// Expresses `target` through the function whose parameters are
// target + shift. ExceptionalParameter names violated combinations.
ReductionResult2D reduce2d(const AppellSpec& target, const std::vector<long>& shift);

struct WeightedAppell {
  RationalFunction weight;
  AppellSpec spec;
};
// Replaces theta_x and theta_y by shifted F1 functions. DomainError unless
// F1 with an operator inside {1, tx, ty}.
std::vector<WeightedAppell> explicit_form_f1(const ReductionResult2D& result);

}  // namespace hyperred
