#include "hyperred/appell/reduce.hpp"

#include <array>
#include <utility>

#include "hyperred/errors.hpp"

namespace hyperred {
namespace {

using RF = RationalFunction;

struct Guard {
  RF value;
  std::string name;
};

void require_nonzero(const std::vector<Guard>& guards, const std::string& what) {
  std::vector<std::string> violations;
  for (const auto& g : guards) {
    if (g.value.is_zero()) violations.push_back(g.name + " = 0");
  }
  if (!violations.empty()) throw ExceptionalParameter(what, violations);
}

// Which theta operators accompany each slot in the direct relations.
std::pair<bool, bool> theta_part(AppellKind kind, std::size_t slot) {
  switch (kind) {
    case AppellKind::F1: {
      static constexpr std::array<std::pair<bool, bool>, 4> t{{{true, true}, {true, false}, {false, true}, {true, true}}};
      return t.at(slot);
    }
    case AppellKind::F2: {
      static constexpr std::array<std::pair<bool, bool>, 5> t{
          {{true, true}, {true, false}, {false, true}, {true, false}, {false, true}}};
      return t.at(slot);
    }
    case AppellKind::F3: {
      static constexpr std::array<std::pair<bool, bool>, 5> t{
          {{true, false}, {false, true}, {true, false}, {false, true}, {true, true}}};
      return t.at(slot);
    }
    case AppellKind::F4: {
      static constexpr std::array<std::pair<bool, bool>, 4> t{{{true, true}, {true, true}, {true, false}, {false, true}}};
      return t.at(slot);
    }
  }
  return {false, false};
}

std::vector<std::size_t> permutation(AppellKind kind, AppellSymmetry symmetry) {
  if (symmetry == AppellSymmetry::upper) {
    if (kind != AppellKind::F4) throw DomainError("the a<->b symmetry belongs to F4 only");
    return {1, 0, 2, 3};
  }
  switch (kind) {
    case AppellKind::F1: return {0, 2, 1, 3};
    case AppellKind::F2: return {0, 2, 1, 4, 3};
    case AppellKind::F3: return {1, 0, 3, 2, 4};
    case AppellKind::F4: return {0, 1, 3, 2};
  }
  return {};
}

AppellSpec with_param(const AppellSpec& spec, std::size_t slot, long delta) {
  AppellSpec out = spec;
  out.params[slot] = spec.params[slot].shifted(delta);
  return out;
}

// Inverse relation on a slot that has its own closed form.
ThetaOperator2D primary_inverse(const AppellSpec& spec, std::size_t slot) {
  const RF X(spec.x);
  const RF Y(spec.y);
  const RF one(1);
  const RF omx = one - X;
  const RF omy = one - Y;
  const RF u = one - X - Y;
  std::vector<RF> p;
  for (const auto& param : spec.params) p.push_back(param.value());
  const auto& names = slot_names(spec.kind);
  const std::string what = "cannot shift " + names[slot] + " of " + spec.to_string();
  auto op = [](const RF& c00, const RF& c10, const RF& c01, const RF& c11 = RF()) {
    return ThetaOperator2D({{{0U, 0U}, c00}, {{1U, 0U}, c10}, {{0U, 1U}, c01}, {{1U, 1U}, c11}});
  };
  switch (spec.kind) {
    case AppellKind::F1: {
      const RF &a = p[0], &b1 = p[1], &b2 = p[2], &c = p[3];
      if (slot == 0) {
        const RF d = c - a;
        require_nonzero({{d, "c-a"}}, what);
        return op(d - b1 * X - b2 * Y, omx, omy).scaled(one / d);
      }
      if (slot == 1) {
        const RF d = c - b1 - b2;
        require_nonzero({{d, "c-b1-b2"}}, what);
        return op(d - a * X, omx, -(X * (one - one / Y))).scaled(one / d);
      }
      const RF d1 = c - a;
      const RF d2 = c - b1 - b2;
      require_nonzero({{d1, "c-a"}, {d2, "c-b1-b2"}}, what);
      return op(c - a - b1 - b2, -(one - one / X), -(one - one / Y)).scaled(c / d1 / d2);
    }
    case AppellKind::F2: {
      const RF &a = p[0], &b1 = p[1], &b2 = p[2], &c1 = p[3], &c2 = p[4];
      if (slot == 0) {
        const RF d1 = c1 - a;
        const RF d2 = c2 - a;
        const RF e = c1 + c2 - a - one;
        require_nonzero({{d1, "c1-a"}, {d2, "c2-a"}, {e, "c1+c2-a-1"}}, what);
        const RF w = (one / d1 + one / d2) / e;
        ThetaOperator2D result = op(one - X * b1 / d1 - Y * b2 / d2, omx / d1, omy / d2);
        return result + op(RF(), -(b2 * Y), -(b1 * X), u).scaled(w);
      }
      if (slot == 1) {
        const RF d = c1 - b1;
        require_nonzero({{d, "c1-b1"}}, what);
        return op(d - X * a, omx, -X).scaled(one / d);
      }
      const RF d1 = c1 - a;
      const RF d2 = c1 - b1;
      const RF e = c1 + c2 - a - one;
      require_nonzero({{d1, "c1-a"}, {d2, "c1-b1"}, {e, "c1+c2-a-1"}}, what);
      const RF w = one / (X * e);
      ThetaOperator2D inner = op(c1 - a - b1, -(one - one / X), RF()) -
                              op(RF(), Y * b2, X * b1, -u).scaled(w);
      return inner.scaled(c1 / d1 / d2);
    }
    case AppellKind::F3: {
      const RF &a1 = p[0], &a2 = p[1], &b1 = p[2], &b2 = p[3], &c = p[4];
      if (slot == 0 || slot == 2) {
        // The b1 relation is the a1 relation with a <-> b.
        const RF& s1 = slot == 0 ? a1 : b1;
        const RF& s2 = slot == 0 ? a2 : b2;
        const RF& t1 = slot == 0 ? b1 : a1;
        const RF& t2 = slot == 0 ? b2 : a2;
        const RF d1 = c - s1 - s2;
        const RF d2 = c - t2 - s1;
        const std::string n = slot == 0 ? "a" : "b";
        const std::string m = slot == 0 ? "b" : "a";
        require_nonzero({{d1, "c-" + n + "1-" + n + "2"}, {d2, "c-" + m + "2-" + n + "1"}}, what);
        const RF k = c - t2 - s1 - s2;
        ThetaOperator2D inner = op(-(k * X * t1), k * omx, t1 * X * (one - one / Y), -(one - X + X / Y));
        return ThetaOperator2D::identity() + inner.scaled(one / d1 / d2);
      }
      const RF d1 = c - a1 - b1;
      const RF d2 = c - a2 - b2;
      const RF F = c - a1 - a2 - b1 - b2;
      const RF A = d1 * d2 * F + a1 * b1 * d1 + a2 * b2 * d2;
      const RF D1 = d2 * F + a1 * b1 - a2 * b2;
      const RF D2 = d1 * F + a2 * b2 - a1 * b1;
      const RF B = d1 + d2;
      const RF e1 = c - b1 - b2, e2 = c - a1 - a2, e3 = c - a2 - b1, e4 = c - a1 - b2;
      require_nonzero({{e1, "c-b1-b2"}, {e2, "c-a1-a2"}, {e3, "c-a2-b1"}, {e4, "c-a1-b2"}}, what);
      return op(A, -(D1 * (one - one / X)), -(D2 * (one - one / Y)), B * (one - one / X - one / Y))
          .scaled(c / e1 / e2 / e3 / e4);
    }
    case AppellKind::F4: {
      const RF &a = p[0], &b = p[1], &c1 = p[2], &c2 = p[3];
      const RF q = u * u - RF(4) * X * Y;
      if (slot == 0) {
        const RF d1 = c1 - a;
        const RF d2 = c2 - a;
        const RF e = c1 + c2 - a - one;
        require_nonzero({{d1, "c1-a"}, {d2, "c2-a"}, {e, "c1+c2-a-1"}}, what);
        ThetaOperator2D result = ThetaOperator2D::identity() -
                                 op(b, one - one / X, one).scaled(X / d1) -
                                 op(b, one, one - one / Y).scaled(Y / d2);
        const RF w = (one / d1 + one / d2) / (u * e);
        ThetaOperator2D mixed = op(-(RF(2) * a * b * X * Y),
                                   -(Y * (RF(2) * X * (a + b + one - c1) + u * (b + one - c1))),
                                   -(X * (RF(2) * Y * (a + b + one - c2) + u * (b + one - c2))), q);
        return result + mixed.scaled(w);
      }
      const RF d1 = c1 - a;
      const RF d2 = c1 - b;
      const RF e1 = c1 + c2 - a - one;
      const RF e2 = c1 + c2 - b - one;
      require_nonzero({{d1, "c1-a"}, {d2, "c1-b"}, {e1, "c1+c2-a-1"}, {e2, "c1+c2-b-1"}}, what);
      ThetaOperator2D inner = op(X * (c1 - a - b), u, -(X / c1 * (a + b + one - c2)));
      const RF w = (RF(2) * c1 + c2 - a - b - one) / (u * e1 * e2);
      ThetaOperator2D mixed =
          op(-(RF(2) * a * b * X * Y), -(Y * (u * (a + b - c2 - RF(2) * c1 + RF(2)) + RF(2) * X * (a + b - c1 + one))),
             -(X / c1 * (RF(2) * c1 * Y * (a + b + one - c2) + u * (c2 - a - one) * (c2 - b - one))), q);
      return (inner + mixed.scaled(w)).scaled(c1 / X / d1 / d2);
    }
  }
  return {};
}

}  // namespace

bool is_upper_slot(AppellKind kind, std::size_t slot) {
  switch (kind) {
    case AppellKind::F1:
    case AppellKind::F2: return slot <= 2;
    case AppellKind::F3: return slot <= 3;
    case AppellKind::F4: return slot <= 1;
  }
  return false;
}

AppellSpec symmetry_map(const AppellSpec& spec, AppellSymmetry symmetry) {
  const auto perm = permutation(spec.kind, symmetry);
  AppellSpec out = spec;
  for (std::size_t i = 0; i < perm.size(); ++i) out.params[i] = spec.params.at(perm[i]);
  if (symmetry == AppellSymmetry::arguments) std::swap(out.x, out.y);
  return out;
}

AppellStep direct_shift(const AppellSpec& spec, std::size_t slot, int direction) {
  spec.validate();
  const bool upper = is_upper_slot(spec.kind, slot);
  if (direction != (upper ? 1 : -1)) {
    throw DomainError("shifting " + slot_names(spec.kind).at(slot) + " by " + std::to_string(direction) +
                      " is not a direct relation");
  }
  const RF v = upper ? spec.params[slot].value() : spec.params[slot].value() - RF(1);
  require_nonzero({{v, upper ? slot_names(spec.kind)[slot] : slot_names(spec.kind)[slot] + "-1"}},
                  "cannot shift " + slot_names(spec.kind)[slot] + " of " + spec.to_string());
  const auto [tx, ty] = theta_part(spec.kind, slot);
  const RF w = RF(1) / v;
  ThetaOperator2D op = ThetaOperator2D::identity();
  if (tx) op.add_term(1, 0, w);
  if (ty) op.add_term(0, 1, w);
  return {op, with_param(spec, slot, direction)};
}

AppellStep inverse_shift(const AppellSpec& spec, std::size_t slot, int direction) {
  spec.validate();
  const bool upper = is_upper_slot(spec.kind, slot);
  if (direction != (upper ? -1 : 1)) {
    throw DomainError("shifting " + slot_names(spec.kind).at(slot) + " by " + std::to_string(direction) +
                      " is not an inverse relation");
  }
  static const std::vector<std::vector<std::size_t>> primary{{0, 1, 3}, {0, 1, 3}, {0, 2, 4}, {0, 2}};
  const auto& own = primary[static_cast<std::size_t>(spec.kind)];
  if (std::find(own.begin(), own.end(), slot) != own.end()) {
    return {primary_inverse(spec, slot), with_param(spec, slot, direction)};
  }
  const AppellSymmetry symmetry = spec.kind == AppellKind::F4 && slot == 1 ? AppellSymmetry::upper
                                                                           : AppellSymmetry::arguments;
  const auto perm = permutation(spec.kind, symmetry);
  const AppellSpec mirrored = symmetry_map(spec, symmetry);
  const std::size_t image = perm[slot];
  ThetaOperator2D op = primary_inverse(mirrored, image);
  if (symmetry == AppellSymmetry::arguments) op = op.transposed();
  return {op, with_param(spec, slot, direction)};
}

AppellStep unit_shift(const AppellSpec& spec, std::size_t slot, int direction) {
  const bool upper = is_upper_slot(spec.kind, slot);
  return direction == (upper ? 1 : -1) ? direct_shift(spec, slot, direction) : inverse_shift(spec, slot, direction);
}

std::vector<std::string> exceptional_check(const AppellSpec& spec) {
  spec.validate();
  // Each combination is a list of (slot, sign).
  using Combo = std::vector<std::pair<std::size_t, int>>;
  std::vector<Combo> combos;
  switch (spec.kind) {
    case AppellKind::F1:
      combos = {{{0, 1}}, {{1, 1}}, {{2, 1}}, {{3, 1}, {0, -1}}, {{3, 1}, {1, -1}, {2, -1}}};
      break;
    case AppellKind::F2:
      combos = {{{0, 1}},          {{1, 1}},          {{2, 1}},
                {{3, 1}, {0, -1}}, {{4, 1}, {0, -1}}, {{3, 1}, {4, 1}, {0, -1}},
                {{3, 1}, {1, -1}}, {{4, 1}, {2, -1}}};
      break;
    case AppellKind::F3:
      combos = {{{0, 1}},
                {{1, 1}},
                {{2, 1}},
                {{3, 1}},
                {{4, 1}, {0, -1}, {1, -1}},
                {{4, 1}, {2, -1}, {3, -1}},
                {{4, 1}, {1, -1}, {2, -1}},
                {{4, 1}, {0, -1}, {3, -1}}};
      break;
    case AppellKind::F4:
      combos = {{{0, 1}},          {{1, 1}},          {{2, 1}, {0, -1}},         {{2, 1}, {1, -1}},
                {{3, 1}, {0, -1}}, {{3, 1}, {1, -1}}, {{2, 1}, {3, 1}, {0, -1}}, {{2, 1}, {3, 1}, {1, -1}}};
      break;
  }
  const auto& names = slot_names(spec.kind);
  std::vector<std::string> violations;
  for (const auto& combo : combos) {
    ParameterExpr sum = ParameterExpr::integer(0);
    std::string name;
    for (const auto& [slot, sign] : combo) {
      sum = sign > 0 ? sum + spec.params[slot] : sum - spec.params[slot];
      if (!name.empty()) name += sign > 0 ? "+" : "-";
      name += names[slot];
    }
    if (sum.is_pure_integer()) violations.push_back(name + " ∈ ℤ");
  }
  return violations;
}

ReductionResult2D reduce2d(const AppellSpec& target, const std::vector<long>& shift) {
  target.validate();
  if (shift.size() != target.params.size()) {
    throw DomainError("shift vector has " + std::to_string(shift.size()) + " entries, " +
                      kind_name(target.kind) + " needs " + std::to_string(target.params.size()));
  }
  if (auto violations = exceptional_check(target); !violations.empty()) {
    throw ExceptionalParameter(target.to_string() + " has exceptional parameters", violations);
  }
  AppellSpec base = target;
  for (std::size_t i = 0; i < shift.size(); ++i) base.params[i] = target.params[i].shifted(shift[i]);

  Normalizer2D normalizer(base);
  ReductionResult2D result{ThetaOperator2D::identity(), base};
  AppellSpec current = base;
  for (const bool direct_pass : {true, false}) {
    for (std::size_t slot = 0; slot < shift.size(); ++slot) {
      const long delta = -shift[slot];
      if (delta == 0) continue;
      const int direction = delta > 0 ? 1 : -1;
      const bool direct = direction == (is_upper_slot(target.kind, slot) ? 1 : -1);
      if (direct != direct_pass) continue;
      for (long k = 0; k < (delta > 0 ? delta : -delta); ++k) {
        AppellStep step = unit_shift(current, slot, direction);
        result.op = normalizer.normalize(compose_raw(step.op, result.op, target.x, target.y));
        current = std::move(step.target);
      }
    }
  }
  return result;
}

std::vector<WeightedAppell> explicit_form_f1(const ReductionResult2D& result) {
  const AppellSpec& base = result.base;
  if (base.kind != AppellKind::F1) throw DomainError("explicit form is available for F1 only");
  const RF a = base.params[0].value();
  const RF b1 = base.params[1].value();
  const RF b2 = base.params[2].value();
  const RF c = base.params[3].value();
  if (c.is_zero()) throw DomainError("F1 with c = 0");
  std::vector<WeightedAppell> out;
  for (const auto& [key, w] : result.op.coeffs()) {
    if (key == ThetaOperator2D::Key{0U, 0U}) {
      out.push_back({w, base});
    } else if (key == ThetaOperator2D::Key{1U, 0U}) {
      AppellSpec s = with_param(with_param(with_param(base, 0, 1), 1, 1), 3, 1);
      out.push_back({w * RF(base.x) * a * b1 / c, s});
    } else if (key == ThetaOperator2D::Key{0U, 1U}) {
      AppellSpec s = with_param(with_param(with_param(base, 0, 1), 2, 1), 3, 1);
      out.push_back({w * RF(base.y) * a * b2 / c, s});
    } else {
      throw DomainError("operator is not normalized to the F1 basis");
    }
  }
  std::erase_if(out, [](const WeightedAppell& t) { return t.weight.is_zero(); });
  return out;
}

}  // namespace hyperred
