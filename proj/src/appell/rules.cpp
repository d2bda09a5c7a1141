#include "hyperred/appell/rules.hpp"

#include "hyperred/errors.hpp"

namespace hyperred {
namespace {

using RF = RationalFunction;

struct Frame {
  RF X, Y, one{1};
  std::vector<RF> p;
  explicit Frame(const AppellSpec& spec) : X(spec.x), Y(spec.y) {
    spec.validate();
    for (const auto& param : spec.params) p.push_back(param.value());
  }
  RF omx() const { return one - X; }
  RF omy() const { return one - Y; }
  RF u() const { return one - X - Y; }
};

ThetaOperator2D op4(const RF& c00, const RF& c10, const RF& c01, const RF& c11) {
  return ThetaOperator2D({{{0U, 0U}, c00}, {{1U, 0U}, c10}, {{0U, 1U}, c01}, {{1U, 1U}, c11}});
}

// theta_x^i theta_y^j o rule, no normalization.
ThetaOperator2D after(unsigned i, unsigned j, const ThetaOperator2D& rule, const AppellSpec& spec) {
  return compose_raw(ThetaOperator2D::monomial(i, j), rule, spec.x, spec.y);
}

// Replaces theta_xx and theta_yy terms in place; every other term is kept.
ThetaOperator2D substitute_second(const ThetaOperator2D& op, const SecondOrderRules& rules) {
  ThetaOperator2D out;
  for (const auto& [key, c] : op.coeffs()) {
    if (key == ThetaOperator2D::Key{2U, 0U}) {
      out = out + rules.xx.scaled(c);
    } else if (key == ThetaOperator2D::Key{0U, 2U}) {
      out = out + rules.yy.scaled(c);
    } else {
      out.add_term(key.first, key.second, c);
    }
  }
  return out;
}

}  // namespace

PDECoefficients pde_coefficients(const AppellSpec& spec) {
  const Frame f(spec);
  const RF& X = f.X;
  const RF& Y = f.Y;
  const auto& p = f.p;
  const RF one(1);
  PDECoefficients t;
  switch (spec.kind) {
    case AppellKind::F1: {
      const RF &a = p[0], &b1 = p[1], &b2 = p[2], &c = p[3];
      t.P0 = RF(-1);
      t.R0 = RF(-1);
      t.P1 = ((a + b1) * X - (c - one)) / f.omx();
      t.R1 = b2 * Y / f.omy();
      t.P2 = b1 * X / f.omx();
      t.R2 = ((a + b2) * Y - (c - one)) / f.omy();
      t.P3 = a * b1 * X / f.omx();
      t.R3 = a * b2 * Y / f.omy();
      break;
    }
    case AppellKind::F2: {
      const RF &a = p[0], &b1 = p[1], &b2 = p[2], &c1 = p[3], &c2 = p[4];
      t.P0 = X / f.omx();
      t.R0 = Y / f.omy();
      t.P1 = ((a + b1) * X - (c1 - one)) / f.omx();
      t.R1 = b2 * Y / f.omy();
      t.P2 = b1 * X / f.omx();
      t.R2 = ((a + b2) * Y - (c2 - one)) / f.omy();
      t.P3 = a * b1 * X / f.omx();
      t.R3 = a * b2 * Y / f.omy();
      break;
    }
    case AppellKind::F3: {
      const RF &a1 = p[0], &a2 = p[1], &b1 = p[2], &b2 = p[3], &c = p[4];
      t.P0 = RF(-1) / f.omx();
      t.R0 = RF(-1) / f.omy();
      t.P1 = ((a1 + b1) * X - (c - one)) / f.omx();
      t.R2 = ((a2 + b2) * Y - (c - one)) / f.omy();
      t.P3 = a1 * b1 * X / f.omx();
      t.R3 = a2 * b2 * Y / f.omy();
      break;
    }
    case AppellKind::F4: {
      const RF &a = p[0], &b = p[1], &c1 = p[2], &c2 = p[3];
      const RF u = f.u();
      t.P0 = RF(2) * X / u;
      t.R0 = RF(2) * Y / u;
      t.P1 = ((a + b) * X - (c1 - one) * f.omy()) / u;
      t.R1 = (a + b + one - c1) * Y / u;
      t.P2 = (a + b + one - c2) * X / u;
      t.R2 = ((a + b) * Y - (c2 - one) * f.omx()) / u;
      t.P3 = a * b * X / u;
      t.R3 = a * b * Y / u;
      break;
    }
  }
  return t;
}

ThetaOperator2D f1_xy_rule(const AppellSpec& spec) {
  if (spec.kind != AppellKind::F1) throw DomainError("the xy rule applies to F1 only");
  const Frame f(spec);
  const RF xmy = f.X - f.Y;
  return ThetaOperator2D({{{1U, 0U}, f.p[2] * f.Y / xmy}, {{0U, 1U}, -(f.p[1] * f.X / xmy)}});
}

SecondOrderRules second_order_rules(const AppellSpec& spec) {
  const PDECoefficients t = pde_coefficients(spec);
  SecondOrderRules rules{op4(t.P3, t.P1, t.P2, t.P0), op4(t.R3, t.R1, t.R2, t.R0)};
  if (spec.kind == AppellKind::F1) {
    const ThetaOperator2D xy = f1_xy_rule(spec);
    rules.xx = op4(t.P3, t.P1, t.P2, RF()) + xy.scaled(t.P0);
    rules.yy = op4(t.R3, t.R1, t.R2, RF()) + xy.scaled(t.R0);
  }
  return rules;
}

ThirdOrderRules third_order_rules(const AppellSpec& spec) {
  const Frame f(spec);
  const RF& X = f.X;
  const RF& Y = f.Y;
  const RF one(1);
  const auto& p = f.p;
  switch (spec.kind) {
    case AppellKind::F1:
      throw DomainError("F1 has no third-order rules; use the xy rule");
    case AppellKind::F2: {
      const RF &a = p[0], &b1 = p[1], &b2 = p[2], &c1 = p[3], &c2 = p[4];
      const RF s = one / f.u();
      const RF wx = X * Y / f.omx();
      const RF wy = X * Y / f.omy();
      ThirdOrderRules r;
      r.xxy = op4(a * b1 * b2 * wx, b2 * wx * (a + b1 + one - c1), (a + one - c2) * b1 * X + b1 * b2 * wx,
                  (a + b1 + one - c2) * X - (c1 - one) * f.omy() + b2 * wx)
                  .scaled(s);
      r.xyy = op4(a * b1 * b2 * wy, (a + one - c1) * b2 * Y + b1 * b2 * wy, b1 * wy * (a + b2 + one - c2),
                  (a + b2 + one - c1) * Y - (c2 - one) * f.omx() + b1 * wy)
                  .scaled(s);
      return r;
    }
    case AppellKind::F3: {
      const RF &a1 = p[0], &a2 = p[1], &b1 = p[2], &b2 = p[3], &c = p[4];
      const RF s = one / (X * Y - X - Y);
      ThirdOrderRules r;
      r.xxy = op4(RF(), -(Y * a2 * b2), f.omy() * X * a1 * b1,
                  f.omy() * (a1 + b1) * X - Y * (a2 + b2 + one - c))
                  .scaled(s);
      r.xyy = op4(RF(), f.omx() * Y * a2 * b2, -(X * a1 * b1),
                  f.omx() * (a2 + b2) * Y - X * (a1 + b1 + one - c))
                  .scaled(s);
      return r;
    }
    case AppellKind::F4: {
      const RF &a = p[0], &b = p[1], &c1 = p[2], &c2 = p[3];
      const RF u = f.u();
      const RF q = u * u - RF(4) * X * Y;
      const RF e1 = a + b + one - c1;
      const RF e2 = a + b + one - c2;
      const RF ab = a * b;
      ThetaOperator2D xxy({{{2U, 0U}, Y * (u + RF(2) * X * e1)},
                           {{0U, 2U}, X * (RF(2) * X + u * e2)},
                           {{1U, 1U}, RF(2) * e2 * f.omx() * X - (c1 - one) * u * u - X * u * (a + b + c1 - one)},
                           {{1U, 0U}, Y * ((c1 - one) * u + RF(2) * ab * X)},
                           {{0U, 1U}, X * (RF(2) * X * (c2 - one) + u * ab)}});
      ThetaOperator2D xyy({{{0U, 2U}, X * (u + RF(2) * Y * e2)},
                           {{2U, 0U}, Y * (RF(2) * Y + u * e1)},
                           {{1U, 1U}, RF(2) * e1 * f.omy() * Y - (c2 - one) * u * u - Y * u * (a + b + c2 - one)},
                           {{0U, 1U}, X * ((c2 - one) * u + RF(2) * ab * Y)},
                           {{1U, 0U}, Y * (RF(2) * Y * (c1 - one) + u * ab)}});
      const SecondOrderRules second = second_order_rules(spec);
      const RF s = one / q;
      return {substitute_second(xxy, second).scaled(s), substitute_second(xyy, second).scaled(s)};
    }
  }
  return {};
}

ThirdOrderRules generic_third_order_rules(const AppellSpec& spec) {
  if (spec.kind == AppellKind::F1) throw DomainError("F1 has no third-order rules; use the xy rule");
  const PDECoefficients t = pde_coefficients(spec);
  const SecondOrderRules second = second_order_rules(spec);
  // theta_y o theta_xx = P0 theta_xyy + alpha, theta_x o theta_yy = R0 theta_xxy + beta.
  auto strip = [&](const ThetaOperator2D& op, ThetaOperator2D::Key drop) {
    ThetaOperator2D rest;
    for (const auto& [key, c] : op.coeffs()) {
      if (key != drop) rest.add_term(key.first, key.second, c);
    }
    return substitute_second(rest, second);
  };
  const ThetaOperator2D alpha = strip(after(0, 1, second.xx, spec), {1U, 2U});
  const ThetaOperator2D beta = strip(after(1, 0, second.yy, spec), {2U, 1U});
  const RF det = RF(1) - t.P0 * t.R0;
  if (det.is_zero()) throw DomainError("second-order system is degenerate");
  const RF inv = RF(1) / det;
  return {(beta.scaled(t.P0) + alpha).scaled(inv), (alpha.scaled(t.R0) + beta).scaled(inv)};
}

bool is_basis_monomial(AppellKind kind, unsigned i, unsigned j) {
  if (kind == AppellKind::F1) return i + j <= 1;
  return i <= 1 && j <= 1;
}

Normalizer2D::Normalizer2D(const AppellSpec& spec) : spec_(spec), second_(second_order_rules(spec)) {
  if (spec.kind == AppellKind::F1) {
    xy_ = f1_xy_rule(spec);
  } else {
    third_ = third_order_rules(spec);
  }
}

const ThetaOperator2D& Normalizer2D::image(unsigned i, unsigned j) {
  const ThetaOperator2D::Key key{i, j};
  if (auto it = images_.find(key); it != images_.end()) return it->second;
  ThetaOperator2D raw;
  if (spec_.kind == AppellKind::F1) {
    if (i >= 1 && j >= 1) {
      raw = after(i - 1, j - 1, xy_, spec_);
    } else if (i >= 2) {
      raw = after(i - 2, 0, second_.xx, spec_);
    } else {
      raw = after(0, j - 2, second_.yy, spec_);
    }
  } else if (i >= 2 && j >= 1) {
    raw = after(i - 2, j - 1, third_.xxy, spec_);
  } else if (i >= 1 && j >= 2) {
    raw = after(i - 1, j - 2, third_.xyy, spec_);
  } else if (i >= 2) {
    raw = after(i - 2, 0, second_.xx, spec_);
  } else {
    raw = after(0, j - 2, second_.yy, spec_);
  }
  ThetaOperator2D reduced = normalize(raw);
  return images_.emplace(key, std::move(reduced)).first->second;
}

ThetaOperator2D Normalizer2D::normalize(const ThetaOperator2D& op) {
  ThetaOperator2D result;
  for (const auto& [key, c] : op.coeffs()) {
    if (is_basis_monomial(spec_.kind, key.first, key.second)) {
      result.add_term(key.first, key.second, c);
    } else {
      result = result + image(key.first, key.second).scaled(c);
    }
  }
  return result;
}

ThetaOperator2D normalize_2d(const ThetaOperator2D& op, const AppellSpec& spec) {
  Normalizer2D normalizer(spec);
  return normalizer.normalize(op);
}

}  // namespace hyperred
