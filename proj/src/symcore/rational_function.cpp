#include "hyperred/symcore/rational_function.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "hyperred/errors.hpp"

namespace hyperred {
namespace {

bool factor_less(const RationalFunction::Factor& a, const RationalFunction::Factor& b) {
  return compare(a.base, b.base) < 0;
}

// Cheap necessary condition for `divisor | dividend`: every symbol of the
// divisor must occur in the dividend with at least the same degree.
bool may_divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (dividend.is_zero()) return true;
  if (divisor.total_degree() > dividend.total_degree()) return false;
  for (const auto& s : divisor.symbols()) {
    if (divisor.degree_in(s) > dividend.degree_in(s)) return false;
  }
  return true;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

std::uint64_t mpz_mod(const mpz_class& v) {
  mpz_class r = v % kPrime;
  if (r < 0) r += kPrime;
  return r.get_ui();
}

// Fixed pseudo-random value per symbol name.
std::uint64_t sample_value(const Symbol& s) {
  std::uint64_t h = std::hash<std::string>{}(s.name()) + 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return (h ^ (h >> 31)) % kPrime;
}

// Univariate image in `main` with every other symbol at its sample value;
// nullopt when a coefficient denominator vanishes mod p.
std::optional<std::vector<std::uint64_t>> restrict_mod(const Polynomial& poly, const Symbol& main) {
  std::vector<std::uint64_t> out(poly.degree_in(main) + 1, 0);
  for (const auto& t : poly.terms()) {
    const std::uint64_t den = mpz_mod(t.coefficient.get_den());
    if (den == 0) return std::nullopt;
    std::uint64_t v = mul_mod(mpz_mod(t.coefficient.get_num()), pow_mod(den, kPrime - 2));
    std::uint32_t e = 0;
    for (const auto& [sym, exp] : t.monomial.factors()) {
      if (sym == main) {
        e = exp;
      } else {
        v = mul_mod(v, pow_mod(sample_value(sym), exp));
      }
    }
    out[e] = (out[e] + v) % kPrime;
  }
  return out;
}

// False only when `divisor` certainly does not divide `dividend`.
bool divides_mod_p(const Polynomial& dividend, const Polynomial& divisor) {
  const auto symbols = divisor.symbols();
  if (symbols.empty()) return true;
  const Symbol& main = symbols.front();
  auto n = restrict_mod(dividend, main);
  auto d = restrict_mod(divisor, main);
  if (!n || !d || d->back() == 0) return true;
  const std::uint64_t inv = pow_mod(d->back(), kPrime - 2);
  const std::size_t dd = d->size() - 1;
  for (std::size_t i = n->size(); i-- > dd;) {
    const std::uint64_t c = mul_mod((*n)[i], inv);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      std::uint64_t& slot = (*n)[i - dd + j];
      slot = (slot + kPrime - mul_mod(c, (*d)[j])) % kPrime;
    }
  }
  for (std::size_t i = 0; i < dd && i < n->size(); ++i) {
    if ((*n)[i] != 0) return false;
  }
  return true;
}

std::optional<Polynomial> try_divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (!may_divide(dividend, divisor)) return std::nullopt;
  if (!divides_mod_p(dividend, divisor)) return std::nullopt;
  return dividend.divide_exact(divisor);
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational p;
  mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return p;
}

}  // namespace

RationalFunction RationalFunction::quotient(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw DomainError("rational function with zero denominator");
  RationalFunction result(numerator);
  if (numerator.is_zero()) return result;
  result.absorb_denominator(denominator, 1);
  result.cancel();
  return result;
}

Polynomial RationalFunction::denominator() const {
  Polynomial d(Rational(1));
  for (const auto& f : factors_) d = d * f.base.pow(f.multiplicity);
  return d;
}

bool RationalFunction::contains(const Symbol& symbol) const {
  if (numerator_.contains(symbol)) return true;
  return std::any_of(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.base.contains(symbol); });
}

void RationalFunction::absorb_denominator(const Polynomial& base, unsigned multiplicity) {
  if (base.is_zero()) throw DomainError("division by zero");
  if (multiplicity == 0) return;
  if (base.is_constant()) {
    numerator_ = numerator_.scaled(1 / rational_pow(base.constant_value(), multiplicity));
    return;
  }
  Rational c = base.content();
  if (base.leading_term().coefficient < 0) c = -c;
  Polynomial primitive = base.scaled(1 / c);
  numerator_ = numerator_.scaled(1 / rational_pow(c, multiplicity));
  const Monomial mono = primitive.monomial_content();
  if (!mono.is_one()) {
    for (const auto& [symbol, exponent] : mono.factors()) insert_primitive_factor(Polynomial(symbol), exponent * multiplicity);
    primitive = *primitive.divide_exact(Polynomial(mono, 1));
    if (primitive.is_constant()) return;
  }
  insert_primitive_factor(std::move(primitive), multiplicity);
}

void RationalFunction::insert_primitive_factor(Polynomial base, unsigned multiplicity) {
  for (auto& f : factors_) {
    if (f.base == base) {
      f.multiplicity += multiplicity;
      return;
    }
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (auto q = try_divide(base, factors_[i].base)) {
      factors_[i].multiplicity += multiplicity;
      absorb_denominator(*q, multiplicity);
      return;
    }
    if (auto q = try_divide(factors_[i].base, base)) {
      const unsigned existing = factors_[i].multiplicity;
      factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(i));
      absorb_denominator(*q, existing);
      insert_primitive_factor(std::move(base), multiplicity + existing);
      return;
    }
  }
  factors_.push_back(Factor{std::move(base), multiplicity});
  std::sort(factors_.begin(), factors_.end(), factor_less);
}

void RationalFunction::cancel() {
  if (numerator_.is_zero()) {
    factors_.clear();
    return;
  }
  for (auto it = factors_.begin(); it != factors_.end();) {
    while (it->multiplicity > 0) {
      auto q = try_divide(numerator_, it->base);
      if (!q) break;
      numerator_ = std::move(*q);
      --it->multiplicity;
    }
    it = it->multiplicity == 0 ? factors_.erase(it) : std::next(it);
  }
}

Polynomial RationalFunction::cofactor(const std::vector<Factor>& lcm) const {
  Polynomial result(Rational(1));
  auto mine = factors_.begin();
  for (const auto& f : lcm) {
    unsigned have = 0;
    while (mine != factors_.end() && factor_less(*mine, f)) ++mine;
    if (mine != factors_.end() && mine->base == f.base) have = mine->multiplicity;
    if (f.multiplicity > have) result = result * f.base.pow(f.multiplicity - have);
  }
  return result;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction result = *this;
  result.numerator_ = -numerator_;
  return result;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  RationalFunction result;
  if (factors_ == rhs.factors_) {
    result.numerator_ = numerator_ + rhs.numerator_;
    result.factors_ = factors_;
  } else {
    std::vector<Factor> lcm;
    auto a = factors_.begin();
    auto b = rhs.factors_.begin();
    while (a != factors_.end() || b != rhs.factors_.end()) {
      if (b == rhs.factors_.end() || (a != factors_.end() && factor_less(*a, *b))) {
        lcm.push_back(*a++);
      } else if (a == factors_.end() || factor_less(*b, *a)) {
        lcm.push_back(*b++);
      } else {
        lcm.push_back(Factor{a->base, std::max(a->multiplicity, b->multiplicity)});
        ++a;
        ++b;
      }
    }
    result.numerator_ = numerator_ * cofactor(lcm) + rhs.numerator_ * rhs.cofactor(lcm);
    result.factors_ = std::move(lcm);
  }
  result.cancel();
  return result;
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const { return *this + (-rhs); }

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  if (rhs.is_constant()) {
    RationalFunction result = *this;
    result.numerator_ = numerator_.scaled(rhs.numerator_.constant_value());
    return result;
  }
  if (is_constant()) return rhs * *this;
  RationalFunction a = *this;
  RationalFunction b = rhs;
  // Both operands are already reduced; only cross terms can cancel.
  for (auto pair : {std::pair{&a, &b}, std::pair{&b, &a}}) {
    auto& num = pair.first->numerator_;
    auto& dens = pair.second->factors_;
    for (auto it = dens.begin(); it != dens.end();) {
      while (it->multiplicity > 0) {
        auto q = try_divide(num, it->base);
        if (!q) break;
        num = std::move(*q);
        --it->multiplicity;
      }
      it = it->multiplicity == 0 ? dens.erase(it) : std::next(it);
    }
  }
  RationalFunction result;
  result.numerator_ = a.numerator_ * b.numerator_;
  result.factors_ = std::move(a.factors_);
  bool split = false;
  for (auto& f : b.factors_) {
    const auto has = [&](const Polynomial& base) {
      return std::any_of(result.factors_.begin(), result.factors_.end(),
                         [&](const Factor& g) { return g.base == base; });
    };
    const bool fresh = !has(f.base);
    const std::size_t before = result.factors_.size();
    result.insert_primitive_factor(f.base, f.multiplicity);
    if (fresh && (result.factors_.size() != before + 1 || !has(f.base))) split = true;
  }
  if (split) result.cancel();
  return result;
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  if (rhs.is_zero()) throw DomainError("division by the zero rational function");
  if (is_zero()) return {};
  RationalFunction inverse(rhs.denominator());
  inverse.absorb_denominator(rhs.numerator_, 1);
  inverse.cancel();
  return *this * inverse;
}

RationalFunction RationalFunction::pow(int exponent) const {
  if (exponent < 0) return RationalFunction(1) / pow(-exponent);
  RationalFunction result(1);
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

RationalFunction RationalFunction::derivative(const Symbol& symbol) const {
  if (!contains(symbol)) return {};
  RationalFunction result;
  result.numerator_ = numerator_.derivative(symbol);
  result.factors_ = factors_;
  result.cancel();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Polynomial d = factors_[i].base.derivative(symbol);
    if (d.is_zero()) continue;
    RationalFunction term;
    term.numerator_ = (numerator_ * d).scaled(-Rational(factors_[i].multiplicity));
    term.factors_ = factors_;
    term.factors_[i].multiplicity += 1;
    term.cancel();
    result = result + term;
  }
  return result;
}

Rational RationalFunction::evaluate(const Bindings& bindings) const {
  Rational value = numerator_.evaluate(bindings);
  for (const auto& f : factors_) {
    const Rational v = f.base.evaluate(bindings);
    if (v == 0) throw PoleError(f.base.to_string());
    value /= rational_pow(v, f.multiplicity);
  }
  return value;
}

RationalFunction RationalFunction::substitute(const Bindings& bindings) const {
  RationalFunction result(numerator_.substitute(bindings));
  if (result.is_zero()) return result;
  for (const auto& f : factors_) {
    const Polynomial base = f.base.substitute(bindings);
    if (base.is_zero()) throw PoleError(f.base.to_string());
    result.absorb_denominator(base, f.multiplicity);
  }
  result.cancel();
  return result;
}

bool RationalFunction::equals_by_cross_multiplication(const RationalFunction& other) const {
  return numerator_ * other.denominator() == other.numerator_ * denominator();
}

std::string RationalFunction::to_string() const {
  if (factors_.empty()) return numerator_.to_string();
  std::string num = numerator_.to_string();
  if (numerator_.terms().size() > 1) num = "(" + num + ")";
  std::string den;
  bool compound = factors_.size() > 1;
  for (const auto& f : factors_) {
    std::string piece = f.base.to_string();
    if (f.base.terms().size() > 1) piece = "(" + piece + ")";
    if (f.multiplicity > 1) {
      piece += "^" + std::to_string(f.multiplicity);
      compound = true;
    }
    if (!den.empty()) den += "*";
    den += piece;
  }
  if (compound) den = "(" + den + ")";
  return num + "/" + den;
}

RationalFunction operator+(const Rational& lhs, const RationalFunction& rhs) { return RationalFunction(lhs) + rhs; }
RationalFunction operator*(const Rational& lhs, const RationalFunction& rhs) { return RationalFunction(lhs) * rhs; }

}  // namespace hyperred
