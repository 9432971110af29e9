#include "meadow/normalize.hpp"

#include "meadow/error.hpp"

namespace meadow {

ClosedNormal ClosedNormal::zero_form() { return ClosedNormal(); }

ClosedNormal ClosedNormal::fraction(const mpz_class& n, const mpz_class& m, bool negative) {
  if (n < 1 || m < 1) throw Error(Errc::InvalidArgument, "fraction components must be >= 1");
  ClosedNormal c;
  c.zero_ = false;
  c.negative_ = negative;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  c.num_ = n / g;
  c.den_ = m / g;
  return c;
}

ClosedNormal ClosedNormal::from_rational(const Rational& q) {
  if (q.is_zero()) return zero_form();
  mpz_class n = q.numerator();
  return fraction(abs(n), q.denominator(), q.sign() < 0);
}

Rational ClosedNormal::to_rational() const {
  if (zero_) return Rational(0);
  return Rational(negative_ ? mpz_class(-num_) : num_, den_);
}

std::string ClosedNormal::to_string() const {
  if (zero_) return "0";
  std::string out = negative_ ? "-" : "";
  out += num_.get_str();
  if (den_ != 1) out += "/" + den_.get_str();
  return out;
}

namespace {

PolyFraction split_rec(const Term& t, const NormalizeOptions& opts) {
  switch (t.op()) {
    case Op::One:
      return {PosPoly(), PosPoly()};
    case Op::Var:
      return {PosPoly::variable(t.name()), PosPoly()};
    case Op::Add: {
      // a/b + c/d = (a*d + c*b) / (b*d)
      PolyFraction l = split_rec(t.lhs(), opts);
      PolyFraction r = split_rec(t.rhs(), opts);
      PosPoly num = l.numerator.times(r.denominator, opts.max_monomials)
                        .plus(r.numerator.times(l.denominator, opts.max_monomials),
                              opts.max_monomials);
      return {std::move(num), l.denominator.times(r.denominator, opts.max_monomials)};
    }
    case Op::Mul: {
      PolyFraction l = split_rec(t.lhs(), opts);
      PolyFraction r = split_rec(t.rhs(), opts);
      return {l.numerator.times(r.numerator, opts.max_monomials),
              l.denominator.times(r.denominator, opts.max_monomials)};
    }
    case Op::Inv: {
      PolyFraction a = split_rec(t.arg(), opts);
      return {std::move(a.denominator), std::move(a.numerator)};
    }
    default:
      throw Error(Errc::NotInSignature, "split_inverse: constructor '" +
                                            std::string(op_name(t.op())) + "' is not in signature iamd");
  }
}

PosPoly poly_rec(const Term& t, const NormalizeOptions& opts) {
  switch (t.op()) {
    case Op::One:
      return PosPoly();
    case Op::Var:
      return PosPoly::variable(t.name());
    case Op::Add:
      return poly_rec(t.lhs(), opts).plus(poly_rec(t.rhs(), opts), opts.max_monomials);
    case Op::Mul:
      return poly_rec(t.lhs(), opts).times(poly_rec(t.rhs(), opts), opts.max_monomials);
    case Op::Inv:
      throw Error(Errc::ContainsInverse, "poly_normal: term contains a multiplicative inverse");
    default:
      throw Error(Errc::NotInSignature, "poly_normal: constructor '" + std::string(op_name(t.op())) +
                                            "' is not in signature iamd");
  }
}

void require_closed(const Term& t, std::string_view context) {
  auto vars = free_vars(t);
  if (!vars.empty()) {
    throw Error(Errc::NotClosed, std::string(context) + ": term has variable '" + *vars.begin() + "'");
  }
}

// Signed fractions over (numerator, denominator) pairs, denominator > 0.
struct Frac {
  mpz_class num;
  mpz_class den;
};

Frac reduce(mpz_class num, mpz_class den) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

Frac total_inverse(const Frac& f) {
  if (f.num == 0) return {0, 1};
  if (f.num < 0) return {-f.den, -f.num};
  return {f.den, f.num};
}

Frac full_rec(const Term& t) {
  switch (t.op()) {
    case Op::Zero:
      return {0, 1};
    case Op::One:
      return {1, 1};
    case Op::Add: {
      Frac a = full_rec(t.lhs());
      Frac b = full_rec(t.rhs());
      return reduce(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    case Op::Mul: {
      Frac a = full_rec(t.lhs());
      Frac b = full_rec(t.rhs());
      return reduce(a.num * b.num, a.den * b.den);
    }
    case Op::Neg: {
      Frac a = full_rec(t.arg());
      return {-a.num, a.den};
    }
    case Op::Inv:
      return total_inverse(full_rec(t.arg()));
    case Op::Div: {
      Frac a = full_rec(t.lhs());
      Frac b = total_inverse(full_rec(t.rhs()));
      return reduce(a.num * b.num, a.den * b.den);
    }
    case Op::Var:
      break;
  }
  throw Error(Errc::NotClosed, "closed_normal_full: unexpected variable");
}

}  // namespace

PolyFraction split_inverse(const Term& t, const NormalizeOptions& opts) {
  require_conforms(t, Signature::IAMD, "split_inverse");
  return split_rec(t, opts);
}

PosPoly poly_normal(const Term& t, const NormalizeOptions& opts) {
  require_conforms(t, Signature::IAMD, "poly_normal");
  return poly_rec(t, opts);
}

ClosedNormal closed_normal_iamd(const Term& t, const NormalizeOptions& opts) {
  require_conforms(t, Signature::IAMD, "closed_normal_iamd");
  require_closed(t, "closed_normal_iamd");
  PolyFraction f = split_rec(t, opts);
  return ClosedNormal::fraction(f.numerator.constant_value(), f.denominator.constant_value());
}

ClosedNormal closed_normal_iamdz(const Term& t, const NormalizeOptions& opts) {
  require_conforms(t, Signature::IAMDZ, "closed_normal_iamdz");
  require_closed(t, "closed_normal_iamdz");
  ZeroElim z = zero_elim(t);
  if (std::holds_alternative<ZeroResult>(z)) return ClosedNormal::zero_form();
  PolyFraction f = split_rec(std::get<Term>(z), opts);
  return ClosedNormal::fraction(f.numerator.constant_value(), f.denominator.constant_value());
}

ClosedNormal closed_normal_full(const Term& t) {
  if (!conforms(t, Signature::IMD) && !conforms(t, Signature::DMD)) {
    throw Error(Errc::NotInSignature, "closed_normal_full: term conforms to neither imd nor dmd");
  }
  require_closed(t, "closed_normal_full");
  Frac f = full_rec(t);
  if (f.num == 0) return ClosedNormal::zero_form();
  return ClosedNormal::fraction(abs(f.num), f.den, f.num < 0);
}

ZeroElim zero_elim(const Term& t) {
  switch (t.op()) {
    case Op::Zero:
      return ZeroResult{};
    case Op::One:
    case Op::Var:
      return t;
    case Op::Inv: {
      ZeroElim a = zero_elim(t.arg());
      if (std::holds_alternative<ZeroResult>(a)) return ZeroResult{};
      const Term& at = std::get<Term>(a);
      return at.same_node(t.arg()) ? t : Term::inv(at);
    }
    case Op::Add:
    case Op::Mul: {
      ZeroElim l = zero_elim(t.lhs());
      ZeroElim r = zero_elim(t.rhs());
      bool lz = std::holds_alternative<ZeroResult>(l);
      bool rz = std::holds_alternative<ZeroResult>(r);
      if (t.op() == Op::Mul) {
        if (lz || rz) return ZeroResult{};
      } else {
        if (lz && rz) return ZeroResult{};
        if (lz) return r;
        if (rz) return l;
      }
      const Term& lt = std::get<Term>(l);
      const Term& rt = std::get<Term>(r);
      if (lt.same_node(t.lhs()) && rt.same_node(t.rhs())) return t;
      return t.op() == Op::Add ? Term::add(lt, rt) : Term::mul(lt, rt);
    }
    default:
      throw Error(Errc::NotInSignature, "zero_elim: constructor '" + std::string(op_name(t.op())) +
                                            "' is not in signature iamdz");
  }
}

}  // namespace meadow
