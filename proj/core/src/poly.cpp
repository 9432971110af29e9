#include "meadow/poly.hpp"

#include "meadow/error.hpp"

namespace meadow {

std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (const auto& [name, exp] : m) d += exp;
  return d;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  auto da = total_degree(a);
  auto db = total_degree(b);
  if (da != db) return da > db;
  auto i = a.begin();
  auto j = b.begin();
  for (; i != a.end() && j != b.end(); ++i, ++j) {
    // A variable present in one monomial but absent at the same position of
    // the other means the other has exponent 0 there.
    if (i->first != j->first) return i->first < j->first;
    if (i->second != j->second) return i->second > j->second;
  }
  return i != a.end() && j == b.end();
}

PosPoly::PosPoly() { terms_.emplace(Monomial{}, mpz_class(1)); }

PosPoly PosPoly::constant(const mpz_class& k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "PosPoly coefficients must be >= 1");
  TermMap t;
  t.emplace(Monomial{}, k);
  return PosPoly(std::move(t));
}

PosPoly PosPoly::variable(const std::string& name) {
  TermMap t;
  t.emplace(Monomial{{name, 1}}, mpz_class(1));
  return PosPoly(std::move(t));
}

PosPoly PosPoly::from_terms(TermMap terms) {
  if (terms.empty()) throw Error(Errc::InvalidArgument, "PosPoly must have at least one monomial");
  for (const auto& [mono, coeff] : terms) {
    if (coeff < 1) throw Error(Errc::InvalidArgument, "PosPoly coefficients must be >= 1");
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k].second == 0 || (k > 0 && !(mono[k - 1].first < mono[k].first))) {
        throw Error(Errc::InvalidArgument, "malformed monomial");
      }
    }
  }
  return PosPoly(std::move(terms));
}

bool PosPoly::is_constant() const { return terms_.size() == 1 && terms_.begin()->first.empty(); }

const mpz_class& PosPoly::constant_value() const {
  if (!is_constant()) throw Error(Errc::InvalidArgument, "polynomial is not constant");
  return terms_.begin()->second;
}

namespace {

void check_limit(std::size_t count, std::size_t max_monomials) {
  if (count > max_monomials) {
    throw Error(Errc::SizeLimit, "polynomial exceeds " + std::to_string(max_monomials) + " monomials");
  }
}

}  // namespace

PosPoly PosPoly::plus(const PosPoly& other, std::size_t max_monomials) const {
  TermMap out = terms_;
  for (const auto& [mono, coeff] : other.terms_) {
    auto [it, inserted] = out.try_emplace(mono, coeff);
    if (!inserted) it->second += coeff;
  }
  check_limit(out.size(), max_monomials);
  return PosPoly(std::move(out));
}

PosPoly PosPoly::times(const PosPoly& other, std::size_t max_monomials) const {
  TermMap out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      mpz_class c = ca * cb;
      auto [it, inserted] = out.try_emplace(monomial_product(ma, mb), c);
      if (!inserted) it->second += c;
    }
    check_limit(out.size(), max_monomials);
  }
  return PosPoly(std::move(out));
}

Rational PosPoly::evaluate(const Assignment& env) const {
  mpq_class sum = 0;
  for (const auto& [mono, coeff] : terms_) {
    mpq_class prod = coeff;
    for (const auto& [name, exp] : mono) {
      auto it = env.find(name);
      if (it == env.end()) throw Error(Errc::UnboundVariable, "no value for '" + name + "'");
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), it->second.value().get_num_mpz_t(), exp);
      mpz_pow_ui(den.get_mpz_t(), it->second.value().get_den_mpz_t(), exp);
      prod *= mpq_class(num, den);
      prod.canonicalize();
    }
    sum += prod;
  }
  return Rational(sum);
}

std::string PosPoly::to_string() const {
  std::string out;
  for (const auto& [mono, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    std::string piece;
    if (mono.empty() || coeff != 1) piece = coeff.get_str();
    for (const auto& [name, exp] : mono) {
      if (!piece.empty()) piece += "*";
      piece += name;
      if (exp != 1) piece += "^" + std::to_string(exp);
    }
    out += piece;
  }
  return out;
}

Rational PolyFraction::evaluate(const Assignment& env) const {
  return numerator.evaluate(env) * denominator.evaluate(env).inverse();
}

std::string PolyFraction::to_string() const {
  std::string num = numerator.to_string();
  if (denominator.is_constant() && denominator.constant_value() == 1) return num;
  std::string den = denominator.to_string();
  if (numerator.monomial_count() > 1) num = "(" + num + ")";
  if (den.find_first_of(" *") != std::string::npos) den = "(" + den + ")";
  return num + " / " + den;
}

}  // namespace meadow
