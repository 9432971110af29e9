#include "meadow/term.hpp"

#include <functional>

#include "meadow/error.hpp"

namespace meadow {

struct Term::Node {
  Op op;
  std::string name;
  std::optional<Term> lhs;
  std::optional<Term> rhs;
  std::size_t size;
  std::size_t depth;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string_view op_name(Op op) noexcept {
  switch (op) {
    case Op::Zero: return "zero";
    case Op::One: return "one";
    case Op::Var: return "var";
    case Op::Add: return "add";
    case Op::Mul: return "mul";
    case Op::Neg: return "neg";
    case Op::Inv: return "inv";
    case Op::Div: return "div";
  }
  return "?";
}

std::string_view signature_name(Signature sig) noexcept {
  switch (sig) {
    case Signature::CR: return "cr";
    case Signature::IMD: return "imd";
    case Signature::DMD: return "dmd";
    case Signature::IAMDZ: return "iamdz";
    case Signature::DAMDZ: return "damdz";
    case Signature::IAMD: return "iamd";
    case Signature::DAMD: return "damd";
  }
  return "?";
}

std::optional<Signature> signature_from_name(std::string_view name) noexcept {
  for (auto sig : {Signature::CR, Signature::IMD, Signature::DMD, Signature::IAMDZ,
                   Signature::DAMDZ, Signature::IAMD, Signature::DAMD}) {
    if (signature_name(sig) == name) return sig;
  }
  return std::nullopt;
}

bool signature_allows(Signature sig, Op op) noexcept {
  switch (op) {
    case Op::One:
    case Op::Var:
    case Op::Add:
    case Op::Mul:
      return true;
    case Op::Zero:
      return sig != Signature::IAMD && sig != Signature::DAMD;
    case Op::Neg:
      return sig == Signature::CR || sig == Signature::IMD || sig == Signature::DMD;
    case Op::Inv:
      return sig == Signature::IMD || sig == Signature::IAMDZ || sig == Signature::IAMD;
    case Op::Div:
      return sig == Signature::DMD || sig == Signature::DAMDZ || sig == Signature::DAMD;
  }
  return false;
}

Term Term::make(Op op, std::string name, const Term* lhs, const Term* rhs) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->size = 1;
  node->depth = 1;
  node->hash = mix(0, static_cast<std::size_t>(op));
  if (op == Op::Var) node->hash = mix(node->hash, std::hash<std::string>{}(name));
  node->name = std::move(name);
  if (lhs) {
    node->size += lhs->size();
    node->depth = lhs->depth() + 1;
    node->hash = mix(node->hash, lhs->hash());
    node->lhs = *lhs;
  }
  if (rhs) {
    node->size += rhs->size();
    node->depth = std::max(node->depth, rhs->depth() + 1);
    node->hash = mix(node->hash, rhs->hash());
    node->rhs = *rhs;
  }
  return Term(std::move(node));
}

Term Term::zero() {
  static const Term z = make(Op::Zero, {}, nullptr, nullptr);
  return z;
}

Term Term::one() {
  static const Term o = make(Op::One, {}, nullptr, nullptr);
  return o;
}

Term Term::var(std::string name) {
  if (!is_identifier(name)) {
    throw Error(Errc::InvalidArgument, "invalid variable name '" + name + "'");
  }
  return make(Op::Var, std::move(name), nullptr, nullptr);
}

Term Term::add(Term lhs, Term rhs) { return make(Op::Add, {}, &lhs, &rhs); }
Term Term::mul(Term lhs, Term rhs) { return make(Op::Mul, {}, &lhs, &rhs); }
Term Term::div(Term lhs, Term rhs) { return make(Op::Div, {}, &lhs, &rhs); }
Term Term::neg(Term arg) { return make(Op::Neg, {}, &arg, nullptr); }
Term Term::inv(Term arg) { return make(Op::Inv, {}, &arg, nullptr); }

Op Term::op() const noexcept { return node_->op; }
const std::string& Term::name() const noexcept { return node_->name; }

const Term& Term::lhs() const {
  if (!is_binary()) throw Error(Errc::InvalidArgument, "lhs() on non-binary term");
  return *node_->lhs;
}

const Term& Term::rhs() const {
  if (!is_binary()) throw Error(Errc::InvalidArgument, "rhs() on non-binary term");
  return *node_->rhs;
}

const Term& Term::arg() const {
  if (!is_unary()) throw Error(Errc::InvalidArgument, "arg() on non-unary term");
  return *node_->lhs;
}

std::size_t Term::size() const noexcept { return node_->size; }
std::size_t Term::depth() const noexcept { return node_->depth; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.hash != y.hash || x.size != y.size) return false;
  switch (x.op) {
    case Op::Zero:
    case Op::One:
      return true;
    case Op::Var:
      return x.name == y.name;
    case Op::Neg:
    case Op::Inv:
      return *x.lhs == *y.lhs;
    case Op::Add:
    case Op::Mul:
    case Op::Div:
      return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
  }
  return false;
}

Term numeral(std::uint64_t n, Signature sig) {
  if (n == 0) {
    if (!signature_allows(sig, Op::Zero)) {
      throw Error(Errc::ZeroNotInSignature,
                  "numeral 0 requested in signature " + std::string(signature_name(sig)));
    }
    return Term::zero();
  }
  if (n > kMaxNumeral) {
    throw Error(Errc::NumeralTooLarge,
                std::to_string(n) + " exceeds " + std::to_string(kMaxNumeral));
  }
  Term result = Term::one();
  for (std::uint64_t k = 2; k <= n; ++k) result = Term::add(result, Term::one());
  return result;
}

std::optional<std::uint64_t> numeral_value(const Term& t) {
  if (t.op() == Op::Zero) return 0;
  std::uint64_t ones = 0;
  const Term* cur = &t;
  while (cur->op() == Op::Add && cur->rhs().op() == Op::One) {
    ++ones;
    cur = &cur->lhs();
  }
  if (cur->op() != Op::One) return std::nullopt;
  return ones + 1;
}

Term power(const Term& base, std::uint64_t n) {
  if (n > kMaxNumeral) {
    throw Error(Errc::NumeralTooLarge,
                "exponent " + std::to_string(n) + " exceeds " + std::to_string(kMaxNumeral));
  }
  Term result = Term::one();
  for (std::uint64_t k = 0; k < n; ++k) result = Term::mul(result, base);
  return result;
}

std::optional<std::pair<Term, std::uint64_t>> power_view(const Term& t) {
  if (t.op() != Op::Mul) return std::nullopt;
  const Term& base = t.rhs();
  std::uint64_t count = 0;
  const Term* cur = &t;
  while (cur->op() == Op::Mul && cur->rhs() == base) {
    ++count;
    cur = &cur->lhs();
  }
  if (cur->op() != Op::One || count < 2) return std::nullopt;
  return std::make_pair(base, count);
}

namespace {

const Term* first_disallowed(const Term& t, Signature sig) {
  if (!signature_allows(sig, t.op())) return &t;
  if (t.is_unary()) return first_disallowed(t.arg(), sig);
  if (t.is_binary()) {
    if (auto* bad = first_disallowed(t.lhs(), sig)) return bad;
    return first_disallowed(t.rhs(), sig);
  }
  return nullptr;
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.op()) {
    case Op::Var:
      out.insert(t.name());
      return;
    case Op::Neg:
    case Op::Inv:
      collect_vars(t.arg(), out);
      return;
    case Op::Add:
    case Op::Mul:
    case Op::Div:
      collect_vars(t.lhs(), out);
      collect_vars(t.rhs(), out);
      return;
    default:
      return;
  }
}

}  // namespace

bool conforms(const Term& t, Signature sig) { return first_disallowed(t, sig) == nullptr; }

void require_conforms(const Term& t, Signature sig, std::string_view context) {
  if (const Term* bad = first_disallowed(t, sig)) {
    throw Error(Errc::NotInSignature, std::string(context) + ": constructor '" +
                                          std::string(op_name(bad->op())) +
                                          "' is not in signature " +
                                          std::string(signature_name(sig)));
  }
}

bool contains_op(const Term& t, Op op) {
  if (t.op() == op) return true;
  if (t.is_unary()) return contains_op(t.arg(), op);
  if (t.is_binary()) return contains_op(t.lhs(), op) || contains_op(t.rhs(), op);
  return false;
}

Term substitute(const Term& t, std::string_view var, const Term& replacement) {
  switch (t.op()) {
    case Op::Var:
      return t.name() == var ? replacement : t;
    case Op::Zero:
    case Op::One:
      return t;
    case Op::Neg:
    case Op::Inv: {
      Term a = substitute(t.arg(), var, replacement);
      if (a.same_node(t.arg())) return t;
      return t.op() == Op::Neg ? Term::neg(a) : Term::inv(a);
    }
    case Op::Add:
    case Op::Mul:
    case Op::Div: {
      Term l = substitute(t.lhs(), var, replacement);
      Term r = substitute(t.rhs(), var, replacement);
      if (l.same_node(t.lhs()) && r.same_node(t.rhs())) return t;
      if (t.op() == Op::Add) return Term::add(l, r);
      if (t.op() == Op::Mul) return Term::mul(l, r);
      return Term::div(l, r);
    }
  }
  return t;
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

bool is_identifier(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace meadow
