#pragma once

// Terms over the union of all meadow signatures.
//
// A Term is an immutable handle to a shared tree node. Copying a Term is
// cheap; equality is structural. Terms built from the same subterm share
// that subterm's storage.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace meadow {

enum class Op : std::uint8_t { Zero, One, Var, Add, Mul, Neg, Inv, Div };

std::string_view op_name(Op op) noexcept;

enum class Signature : std::uint8_t { CR, IMD, DMD, IAMDZ, DAMDZ, IAMD, DAMD };

std::string_view signature_name(Signature sig) noexcept;
std::optional<Signature> signature_from_name(std::string_view name) noexcept;

/// True iff `op` is a constructor of `sig`. Variables belong to every signature.
bool signature_allows(Signature sig, Op op) noexcept;

/// Largest numeral or exponent the structural constructors will expand.
/// Numerals are unary chains, so every recursive pass is linear in n.
inline constexpr std::uint64_t kMaxNumeral = 10000;

class Term {
 public:
  static Term zero();
  static Term one();
  static Term var(std::string name);
  static Term add(Term lhs, Term rhs);
  static Term mul(Term lhs, Term rhs);
  static Term neg(Term arg);
  static Term inv(Term arg);
  static Term div(Term lhs, Term rhs);

  Op op() const noexcept;

  /// Variable name; empty for every other constructor.
  const std::string& name() const noexcept;

  /// Left operand of a binary node.
  const Term& lhs() const;
  /// Right operand of a binary node.
  const Term& rhs() const;
  /// Operand of Neg or Inv.
  const Term& arg() const;

  bool is_binary() const noexcept { return op() == Op::Add || op() == Op::Mul || op() == Op::Div; }
  bool is_unary() const noexcept { return op() == Op::Neg || op() == Op::Inv; }
  bool is_leaf() const noexcept { return !is_binary() && !is_unary(); }

  /// Number of nodes in the tree.
  std::size_t size() const noexcept;
  std::size_t depth() const noexcept;
  /// Structural hash; equal terms hash equally.
  std::size_t hash() const noexcept;

  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Op op, std::string name, const Term* lhs, const Term* rhs);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// The numeral for n: 0, 1, 1 + 1, (1 + 1) + 1, ...
/// Throws ZeroNotInSignature for n = 0 when `sig` lacks 0 and
/// NumeralTooLarge above kMaxNumeral.
Term numeral(std::uint64_t n, Signature sig);

/// If `t` is structurally a numeral, its value.
std::optional<std::uint64_t> numeral_value(const Term& t);

/// p^0 = 1, p^(n+1) = p^n * p.
Term power(const Term& base, std::uint64_t n);

/// If `t` has the shape produced by power(b, n) for some n >= 2, returns (b, n).
std::optional<std::pair<Term, std::uint64_t>> power_view(const Term& t);

bool conforms(const Term& t, Signature sig);

/// Throws NotInSignature naming the first offending constructor.
void require_conforms(const Term& t, Signature sig, std::string_view context);

bool contains_op(const Term& t, Op op);

Term substitute(const Term& t, std::string_view var, const Term& replacement);

std::set<std::string> free_vars(const Term& t);

inline bool is_closed(const Term& t) { return free_vars(t).empty(); }

bool is_identifier(std::string_view name) noexcept;

}  // namespace meadow
