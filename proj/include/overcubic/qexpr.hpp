#pragma once

// Text form of eta-quotient / theta expressions.
//
// Grammar (whitespace-insensitive; `*` is required between factors):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   primary := INT | fH | 'f' '(' affine ')' | 'q' ('^' exponent)?
//            | 'phi' '(' ['-'] qarg ')' | 'psi' '(' qarg ')' | 'D' '(' qarg ')'
//            | '(' expr ')'
//   qarg    := 'q' ('^' exponent)?
//   exponent:= ['-'] INT | IDENT | '(' affine ')'
//   affine  := ['-'] aterm (('+' | '-') aterm)*
//   aterm   := INT ['*' IDENT] | IDENT ['*' INT]
//
// `fH` is the letter f immediately followed by a decimal scale (f1, f16).
// Parameters are identifiers other than the reserved words f, q, phi, psi, D.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "overcubic/series.hpp"

namespace overcubic {

using ParamEnv = std::map<std::string, std::int64_t>;

/// sum_i coeff_i * param_i + constant.
struct Affine {
  std::map<std::string, std::int64_t> coeffs;
  std::int64_t constant = 0;

  static Affine of(std::int64_t c) { return Affine{{}, c}; }
  bool is_constant() const { return coeffs.empty(); }
  std::int64_t eval(const ParamEnv& env) const;
  std::string format() const;

  bool operator==(const Affine&) const = default;
};

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

enum class NodeKind {
  IntLiteral,  // value
  Eta,         // f_h, h = affine
  Phi,         // phi(+-q^k), negated, k = affine
  Psi,         // psi(q^k)
  Quintic,     // D(q^k)
  QPower,      // q^k
  Mul,         // children[0] * children[1]
  Div,         // children[0] / children[1]
  Pow,         // children[0] ^ affine
  Sum,         // sum of children with signs
  ScalarMul,   // value * children[0]; unary minus is ScalarMul(-1, x)
};

struct ExprNode {
  NodeKind kind = NodeKind::IntLiteral;
  std::int64_t value = 0;
  Affine affine;
  bool negated = false;
  std::vector<NodePtr> children;
  std::vector<int> signs;  // Sum only: +1 / -1 per child

  bool operator==(const ExprNode& other) const;
};

/// Immutable parsed expression.
class EtaExpr {
 public:
  explicit EtaExpr(NodePtr root) : root_(std::move(root)) {}

  const ExprNode& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }

  /// Names of all parameters referenced anywhere in the expression.
  std::vector<std::string> parameters() const;

  bool operator==(const EtaExpr& other) const { return *root_ == *other.root_; }

 private:
  NodePtr root_;
};

EtaExpr parse_expr(std::string_view text);

/// Canonical text; parse_expr(format_expr(e)) == e.
std::string format_expr(const EtaExpr& expr);

/// Evaluates to precision n. Products of eta and theta atoms are applied
/// factor by factor so that large precisions stay cheap.
TruncatedSeries eval_expr(const EtaExpr& expr, const ParamEnv& env, std::size_t n,
                          std::optional<std::uint64_t> modulus = {});

/// Plain integer arithmetic over parameters: INT, IDENT, + - * ^ and
/// parentheses. Used for claim fields such as "8*p^(2*alpha+1)".
class IntExpr {
 public:
  static IntExpr parse(std::string_view text);

  /// Throws EvalError on unbound parameters, overflow or negative powers.
  std::int64_t eval(const ParamEnv& env) const;

  const std::string& text() const { return text_; }
  std::vector<std::string> parameters() const;

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace overcubic
