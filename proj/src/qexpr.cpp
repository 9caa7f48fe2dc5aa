#include "overcubic/qexpr.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "overcubic/arith.hpp"
#include "overcubic/errors.hpp"
#include "overcubic/qfactory.hpp"
#include "ring.hpp"

namespace overcubic {

// ---------------------------------------------------------------------------
// Affine

std::int64_t Affine::eval(const ParamEnv& env) const {
  std::int64_t acc = constant;
  for (const auto& [name, k] : coeffs) {
    auto it = env.find(name);
    if (it == env.end()) throw EvalError("unbound parameter '" + name + "'");
    std::int64_t term = 0;
    if (__builtin_mul_overflow(k, it->second, &term) || __builtin_add_overflow(acc, term, &acc))
      throw EvalError("integer overflow evaluating exponent");
  }
  return acc;
}

std::string Affine::format() const {
  std::string out;
  for (const auto& [name, k] : coeffs) {
    if (k == 0) continue;
    if (!out.empty()) out += k < 0 ? "-" : "+";
    else if (k < 0) out += "-";
    const std::int64_t mag = k < 0 ? -k : k;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += name;
  }
  if (out.empty()) return std::to_string(constant);
  if (constant > 0) out += "+" + std::to_string(constant);
  if (constant < 0) out += std::to_string(constant);
  return out;
}

bool ExprNode::operator==(const ExprNode& other) const {
  if (kind != other.kind || value != other.value || !(affine == other.affine) || negated != other.negated ||
      signs != other.signs || children.size() != other.children.size())
    return false;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!(*children[i] == *other.children[i])) return false;
  return true;
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Int, Ident, Op, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
  std::int64_t value = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E'))
        throw ParseError("non-integer literal", start);
      std::int64_t v = 0;
      for (std::size_t k = start; k < i; ++k)
        if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s[k] - '0', &v))
          throw ParseError("integer literal too large", start);
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start, v});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Tok::Op, std::string(1, c), start});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is_op(char c, std::size_t ahead = 0) const {
    const auto& t = peek(ahead);
    return t.kind == Tok::Op && t.text[0] == c;
  }
  bool accept(char c) {
    if (!is_op(c)) return false;
    next();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = peek();
    throw ParseError(what + (t.kind == Tok::End ? " but reached end of input" : " near '" + t.text + "'"),
                     t.offset);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_reserved(const std::string& name) {
  if (name == "q" || name == "phi" || name == "psi" || name == "D" || name == "f") return true;
  if (name.size() > 1 && name[0] == 'f' &&
      std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    return true;
  return false;
}

// ---------------------------------------------------------------------------
// Eta expression parser

NodePtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

NodePtr make_int(std::int64_t v) {
  ExprNode n;
  n.kind = NodeKind::IntLiteral;
  n.value = v;
  return make(std::move(n));
}

NodePtr make_binary(NodeKind kind, NodePtr a, NodePtr b) {
  ExprNode n;
  n.kind = kind;
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

NodePtr make_scalar(std::int64_t v, NodePtr x) {
  ExprNode n;
  n.kind = NodeKind::ScalarMul;
  n.value = v;
  n.children = {std::move(x)};
  return make(std::move(n));
}

class EtaParser {
 public:
  explicit EtaParser(std::string_view text) : cur_(text) {}

  NodePtr parse() {
    auto root = expr();
    if (cur_.peek().kind != Tok::End) cur_.fail("unexpected trailing input");
    return root;
  }

 private:
  NodePtr expr() {
    std::vector<NodePtr> items{term()};
    std::vector<int> signs{1};
    while (cur_.is_op('+') || cur_.is_op('-')) {
      signs.push_back(cur_.next().text[0] == '+' ? 1 : -1);
      items.push_back(term());
    }
    if (items.size() == 1) return items.front();
    ExprNode n;
    n.kind = NodeKind::Sum;
    n.children = std::move(items);
    n.signs = std::move(signs);
    return make(std::move(n));
  }

  // A chain opening with an integer literal times something becomes
  // ScalarMul(value, rest-of-chain).
  NodePtr term() {
    NodePtr first = unary();
    if (first->kind == NodeKind::IntLiteral && cur_.is_op('*')) {
      cur_.next();
      return make_scalar(first->value, term());
    }
    return chain(std::move(first));
  }

  NodePtr chain(NodePtr left) {
    while (cur_.is_op('*') || cur_.is_op('/')) {
      const bool mul = cur_.next().text[0] == '*';
      left = make_binary(mul ? NodeKind::Mul : NodeKind::Div, std::move(left), unary());
    }
    return left;
  }

  NodePtr unary() {
    if (cur_.is_op('-')) {
      cur_.next();
      if (cur_.peek().kind == Tok::Int && !cur_.is_op('^', 1)) return make_int(-cur_.next().value);
      return make_scalar(-1, unary());
    }
    return power();
  }

  NodePtr power() {
    const bool grouped = cur_.is_op('(');
    NodePtr base = primary();
    if ((grouped || base->kind != NodeKind::QPower) && cur_.accept('^')) {
      ExprNode n;
      n.kind = NodeKind::Pow;
      n.affine = exponent();
      n.children = {std::move(base)};
      return make(std::move(n));
    }
    return base;
  }

  NodePtr primary() {
    const Token& t = cur_.peek();
    if (t.kind == Tok::Int) return make_int(cur_.next().value);
    if (cur_.accept('(')) {
      auto inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (t.kind != Tok::Ident) cur_.fail("expected a factor");

    const std::string name = cur_.next().text;
    const std::size_t offset = t.offset;
    if (name == "q") {
      ExprNode n;
      n.kind = NodeKind::QPower;
      n.affine = cur_.accept('^') ? exponent() : Affine::of(1);
      return make(std::move(n));
    }
    if (name.size() > 1 && name[0] == 'f' && is_reserved(name)) {
      if (name.size() > 12) throw ParseError("eta scale too large", offset);
      ExprNode n;
      n.kind = NodeKind::Eta;
      n.affine = Affine::of(std::stoll(name.substr(1)));
      if (n.affine.constant < 1) throw ParseError("eta scale must be positive", offset);
      return make(std::move(n));
    }
    if (name == "f") {
      cur_.expect('(');
      ExprNode n;
      n.kind = NodeKind::Eta;
      n.affine = affine();
      cur_.expect(')');
      if (n.affine.is_constant() && n.affine.constant < 1) throw ParseError("eta scale must be positive", offset);
      return make(std::move(n));
    }
    if (name == "phi" || name == "psi" || name == "D") {
      ExprNode n;
      n.kind = name == "phi" ? NodeKind::Phi : name == "psi" ? NodeKind::Psi : NodeKind::Quintic;
      cur_.expect('(');
      if (cur_.is_op('-')) {
        if (n.kind != NodeKind::Phi) cur_.fail("only phi accepts a negated argument");
        cur_.next();
        n.negated = true;
      }
      const Token& qt = cur_.peek();
      if (qt.kind != Tok::Ident || qt.text != "q") cur_.fail("expected 'q' argument");
      cur_.next();
      n.affine = cur_.accept('^') ? exponent() : Affine::of(1);
      cur_.expect(')');
      return make(std::move(n));
    }
    if (cur_.is_op('(')) throw ParseError("unknown function name '" + name + "'", offset);
    throw ParseError("parameter '" + name + "' cannot stand as a factor", offset);
  }

  Affine exponent() {
    if (cur_.accept('(')) {
      Affine a = affine();
      cur_.expect(')');
      return a;
    }
    if (cur_.accept('-')) {
      if (cur_.peek().kind != Tok::Int) cur_.fail("expected integer exponent");
      return Affine::of(-cur_.next().value);
    }
    const Token& t = cur_.peek();
    if (t.kind == Tok::Int) return Affine::of(cur_.next().value);
    if (t.kind == Tok::Ident && !is_reserved(t.text)) {
      Affine a;
      a.coeffs[cur_.next().text] = 1;
      return a;
    }
    cur_.fail("expected exponent");
  }

  Affine affine() {
    Affine out;
    int sign = 1;
    if (cur_.accept('-')) sign = -1;
    for (;;) {
      aterm(out, sign);
      if (cur_.accept('+')) sign = 1;
      else if (cur_.accept('-')) sign = -1;
      else break;
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  void aterm(Affine& out, int sign) {
    const Token& t = cur_.peek();
    if (t.kind == Tok::Int) {
      const std::int64_t v = cur_.next().value * sign;
      if (cur_.accept('*')) {
        const Token& id = cur_.peek();
        if (id.kind != Tok::Ident || is_reserved(id.text)) cur_.fail("expected parameter");
        out.coeffs[cur_.next().text] += v;
      } else {
        out.constant += v;
      }
      return;
    }
    if (t.kind == Tok::Ident && !is_reserved(t.text)) {
      const std::string name = cur_.next().text;
      std::int64_t v = sign;
      if (cur_.accept('*')) {
        if (cur_.peek().kind != Tok::Int) cur_.fail("expected integer coefficient");
        v *= cur_.next().value;
      }
      out.coeffs[name] += v;
      return;
    }
    cur_.fail("expected affine term");
  }

  Cursor cur_;
};

// ---------------------------------------------------------------------------
// Formatter

bool is_atom(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::Eta:
    case NodeKind::Phi:
    case NodeKind::Psi:
    case NodeKind::Quintic:
      return true;
    case NodeKind::IntLiteral:
      return n.value >= 0;
    default:
      return false;
  }
}

std::string format_exponent(const Affine& a) {
  if (a.is_constant()) return std::to_string(a.constant);
  if (a.constant == 0 && a.coeffs.size() == 1 && a.coeffs.begin()->second == 1) return a.coeffs.begin()->first;
  return "(" + a.format() + ")";
}

std::string format_qarg(const Affine& a) {
  if (a.is_constant() && a.constant == 1) return "q";
  return "q^" + format_exponent(a);
}

std::string format_node(const ExprNode& n);

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string format_node(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::IntLiteral:
      return std::to_string(n.value);
    case NodeKind::Eta:
      return n.affine.is_constant() ? "f" + std::to_string(n.affine.constant) : "f(" + n.affine.format() + ")";
    case NodeKind::Phi:
      return std::string("phi(") + (n.negated ? "-" : "") + format_qarg(n.affine) + ")";
    case NodeKind::Psi:
      return "psi(" + format_qarg(n.affine) + ")";
    case NodeKind::Quintic:
      return "D(" + format_qarg(n.affine) + ")";
    case NodeKind::QPower:
      return format_qarg(n.affine);
    case NodeKind::Pow: {
      const ExprNode& base = *n.children[0];
      std::string b = format_node(base);
      return (is_atom(base) ? b : paren(b)) + "^" + format_exponent(n.affine);
    }
    case NodeKind::Mul:
    case NodeKind::Div: {
      const ExprNode& l = *n.children[0];
      const ExprNode& r = *n.children[1];
      std::string ls = format_node(l);
      std::string rs = format_node(r);
      if (l.kind == NodeKind::Sum || l.kind == NodeKind::ScalarMul || l.kind == NodeKind::IntLiteral) ls = paren(ls);
      if (r.kind == NodeKind::Sum || r.kind == NodeKind::ScalarMul || r.kind == NodeKind::Mul ||
          r.kind == NodeKind::Div)
        rs = paren(rs);
      // A bare integer on the left of '/' is unambiguous.
      if (n.kind == NodeKind::Div && l.kind == NodeKind::IntLiteral) ls = format_node(l);
      return ls + (n.kind == NodeKind::Mul ? "*" : "/") + rs;
    }
    case NodeKind::ScalarMul: {
      const ExprNode& x = *n.children[0];
      std::string xs = format_node(x);
      if (x.kind == NodeKind::Sum || (x.kind == NodeKind::IntLiteral)) xs = paren(xs);
      return std::to_string(n.value) + "*" + xs;
    }
    case NodeKind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        std::string s = format_node(*n.children[i]);
        if (n.children[i]->kind == NodeKind::Sum) s = paren(s);
        if (i > 0) out += n.signs[i] > 0 ? "+" : "-";
        out += s;
      }
      return out;
    }
  }
  return {};
}

void collect_params(const ExprNode& n, std::set<std::string>& out) {
  for (const auto& [name, k] : n.affine.coeffs) out.insert(name);
  for (const auto& c : n.children) collect_params(*c, out);
}

// ---------------------------------------------------------------------------
// Evaluation

struct AtomKey {
  NodeKind kind;
  bool negated;
  std::int64_t scale;
  auto operator<=>(const AtomKey&) const = default;
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw EvalError("integer overflow in exponent arithmetic");
  return r;
}

struct Flattened {
  Integer numerator = 1;
  std::vector<Integer> divisors;
  std::int64_t shift = 0;
  std::map<std::int64_t, std::int64_t> eta;
  std::map<AtomKey, std::int64_t> atoms;
  std::vector<std::pair<const ExprNode*, std::int64_t>> opaque;
};

Integer int_power(std::int64_t base, std::int64_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), Integer(static_cast<long>(base)).get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

void add_scalar(Flattened& f, std::int64_t value, std::int64_t mult) {
  if (mult > 0) f.numerator *= int_power(value, mult);
  else if (mult < 0) f.divisors.push_back(int_power(value, -mult));
}

void flatten(const ExprNode& n, std::int64_t mult, const ParamEnv& env, Flattened& f) {
  switch (n.kind) {
    case NodeKind::IntLiteral:
      add_scalar(f, n.value, mult);
      return;
    case NodeKind::Eta: {
      const std::int64_t h = n.affine.eval(env);
      if (h < 1) throw EvalError("eta scale evaluates to " + std::to_string(h));
      f.eta[h] += mult;
      return;
    }
    case NodeKind::Phi:
    case NodeKind::Psi:
    case NodeKind::Quintic: {
      const std::int64_t k = n.affine.eval(env);
      if (k < 1) throw EvalError("theta argument power evaluates to " + std::to_string(k));
      f.atoms[{n.kind, n.negated, k}] += mult;
      return;
    }
    case NodeKind::QPower:
      f.shift += checked_mul(n.affine.eval(env), mult);
      return;
    case NodeKind::Mul:
      flatten(*n.children[0], mult, env, f);
      flatten(*n.children[1], mult, env, f);
      return;
    case NodeKind::Div:
      flatten(*n.children[0], mult, env, f);
      flatten(*n.children[1], -mult, env, f);
      return;
    case NodeKind::Pow:
      flatten(*n.children[0], checked_mul(mult, n.affine.eval(env)), env, f);
      return;
    case NodeKind::ScalarMul:
      add_scalar(f, n.value, mult);
      flatten(*n.children[0], mult, env, f);
      return;
    case NodeKind::Sum:
      f.opaque.emplace_back(&n, mult);
      return;
  }
}

TruncatedSeries apply_factor(TruncatedSeries acc, const TruncatedSeries& factor, std::int64_t e) {
  for (std::int64_t i = 0; i < e; ++i) acc = multiply(acc, factor);
  for (std::int64_t i = 0; i > e; --i) acc = divide(acc, factor);
  return acc;
}

TruncatedSeries eval_node(const ExprNode& n, const ParamEnv& env, std::size_t len, ModulusOpt mod);

TruncatedSeries eval_atom(const AtomKey& key, std::size_t len, ModulusOpt mod) {
  switch (key.kind) {
    case NodeKind::Phi:
      return phi(key.scale, key.negated, len, mod);
    case NodeKind::Psi:
      return psi(key.scale, len, mod);
    default: {
      const auto k = static_cast<std::size_t>(key.scale);
      return stretch(quintic_quotient((len + k - 1) / k, mod), k).truncated(len);
    }
  }
}

TruncatedSeries eval_node(const ExprNode& n, const ParamEnv& env, std::size_t len, ModulusOpt mod) {
  if (n.kind == NodeKind::Sum) {
    TruncatedSeries acc = TruncatedSeries::zero(len, mod);
    for (std::size_t i = 0; i < n.children.size(); ++i)
      acc = combine(acc, eval_node(*n.children[i], env, len, mod), n.signs[i]);
    return acc;
  }

  Flattened f;
  flatten(n, 1, env, f);
  if (f.shift < 0) throw EvalError("negative resulting q-shift q^" + std::to_string(f.shift));

  std::vector<EtaTerm> terms;
  for (const auto& [h, e] : f.eta)
    if (e != 0) terms.push_back({h, e});
  TruncatedSeries acc = terms.empty() ? TruncatedSeries::one(len, mod) : eta_quotient(terms, len, mod);

  for (const auto& [key, e] : f.atoms)
    if (e != 0) acc = apply_factor(std::move(acc), eval_atom(key, len, mod), e);
  for (const auto& [node, e] : f.opaque)
    if (e != 0) acc = apply_factor(std::move(acc), eval_node(*node, env, len, mod), e);

  acc = scale(acc, f.numerator);
  for (const auto& d : f.divisors) {
    if (!mod) {
      if (d != 1 && d != -1) throw EvalError("non-unit divisor " + d.get_str());
      acc = scale(acc, d);
    } else {
      detail::ModRing ring(*mod);
      const auto inv = ring.unit_inverse(ring.from_integer(d));
      if (!inv) throw EvalError("non-unit divisor " + d.get_str() + " mod " + std::to_string(*mod));
      acc = scale(acc, Integer(static_cast<unsigned long>(*inv)));
    }
  }
  return shift(acc, static_cast<std::size_t>(f.shift)).truncated(len);
}

// ---------------------------------------------------------------------------
// Integer expressions

}  // namespace

struct IntExpr::Node {
  enum class Kind { Int, Ident, Add, Sub, Mul, Pow, Neg } kind;
  std::int64_t value = 0;
  std::string name;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using INode = IntExpr::Node;
using INodePtr = std::shared_ptr<const INode>;

class IntParser {
 public:
  explicit IntParser(std::string_view text) : cur_(text) {}

  INodePtr parse() {
    auto root = sum();
    if (cur_.peek().kind != Tok::End) cur_.fail("unexpected trailing input");
    return root;
  }

 private:
  static INodePtr node(INode::Kind k, INodePtr a, INodePtr b = nullptr) {
    return std::make_shared<const INode>(INode{k, 0, {}, std::move(a), std::move(b)});
  }

  INodePtr sum() {
    INodePtr left = product();
    while (cur_.is_op('+') || cur_.is_op('-')) {
      const bool add = cur_.next().text[0] == '+';
      left = node(add ? INode::Kind::Add : INode::Kind::Sub, left, product());
    }
    return left;
  }
  INodePtr product() {
    INodePtr left = unary();
    while (cur_.accept('*')) left = node(INode::Kind::Mul, left, unary());
    if (cur_.is_op('/')) cur_.fail("division is not supported in integer expressions");
    return left;
  }
  INodePtr unary() {
    if (cur_.accept('-')) return node(INode::Kind::Neg, unary());
    return power();
  }
  INodePtr power() {
    INodePtr base = primary();
    if (cur_.accept('^')) return node(INode::Kind::Pow, base, unary());
    return base;
  }
  INodePtr primary() {
    const Token& t = cur_.peek();
    if (t.kind == Tok::Int) {
      const auto v = cur_.next().value;
      return std::make_shared<const INode>(INode{INode::Kind::Int, v, {}, nullptr, nullptr});
    }
    if (t.kind == Tok::Ident) {
      auto name = cur_.next().text;
      return std::make_shared<const INode>(INode{INode::Kind::Ident, 0, std::move(name), nullptr, nullptr});
    }
    if (cur_.accept('(')) {
      auto inner = sum();
      cur_.expect(')');
      return inner;
    }
    cur_.fail("expected integer, parameter or '('");
  }

  Cursor cur_;
};

std::int64_t eval_int(const INode& n, const ParamEnv& env) {
  std::int64_t a = 0, b = 0, r = 0;
  switch (n.kind) {
    case INode::Kind::Int:
      return n.value;
    case INode::Kind::Ident: {
      auto it = env.find(n.name);
      if (it == env.end()) throw EvalError("unbound parameter '" + n.name + "'");
      return it->second;
    }
    case INode::Kind::Neg:
      return -eval_int(*n.lhs, env);
    case INode::Kind::Pow: {
      a = eval_int(*n.lhs, env);
      b = eval_int(*n.rhs, env);
      auto p = checked_pow(a, b);
      if (!p) throw EvalError("integer power " + std::to_string(a) + "^" + std::to_string(b) + " undefined or too large");
      return *p;
    }
    default:
      break;
  }
  a = eval_int(*n.lhs, env);
  b = eval_int(*n.rhs, env);
  bool overflow = false;
  if (n.kind == INode::Kind::Add) overflow = __builtin_add_overflow(a, b, &r);
  if (n.kind == INode::Kind::Sub) overflow = __builtin_sub_overflow(a, b, &r);
  if (n.kind == INode::Kind::Mul) overflow = __builtin_mul_overflow(a, b, &r);
  if (overflow) throw EvalError("integer overflow");
  return r;
}

void collect_int_params(const INode& n, std::set<std::string>& out) {
  if (n.kind == INode::Kind::Ident) out.insert(n.name);
  if (n.lhs) collect_int_params(*n.lhs, out);
  if (n.rhs) collect_int_params(*n.rhs, out);
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::string> EtaExpr::parameters() const {
  std::set<std::string> names;
  collect_params(*root_, names);
  return {names.begin(), names.end()};
}

EtaExpr parse_expr(std::string_view text) { return EtaExpr(EtaParser(text).parse()); }

std::string format_expr(const EtaExpr& expr) { return format_node(expr.root()); }

TruncatedSeries eval_expr(const EtaExpr& expr, const ParamEnv& env, std::size_t n,
                          std::optional<std::uint64_t> modulus) {
  if (n == 0) throw DomainError("precision must be at least 1");
  return eval_node(expr.root(), env, n, modulus);
}

IntExpr IntExpr::parse(std::string_view text) {
  IntExpr e;
  e.text_ = std::string(text);
  e.root_ = IntParser(text).parse();
  return e;
}

std::int64_t IntExpr::eval(const ParamEnv& env) const { return eval_int(*root_, env); }

std::vector<std::string> IntExpr::parameters() const {
  std::set<std::string> names;
  collect_int_params(*root_, names);
  return {names.begin(), names.end()};
}

}  // namespace overcubic
