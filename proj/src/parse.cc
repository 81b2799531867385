#include "invop/parse.hh"

#include <cctype>
#include <functional>
#include <optional>

namespace invop {

namespace {

struct Token {
  enum Kind { ident, number, plus, minus, star, caret, lparen, rparen, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      // A '/' directly followed by digits extends the literal to p/q.
      if (i < text.size() && text[i] == '/' && i + 1 < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      }
      out.push_back({Token::number, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({Token::ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::plus; break;
      case '-': kind = Token::minus; break;
      case '*': kind = Token::star; break;
      case '^': kind = Token::caret; break;
      case '(': kind = Token::lparen; break;
      case ')': kind = Token::rparen; break;
      default:
        throw usage_error("syntax error at offset " + std::to_string(i) +
                          ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::end, "", text.size()});
  return out;
}

// Recursive-descent parser over an abstract value type V supplied by the
// four concrete grammars below.
template <class V>
class ExprParser {
 public:
  struct Ops {
    std::function<V(const Token&)> atom_ident;   // identifier atom
    std::function<V(const Rational&)> atom_const;
    std::function<V(V, const V&)> add;
    std::function<V(V, const V&)> sub;
    std::function<V(V, const V&)> mul;
    std::function<V(const V&, long, std::size_t)> pow;  // pos for errors
  };

  ExprParser(std::vector<Token> tokens, Ops ops)
      : toks_(std::move(tokens)), ops_(std::move(ops)) {}

  V parse() {
    V v = expr();
    expect(Token::end, "end of input");
    return v;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& what) {
    throw usage_error("syntax error at offset " + std::to_string(t.pos) + ": expected " +
                      what);
  }
  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) fail(peek(), what);
    ++i_;
  }

  V expr() {
    bool negate = false;
    if (peek().kind == Token::minus) {
      ++i_;
      negate = true;
    } else if (peek().kind == Token::plus) {
      ++i_;
    }
    V v = term();
    if (negate) v = ops_.sub(ops_.atom_const(Rational(0)), v);
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      bool minus = next().kind == Token::minus;
      V rhs = term();
      v = minus ? ops_.sub(std::move(v), rhs) : ops_.add(std::move(v), rhs);
    }
    return v;
  }

  V term() {
    V v = factor();
    while (peek().kind == Token::star) {
      ++i_;
      v = ops_.mul(std::move(v), factor());
    }
    return v;
  }

  V factor() {
    V v = atom();
    if (peek().kind == Token::caret) {
      std::size_t caret_pos = next().pos;
      long sign = 1;
      if (peek().kind == Token::minus) {
        ++i_;
        sign = -1;
      }
      if (peek().kind != Token::number || peek().text.find('/') != std::string::npos)
        fail(peek(), "integer exponent");
      long k = std::stol(next().text);
      v = ops_.pow(v, sign * k, caret_pos);
    }
    return v;
  }

  V atom() {
    const Token& t = peek();
    if (t.kind == Token::ident) {
      ++i_;
      return ops_.atom_ident(t);
    }
    if (t.kind == Token::number) {
      ++i_;
      return ops_.atom_const(Rational::parse(t.text));
    }
    if (t.kind == Token::lparen) {
      ++i_;
      V v = expr();
      expect(Token::rparen, "')'");
      return v;
    }
    fail(t, "value");
  }

  std::vector<Token> toks_;
  Ops ops_;
  std::size_t i_ = 0;
};

std::size_t var_index(const Token& t, const std::vector<std::string>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == t.text) return i;
  throw usage_error("unknown variable '" + t.text + "' at offset " + std::to_string(t.pos));
}

}  // namespace

SparsePoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  const std::size_t n = vars.size();
  typename ExprParser<SparsePoly>::Ops ops;
  ops.atom_ident = [&](const Token& t) { return SparsePoly::variable(n, var_index(t, vars)); };
  ops.atom_const = [&](const Rational& q) { return SparsePoly::constant(n, q); };
  ops.add = [](SparsePoly a, const SparsePoly& b) { return a += b; };
  ops.sub = [](SparsePoly a, const SparsePoly& b) { return a -= b; };
  ops.mul = [](SparsePoly a, const SparsePoly& b) { return a * b; };
  ops.pow = [](const SparsePoly& a, long k, std::size_t pos) {
    if (k < 0)
      throw usage_error("syntax error at offset " + std::to_string(pos) +
                        ": negative exponent on a polynomial");
    return a.pow(static_cast<unsigned long>(k));
  };
  return ExprParser<SparsePoly>(lex(text), std::move(ops)).parse();
}

UniPolyQ parse_unipoly(std::string_view text, const std::string& var) {
  SparsePoly p = parse_polynomial(text, {var});
  std::vector<Rational> coeffs(p.degree() ? *p.degree() + 1 : 1, Rational(0));
  if (p.is_zero()) return UniPolyQ::zero(Rational(0));
  for (const auto& [m, c] : p.terms()) coeffs[m[0]] = c;
  return UniPolyQ::from_coeffs(std::move(coeffs));
}

WordSum parse_word_sum(std::string_view text, const std::vector<std::string>& letter_names,
                       bool allow_x_inverse) {
  if (letter_names.size() != 3) throw usage_error("alphabet must name x, y, e");
  typename ExprParser<WordSum>::Ops ops;
  ops.atom_ident = [&](const Token& t) {
    for (std::uint8_t l = 0; l < 3; ++l)
      if (letter_names[l] == t.text) return WordSum::single({l}, Rational(1));
    throw usage_error("unknown generator '" + t.text + "' at offset " +
                      std::to_string(t.pos));
  };
  ops.atom_const = [](const Rational& q) { return WordSum::scalar(q); };
  ops.add = [](WordSum a, const WordSum& b) { return a += b; };
  ops.sub = [](WordSum a, const WordSum& b) { return a -= b; };
  ops.mul = [](WordSum a, const WordSum& b) { return a * b; };
  ops.pow = [&](const WordSum& a, long k, std::size_t pos) {
    if (k < 0) {
      bool is_bare_x = a.terms().size() == 1 && a.terms().begin()->first == Word{letter::x} &&
                       a.terms().begin()->second.is_one();
      if (!allow_x_inverse || !is_bare_x)
        throw usage_error("syntax error at offset " + std::to_string(pos) +
                          ": negative powers are only defined for x in the localized model");
      return WordSum::single(Word(static_cast<std::size_t>(-k), letter::x_inv), Rational(1));
    }
    WordSum r = WordSum::scalar(Rational(1));
    for (long i = 0; i < k; ++i) r *= a;
    return r;
  };
  return ExprParser<WordSum>(lex(text), std::move(ops)).parse();
}

WeylOp parse_weyl_op(std::string_view text, const std::vector<std::string>& vars) {
  const std::size_t n = vars.size();
  typename ExprParser<WeylOp>::Ops ops;
  ops.atom_ident = [&](const Token& t) {
    if (t.text.rfind("dx_", 0) == 0) {
      std::string suffix = t.text.substr(3);
      bool numeric = !suffix.empty();
      for (char c : suffix)
        if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
      if (numeric) {
        std::size_t i = std::stoul(suffix);
        if (i < 1 || i > n)
          throw usage_error("derivative index out of range at offset " +
                            std::to_string(t.pos));
        return WeylOp::partial(n, i - 1);
      }
      for (std::size_t i = 0; i < n; ++i)
        if (vars[i] == suffix) return WeylOp::partial(n, i);
      throw usage_error("unknown derivative '" + t.text + "' at offset " +
                        std::to_string(t.pos));
    }
    return WeylOp::coordinate(n, var_index(t, vars));
  };
  ops.atom_const = [&](const Rational& q) { return WeylOp::constant(n, q); };
  ops.add = [](WeylOp a, const WeylOp& b) { return a += b; };
  ops.sub = [](WeylOp a, const WeylOp& b) { return a -= b; };
  ops.mul = [](WeylOp a, const WeylOp& b) { return a * b; };
  ops.pow = [&](const WeylOp& a, long k, std::size_t pos) {
    if (k < 0)
      throw usage_error("syntax error at offset " + std::to_string(pos) +
                        ": negative exponent on an operator");
    WeylOp r = WeylOp::constant(n, Rational(1));
    for (long i = 0; i < k; ++i) r = r * a;
    return r;
  };
  return ExprParser<WeylOp>(lex(text), std::move(ops)).parse();
}

}  // namespace invop
