#include "gradid/parser.hpp"

#include <cctype>
#include <optional>

#include "gradid/errors.hpp"

namespace gradid {

namespace {

// A parsed value: either a pure scalar (no unit exists in the algebra, so
// scalars only survive as multipliers) or a polynomial.
struct Value {
  std::optional<FieldElement> scalar;
  std::optional<Polynomial> poly;
};

class Parser {
 public:
  Parser(std::string_view text, const FieldPtr& field) : text_(text), field_(field) {}

  Polynomial parse_all() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Value v = parse_expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return to_poly(v, 0);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  unsigned parse_uint() {
    skip_ws();
    const std::size_t start = pos_;
    unsigned long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + unsigned(text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", start);
    return unsigned(v);
  }

  Polynomial to_poly(const Value& v, std::size_t where) const {
    if (v.poly) return *v.poly;
    if (v.scalar->is_zero()) return Polynomial(field_);
    throw ParseError("nonzero constant term (the algebra has no unit)", where);
  }

  Value add(Value a, const Value& b, bool subtract, std::size_t where) const {
    const Field& F = *field_;
    if (a.scalar && b.scalar) {
      return Value{subtract ? F.sub(*a.scalar, *b.scalar) : F.add(*a.scalar, *b.scalar), std::nullopt};
    }
    Polynomial pa = to_poly(a, where);
    Polynomial pb = to_poly(b, where);
    return Value{std::nullopt, subtract ? pa - pb : pa + pb};
  }

  Value mul(const Value& a, const Value& b) const {
    const Field& F = *field_;
    if (a.scalar && b.scalar) return Value{F.mul(*a.scalar, *b.scalar), std::nullopt};
    if (a.scalar) return Value{std::nullopt, b.poly->scaled(*a.scalar)};
    if (b.scalar) return Value{std::nullopt, a.poly->scaled(*b.scalar)};
    return Value{std::nullopt, *a.poly * *b.poly};
  }

  Value parse_expr() {
    bool negate = false;
    const char c0 = peek();
    if (c0 == '+' || c0 == '-') {
      negate = c0 == '-';
      ++pos_;
    }
    Value acc = parse_term();
    if (negate) {
      acc = acc.scalar ? Value{field_->neg(*acc.scalar), std::nullopt} : Value{std::nullopt, -*acc.poly};
    }
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      const std::size_t where = pos_;
      ++pos_;
      Value rhs = parse_term();
      acc = add(std::move(acc), rhs, c == '-', where);
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return c == '(' || c == '[' || c == '{' || c == 'y' || c == 'z' || std::isdigit(static_cast<unsigned char>(c));
  }

  Value parse_term() {
    Value acc = parse_factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = mul(acc, parse_factor());
      } else if (starts_factor(c)) {
        acc = mul(acc, parse_factor());
      } else {
        break;
      }
    }
    return acc;
  }

  Value parse_factor() {
    const std::size_t where = pos_;
    Value base = parse_atom();
    if (peek() != '^') return base;
    ++pos_;
    unsigned e;
    if (peek() == '(') {
      ++pos_;
      e = parse_uint();
      expect(')');
    } else {
      e = parse_uint();
    }
    if (base.scalar) return Value{field_->pow(*base.scalar, e), std::nullopt};
    if (e == 0) throw ParseError("zeroth power of a polynomial (the algebra has no unit)", where);
    return Value{std::nullopt, base.poly->pow(e)};
  }

  Value parse_atom() {
    const char c = peek();
    const std::size_t where = pos_;
    if (c == '(') {
      ++pos_;
      Value v = parse_expr();
      expect(')');
      return v;
    }
    if (c == '[') return parse_commutator();
    if (c == '{') {
      const auto close = text_.find('}', pos_);
      if (close == std::string_view::npos) throw ParseError("unterminated field literal", where);
      try {
        FieldElement e = field_->parse(text_.substr(pos_, close - pos_ + 1));
        pos_ = close + 1;
        return Value{e, std::nullopt};
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what(), where);
      }
    }
    if (c == 'y' || c == 'z') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("variable needs a positive index", where);
      }
      const unsigned idx = parse_uint();
      if (idx < 1 || idx > 60000) throw ParseError("variable index out of range", where);
      const Variable v = c == 'y' ? Variable::y(idx) : Variable::z(idx);
      return Value{std::nullopt, Polynomial::var(field_, v)};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Value{field_->from_int(parse_uint()), std::nullopt};
    }
    if (at_end()) throw ParseError("unexpected end of input", where);
    throw ParseError(std::string("unexpected '") + c + "'", where);
  }

  // An argument of the form `atom^(r)` followed by ',' or ']' is a powered step.
  CommutatorStep parse_commutator_arg() {
    const std::size_t start = pos_;
    try {
      const std::size_t where = pos_;
      Value base = parse_atom();
      if (peek() == '^') {
        ++pos_;
        if (peek() == '(') {
          ++pos_;
          const unsigned r = parse_uint();
          expect(')');
          const char next = peek();
          if (next == ',' || next == ']') return CommutatorStep{to_poly(base, where), r};
        }
      }
    } catch (const ParseError&) {
      // Fall through and reparse as a general expression.
    }
    pos_ = start;
    const std::size_t where = pos_;
    Value v = parse_expr();
    return CommutatorStep{to_poly(v, where), 1};
  }

  Value parse_commutator() {
    const std::size_t where = pos_;
    expect('[');
    std::vector<CommutatorStep> args;
    {
      const std::size_t head_pos = pos_;
      Value head = parse_expr();
      args.push_back(CommutatorStep{to_poly(head, head_pos), 1});
    }
    while (peek() == ',') {
      ++pos_;
      args.push_back(parse_commutator_arg());
    }
    expect(']');
    if (args.size() < 2) throw ParseError("commutator needs at least two arguments", where);
    Polynomial head = args.front().v;
    std::span<const CommutatorStep> rest(args.data() + 1, args.size() - 1);
    return Value{std::nullopt, powered_commutator(head, rest)};
  }

  std::string_view text_;
  const FieldPtr& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const FieldPtr& field) {
  return Parser(text, field).parse_all();
}

}  // namespace gradid
