#pragma once

// The free non-unitary associative superalgebra F<Y ∪ Z> over a finite field.
//
// Y-variables are even, Z-variables are odd. Monomials are nonempty words stored
// letter by letter (y1^2 is the two-letter word y1 y1). Terms are kept in
// graded-lexicographic order: shorter words first, then letter by letter with
// y1 < y2 < ... < z1 < z2 < ...

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gradid/field.hpp"

namespace gradid {

enum class VarKind : std::uint8_t { Y = 0, Z = 1 };

struct Variable {
  VarKind kind = VarKind::Y;
  std::uint16_t index = 1;

  static constexpr Variable y(unsigned i) { return Variable{VarKind::Y, std::uint16_t(i)}; }
  static constexpr Variable z(unsigned i) { return Variable{VarKind::Z, std::uint16_t(i)}; }

  constexpr bool odd() const { return kind == VarKind::Z; }
  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;
};

std::string to_string(Variable v);

using Word = std::vector<Variable>;

/// Number of Z-letters modulo 2.
int parity(const Word& w);

struct GradedLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class Polynomial {
 public:
  using Terms = std::map<Word, FieldElement, GradedLex>;

  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}

  static Polynomial var(FieldPtr field, Variable v);
  static Polynomial term(FieldPtr field, Word w, FieldElement c);
  static Polynomial constant_word(FieldPtr field, Word w) { return term(field, std::move(w), FieldElement{1}); }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Length of the longest word; 0 for the zero polynomial.
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
  std::size_t min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }
  FieldElement coefficient(const Word& w) const;

  /// True iff every term has an even (odd) number of Z-letters. Zero is both.
  bool is_even() const;
  bool is_odd() const;
  std::set<Variable> variables() const;

  void add_term(const Word& w, FieldElement c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(FieldElement c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_same_field(const Polynomial& other) const;

  FieldPtr field_;
  Terms terms_;
};

/// Even and odd homogeneous components (f0, f1) with f = f0 + f1.
std::pair<Polynomial, Polynomial> grading_split(const Polynomial& f);

Polynomial commutator(const Polynomial& u, const Polynomial& v);

/// [u1, ..., um] = [[u1, ..., u(m-1)], um]; requires m >= 2.
Polynomial left_normed(std::span<const Polynomial> args);

struct CommutatorStep {
  Polynomial v;
  unsigned r = 1;
};

/// [u, v1^(r1), v2^(r2), ...] where [u, v^(0)] = u and [u, v^(r)] = [u, v^(r-1), v].
Polynomial powered_commutator(const Polynomial& u, std::span<const CommutatorStep> steps);

using Substitution = std::map<Variable, Polynomial>;

/// Graded endomorphism image. Y-variables must map to even polynomials and
/// Z-variables to odd ones; unassigned variables are left in place.
Polynomial substitute(const Polynomial& f, const Substitution& sigma);

/// Canonical text form, parseable by parse_polynomial.
std::string to_string(const Polynomial& f);
std::string to_string(const Word& w);

}  // namespace gradid
