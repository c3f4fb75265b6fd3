#include "gradid/polynomial.hpp"

#include <stdexcept>

namespace gradid {

std::string to_string(Variable v) {
  return (v.kind == VarKind::Y ? "y" : "z") + std::to_string(v.index);
}

int parity(const Word& w) {
  int p = 0;
  for (const auto& v : w) p ^= v.odd() ? 1 : 0;
  return p;
}

Polynomial Polynomial::var(FieldPtr field, Variable v) {
  if (v.index < 1) throw std::invalid_argument("variable index must be positive");
  return term(std::move(field), Word{v}, FieldElement{1});
}

Polynomial Polynomial::term(FieldPtr field, Word w, FieldElement c) {
  if (w.empty()) throw std::invalid_argument("the free algebra is non-unitary: empty word");
  Polynomial p(std::move(field));
  p.add_term(w, c);
  return p;
}

FieldElement Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FieldElement{} : it->second;
}

bool Polynomial::is_even() const {
  for (const auto& [w, c] : terms_) {
    if (parity(w) != 0) return false;
  }
  return true;
}

bool Polynomial::is_odd() const {
  for (const auto& [w, c] : terms_) {
    if (parity(w) != 1) return false;
  }
  return true;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> vs;
  for (const auto& [w, c] : terms_) vs.insert(w.begin(), w.end());
  return vs;
}

void Polynomial::add_term(const Word& w, FieldElement c) {
  if (c.is_zero()) return;
  if (w.empty()) throw std::invalid_argument("the free algebra is non-unitary: empty word");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same_field(const Polynomial& other) const {
  if (field_ != other.field_ && !(*field_ == *other.field_)) {
    throw std::invalid_argument("polynomials over different fields");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_field(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_field(other);
  for (const auto& [w, c] : other.terms_) add_term(w, field_->neg(c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_field(b);
  Polynomial out(a.field_);
  const Field& F = *a.field_;
  Word buf;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      buf.assign(wa.begin(), wa.end());
      buf.insert(buf.end(), wb.begin(), wb.end());
      out.add_term(buf, F.mul(ca, cb));
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(field_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, field_->neg(c));
  return out;
}

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial out(field_);
  if (c.is_zero()) return out;
  for (const auto& [w, a] : terms_) out.terms_.emplace(w, field_->mul(a, c));
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  if (e == 0) throw std::invalid_argument("the free algebra is non-unitary: zeroth power");
  Polynomial out = *this;
  for (unsigned i = 1; i < e; ++i) out = out * *this;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return *field_ == *other.field_ && terms_ == other.terms_;
}

std::pair<Polynomial, Polynomial> grading_split(const Polynomial& f) {
  Polynomial even(f.field_ptr());
  Polynomial odd(f.field_ptr());
  for (const auto& [w, c] : f.terms()) (parity(w) ? odd : even).add_term(w, c);
  return {even, odd};
}

Polynomial commutator(const Polynomial& u, const Polynomial& v) { return u * v - v * u; }

Polynomial left_normed(std::span<const Polynomial> args) {
  if (args.size() < 2) throw std::invalid_argument("left-normed commutator needs at least two arguments");
  Polynomial acc = commutator(args[0], args[1]);
  for (std::size_t i = 2; i < args.size(); ++i) acc = commutator(acc, args[i]);
  return acc;
}

Polynomial powered_commutator(const Polynomial& u, std::span<const CommutatorStep> steps) {
  Polynomial acc = u;
  for (const auto& step : steps) {
    for (unsigned i = 0; i < step.r; ++i) acc = commutator(acc, step.v);
  }
  return acc;
}

Polynomial substitute(const Polynomial& f, const Substitution& sigma) {
  for (const auto& [v, image] : sigma) {
    const bool ok = v.odd() ? image.is_odd() : image.is_even();
    if (!ok) {
      throw std::invalid_argument("substitution for " + to_string(v) + " does not preserve the grading");
    }
  }
  const FieldPtr& F = f.field_ptr();
  Polynomial out(F);
  for (const auto& [w, c] : f.terms()) {
    // Multiply images letter by letter; untouched letters stay as single words.
    Polynomial acc(F);
    bool first = true;
    for (const auto& letter : w) {
      auto it = sigma.find(letter);
      const Polynomial img = it == sigma.end() ? Polynomial::var(F, letter) : it->second;
      acc = first ? img : acc * img;
      first = false;
      if (acc.is_zero()) break;
    }
    out += acc.scaled(c);
  }
  return out;
}

std::string to_string(const Word& w) {
  std::string s;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    s += to_string(w[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    if (!first) s += " + ";
    first = false;
    if (c != f.field().one()) s += f.field().format(c) + "*";
    s += to_string(w);
  }
  return s;
}

}  // namespace gradid
