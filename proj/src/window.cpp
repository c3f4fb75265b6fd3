#include "gradid/window.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gradid/errors.hpp"

namespace gradid {

Window::Window(unsigned yvars, unsigned zvars, unsigned max_deg, std::size_t cap)
    : m_(yvars), n_(zvars), d_(max_deg) {
  if (m_ + n_ == 0) throw std::invalid_argument("window needs at least one variable");
  if (d_ == 0) throw std::invalid_argument("window degree must be positive");
  offset_.assign(d_ + 2, 0);
  double power = 1;
  double total = 0;
  for (unsigned l = 1; l <= d_; ++l) {
    power *= double(m_ + n_);
    total += power;
    if (total > double(cap)) {
      throw CapExceeded("window (" + std::to_string(m_) + "," + std::to_string(n_) + "," + std::to_string(d_) +
                            ") is too large",
                        "ambient dimension", total, double(cap));
    }
    offset_[l + 1] = std::size_t(total);
  }
  dim_ = std::size_t(total);
}

std::size_t Window::dim_up_to(unsigned l) const { return offset_[std::min(l, d_) + 1]; }

Variable Window::letter(std::size_t i) const {
  return i < m_ ? Variable::y(unsigned(i) + 1) : Variable::z(unsigned(i - m_) + 1);
}

std::size_t Window::letter_index(Variable v) const {
  return v.kind == VarKind::Y ? std::size_t(v.index) - 1 : m_ + std::size_t(v.index) - 1;
}

bool Window::contains(const Word& w) const {
  if (w.empty() || w.size() > d_) return false;
  for (Variable v : w) {
    if (v.index < 1 || v.index > (v.kind == VarKind::Y ? m_ : n_)) return false;
  }
  return true;
}

bool Window::contains(const Polynomial& f) const {
  for (const auto& [w, c] : f.terms()) {
    if (!contains(w)) return false;
  }
  return true;
}

std::size_t Window::column(const Word& w) const {
  std::size_t r = 0;
  for (Variable v : w) r = r * letters() + letter_index(v);
  return dim_ - 1 - (offset_[w.size()] + r);
}

Word Window::word(std::size_t column) const {
  std::size_t pos = dim_ - 1 - column;
  unsigned l = 1;
  while (offset_[l + 1] <= pos) ++l;
  std::size_t r = pos - offset_[l];
  Word w(l);
  for (unsigned i = l; i-- > 0;) {
    w[i] = letter(r % letters());
    r /= letters();
  }
  return w;
}

unsigned Window::degree_of_column(std::size_t column) const {
  const std::size_t pos = dim_ - 1 - column;
  unsigned l = 1;
  while (offset_[l + 1] <= pos) ++l;
  return l;
}

Row Window::vector(const Polynomial& f) const {
  Row v(dim_, 0);
  for (const auto& [w, c] : f.terms()) {
    if (!contains(w)) throw std::invalid_argument("monomial " + to_string(w) + " lies outside the window");
    v[column(w)] = c.code;
  }
  return v;
}

Polynomial Window::polynomial(const FieldPtr& field, const Row& v) const {
  Polynomial f(field);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c]) f.add_term(word(c), FieldElement{v[c]});
  }
  return f;
}

std::vector<Word> Window::words() const {
  std::vector<Word> out;
  out.reserve(dim_);
  for (std::size_t c = dim_; c-- > 0;) out.push_back(word(c));
  return out;
}

}  // namespace gradid
