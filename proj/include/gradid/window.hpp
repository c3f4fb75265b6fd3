#pragma once

// The ambient space W(m, n, d): span of all words of length 1..d in
// y1..ym, z1..zn. Columns run from the largest word in graded-lex order down to
// the smallest, so the pivot of an echelon row is its leading monomial.

#include <cstddef>
#include <optional>
#include <vector>

#include "gradid/linalg.hpp"
#include "gradid/polynomial.hpp"

namespace gradid {

inline constexpr std::size_t kDefaultWindowCap = 50'000;

class Window {
 public:
  /// Throws CapExceeded if dim W exceeds cap.
  Window(unsigned yvars, unsigned zvars, unsigned max_deg, std::size_t cap = kDefaultWindowCap);

  unsigned yvars() const { return m_; }
  unsigned zvars() const { return n_; }
  unsigned max_deg() const { return d_; }
  std::size_t dim() const { return dim_; }
  /// Number of words of length <= l.
  std::size_t dim_up_to(unsigned l) const;

  std::size_t letters() const { return m_ + n_; }
  Variable letter(std::size_t i) const;
  std::size_t letter_index(Variable v) const;

  bool contains(const Word& w) const;
  bool contains(const Polynomial& f) const;

  std::size_t column(const Word& w) const;
  Word word(std::size_t column) const;
  unsigned degree_of_column(std::size_t column) const;

  /// Throws std::invalid_argument if f leaves the window.
  Row vector(const Polynomial& f) const;
  Polynomial polynomial(const FieldPtr& field, const Row& v) const;

  /// All words of the window in graded-lex order.
  std::vector<Word> words() const;

  bool operator==(const Window& o) const { return m_ == o.m_ && n_ == o.n_ && d_ == o.d_; }

 private:
  unsigned m_, n_, d_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> offset_;  // offset_[l] = number of words shorter than l
};

}  // namespace gradid
