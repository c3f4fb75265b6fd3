#pragma once

// Exact arithmetic in GF(q), q = p^k.
//
// Elements are stored as a single code in [0, q): the power-basis coordinates
// (c0, ..., c_{k-1}) read as a base-p number with c0 least significant. Code 0 is
// zero and code 1 is one. Arithmetic is defined by polynomial arithmetic modulo
// the field's modulus; the add/mul/inv tables built at construction are a cache
// of that arithmetic and can be cross-checked against the *_direct routines.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gradid {

struct FieldElement {
  std::uint8_t code = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint8_t c) : code(c) {}

  constexpr bool is_zero() const { return code == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr unsigned kDefaultMaxFieldSize = 9;
inline constexpr unsigned kHardMaxFieldSize = 256;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Builds GF(p^k). The modulus is the lexicographically smallest monic
  /// irreducible of degree k, comparing coefficients from the constant term up.
  static FieldPtr make(unsigned p, unsigned k, unsigned max_q = kDefaultMaxFieldSize);

  /// Factors q as a prime power and builds the field.
  static FieldPtr of_order(unsigned q, unsigned max_q = kDefaultMaxFieldSize);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  unsigned order() const { return q_; }
  /// Modulus coefficients c0..ck (ck = 1). For k = 1 this is x.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  /// Image of an integer in the prime subfield.
  FieldElement from_int(long long n) const;
  FieldElement from_coords(std::span<const unsigned> coords) const;
  std::vector<unsigned> coords(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const { return FieldElement{add_[idx(a, b)]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return FieldElement{mul_[idx(a, b)]}; }
  FieldElement neg(FieldElement a) const { return FieldElement{neg_[a.code]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, unsigned long long e) const;

  /// Table-free reference arithmetic (coordinate vectors, polynomial reduction).
  FieldElement add_direct(FieldElement a, FieldElement b) const;
  FieldElement mul_direct(FieldElement a, FieldElement b) const;

  /// All q elements in code order; the first one is zero.
  std::vector<FieldElement> elements() const;

  /// Prime fields print integers; extension fields print `{c0,...,c(k-1)}`
  /// unless the element lies in the prime subfield.
  std::string format(FieldElement a) const;
  /// Accepts `n` (range 0..p-1) or `{c0,...}`.
  FieldElement parse(std::string_view text) const;

  std::string name() const;

  // Raw tables for hot loops. Index is a.code * order() + b.code.
  const std::uint8_t* add_table() const { return add_.data(); }
  const std::uint8_t* mul_table() const { return mul_.data(); }

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(unsigned p, unsigned k, std::vector<unsigned> modulus);
  std::size_t idx(FieldElement a, FieldElement b) const { return std::size_t(a.code) * q_ + b.code; }

  unsigned p_;
  unsigned k_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

bool is_prime(unsigned n);

/// Irreducibility of a polynomial over GF(p) by trial division with every monic
/// polynomial of degree at most deg/2. Coefficients are listed from the constant term.
bool is_irreducible_mod_p(std::span<const unsigned> coeffs, unsigned p);

/// Writes q = p^k; returns false if q is not a prime power.
bool factor_prime_power(unsigned q, unsigned& p, unsigned& k);

}  // namespace gradid
