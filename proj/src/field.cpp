#include "gradid/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradid {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using PolyP = std::vector<unsigned>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
PolyP poly_mod(PolyP a, const PolyP& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool factor_prime_power(unsigned q, unsigned& p, unsigned& k) {
  if (q < 2) return false;
  unsigned d = 2;
  while (q % d != 0) ++d;
  unsigned n = q;
  unsigned e = 0;
  while (n % d == 0) {
    n /= d;
    ++e;
  }
  if (n != 1) return false;
  p = d;
  k = e;
  return true;
}

bool is_irreducible_mod_p(std::span<const unsigned> coeffs, unsigned p) {
  PolyP f(coeffs.begin(), coeffs.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Normalize to monic so poly_mod applies.
  {
    unsigned lead = f.back();
    unsigned inv = 1;
    while ((inv * lead) % p != 1) ++inv;
    for (auto& c : f) c = (c * inv) % p;
  }
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    const unsigned count = ipow(p, unsigned(dd));
    for (unsigned code = 0; code < count; ++code) {
      PolyP g(dd + 1);
      unsigned c = code;
      for (std::size_t i = 0; i < dd; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[dd] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr Field::make(unsigned p, unsigned k, unsigned max_q) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  const unsigned limit = std::min(max_q, kHardMaxFieldSize);
  unsigned long long q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > limit) {
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                  " exceeds the limit " + std::to_string(limit));
    }
  }
  PolyP modulus;
  if (k == 1) {
    modulus = {0, 1};
  } else {
    // Tuples (c0, ..., c_{k-1}) in lexicographic order with c0 most significant.
    const unsigned count = unsigned(q);
    for (unsigned t = 0; t < count && modulus.empty(); ++t) {
      PolyP cand(k + 1);
      unsigned c = t;
      for (unsigned i = k; i-- > 0;) {
        cand[i] = c % p;
        c /= p;
      }
      cand[k] = 1;
      if (is_irreducible_mod_p(cand, p)) modulus = cand;
    }
  }
  return FieldPtr(new Field(p, k, std::move(modulus)));
}

FieldPtr Field::of_order(unsigned q, unsigned max_q) {
  unsigned p = 0;
  unsigned k = 0;
  if (!factor_prime_power(q, p, k)) {
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  return make(p, k, max_q);
}

Field::Field(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)) {
  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      add_[idx(FieldElement(a), FieldElement(b))] = add_direct(FieldElement(a), FieldElement(b)).code;
      mul_[idx(FieldElement(a), FieldElement(b))] = mul_direct(FieldElement(a), FieldElement(b)).code;
    }
  }
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      if (add_[idx(FieldElement(a), FieldElement(b))] == 0) neg_[a] = std::uint8_t(b);
      if (mul_[idx(FieldElement(a), FieldElement(b))] == 1) inv_[a] = std::uint8_t(b);
    }
  }
}

std::vector<unsigned> Field::coords(FieldElement a) const {
  std::vector<unsigned> c(k_);
  unsigned v = a.code;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElement Field::from_coords(std::span<const unsigned> coords) const {
  if (coords.size() != k_) throw std::invalid_argument("coordinate vector has wrong length");
  unsigned v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= p_) throw std::invalid_argument("coordinate out of range");
    v = v * p_ + coords[i];
  }
  return FieldElement(std::uint8_t(v));
}

FieldElement Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return FieldElement(std::uint8_t(r));
}

FieldElement Field::add_direct(FieldElement a, FieldElement b) const {
  auto ca = coords(a);
  const auto cb = coords(b);
  for (unsigned i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return from_coords(ca);
}

FieldElement Field::mul_direct(FieldElement a, FieldElement b) const {
  const auto ca = coords(a);
  const auto cb = coords(b);
  PolyP prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  PolyP r = k_ == 1 ? PolyP{prod[0]} : poly_mod(prod, modulus_, p_);
  r.resize(k_, 0);
  return from_coords(r);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in " + name());
  return FieldElement{inv_[a.code]};
}

FieldElement Field::pow(FieldElement a, unsigned long long e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (unsigned c = 0; c < q_; ++c) out.emplace_back(std::uint8_t(c));
  return out;
}

std::string Field::format(FieldElement a) const {
  if (a.code < p_) return std::to_string(a.code);
  const auto c = coords(a);
  std::string s = "{";
  for (unsigned i = 0; i < k_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "}";
}

FieldElement Field::parse(std::string_view text) const {
  auto parse_uint = [](std::string_view t) -> unsigned {
    std::size_t b = t.find_first_not_of(" \t");
    std::size_t e = t.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw std::invalid_argument("empty field literal");
    t = t.substr(b, e - b + 1);
    unsigned v = 0;
    for (char ch : t) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit in field literal");
      v = v * 10 + unsigned(ch - '0');
      if (v > 1'000'000) throw std::invalid_argument("field literal too large");
    }
    return v;
  };
  std::size_t b = text.find_first_not_of(" \t");
  if (b == std::string_view::npos) throw std::invalid_argument("empty field literal");
  text = text.substr(b);
  if (text.front() == '{') {
    const auto close = text.find('}');
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated field literal");
    std::vector<unsigned> c;
    std::string_view body = text.substr(1, close - 1);
    while (true) {
      const auto comma = body.find(',');
      c.push_back(parse_uint(body.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    return from_coords(c);
  }
  const unsigned v = parse_uint(text);
  if (v >= p_) throw std::invalid_argument("integer literal " + std::to_string(v) + " outside 0.." + std::to_string(p_ - 1));
  return FieldElement(std::uint8_t(v));
}

std::string Field::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

}  // namespace gradid
