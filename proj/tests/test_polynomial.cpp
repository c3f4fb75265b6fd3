#include <random>

#include "doctest.h"
#include "gradid/errors.hpp"
#include "gradid/parser.hpp"
#include "gradid/polynomial.hpp"

using namespace gradid;

namespace {

Polynomial P(const FieldPtr& F, const char* s) { return parse_polynomial(s, F); }

Polynomial random_poly(const FieldPtr& F, std::mt19937_64& rng, bool graded_even = false) {
  const Variable letters[] = {Variable::y(1), Variable::y(2), Variable::z(1), Variable::z(2)};
  Polynomial f(F);
  for (unsigned t = 0, n = 1 + rng() % 3; t < n; ++t) {
    Word w(1 + rng() % 3);
    for (auto& v : w) v = letters[rng() % (graded_even ? 2 : 4)];
    f.add_term(w, FieldElement{std::uint8_t(1 + rng() % (F->order() - 1))});
  }
  return f;
}

// Direct expansion of left-normed commutators on words, for comparison.
Polynomial expand_bracket(const Polynomial& u, const Polynomial& v) {
  Polynomial out(u.field_ptr());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      Word ab = a, ba = b;
      ab.insert(ab.end(), b.begin(), b.end());
      ba.insert(ba.end(), a.begin(), a.end());
      const auto c = u.field().mul(ca, cb);
      out.add_term(ab, c);
      out.add_term(ba, u.field().neg(c));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("freealg") {

TEST_CASE("products and normalization") {
  const auto F = Field::of_order(2);
  CHECK(to_string(P(F, "y1") * P(F, "z1")) == "y1z1");
  CHECK(P(F, "(y1+z1)*(y1+z1)") == P(F, "y1y1 + y1z1 + z1y1 + z1z1"));
  CHECK(P(F, "y1 + y1").is_zero());
  CHECK(P(F, "y1^3").degree() == 3);
}

TEST_CASE("parity is additive") {
  const auto F = Field::of_order(3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_poly(F, rng), g = random_poly(F, rng);
    for (const auto& [a, ca] : f.terms()) {
      for (const auto& [b, cb] : g.terms()) {
        Word ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        CHECK(parity(ab) == (parity(a) + parity(b)) % 2);
      }
    }
  }
}

TEST_CASE("grading split") {
  const auto F = Field::of_order(3);
  auto [a0, a1] = grading_split(P(F, "z1y1z2 + y1"));
  CHECK(a0 == P(F, "z1y1z2 + y1"));
  CHECK(a1.is_zero());
  auto [b0, b1] = grading_split(P(F, "z1 + y1z1y2"));
  CHECK(b0.is_zero());
  CHECK(b1 == P(F, "z1 + y1z1y2"));
  auto [c0, c1] = grading_split(P(F, "y1y2 + z1z2 + z1"));
  CHECK(c0 == P(F, "y1y2 + z1z2"));
  CHECK(c1 == P(F, "z1"));
  CHECK(c0 + c1 == P(F, "y1y2 + z1z2 + z1"));
}

TEST_CASE("commutators") {
  const auto F = Field::of_order(3);
  CHECK(commutator(P(F, "y1"), P(F, "y1")).is_zero());
  CHECK(commutator(P(F, "z1"), P(F, "y1")) == P(F, "z1y1 - y1z1"));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto u = random_poly(F, rng), v = random_poly(F, rng), f = random_poly(F, rng);
    CHECK(commutator(u, v) == -commutator(v, u));
    CHECK(commutator(u, v) == expand_bracket(u, v));
    const auto yl = P(F, "y1"), yk = P(F, "y2");
    const Polynomial a[] = {f, yl, yk}, b[] = {f, yk, yl}, c[] = {yk, yl, f};
    CHECK((left_normed(a) - left_normed(b) - left_normed(c)).is_zero());
  }
  const Polynomial args[] = {P(F, "y2"), P(F, "y1"), P(F, "y1")};
  CHECK(left_normed(args) == commutator(commutator(P(F, "y2"), P(F, "y1")), P(F, "y1")));
  CHECK(P(F, "[z1,y1,y2]") == expand_bracket(expand_bracket(P(F, "z1"), P(F, "y1")), P(F, "y2")));
  CHECK_THROWS(left_normed(std::span<const Polynomial>(args, 1)));
}

TEST_CASE("powered commutators") {
  const auto F = Field::of_order(5);
  const auto z = P(F, "z1"), y = P(F, "y1");
  CHECK(powered_commutator(z, std::vector<CommutatorStep>{{y, 0}}) == z);
  CHECK(powered_commutator(z, std::vector<CommutatorStep>{{y, 2}}) == P(F, "z1y1y1 - 2*y1z1y1 + y1y1z1"));
  CHECK(P(F, "[z1, y1^(2)]") == P(F, "z1y1y1 - 2*y1z1y1 + y1y1z1"));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto u = random_poly(F, rng), v = random_poly(F, rng), w = random_poly(F, rng);
    auto br = [&](const Polynomial& a, unsigned r) { return powered_commutator(a, std::vector<CommutatorStep>{{w, r}}); };
    CHECK(br(u * v, 2) == u * br(v, 2) + (br(u, 1) * br(v, 1)).scaled(F->from_int(2)) + br(u, 2) * v);
  }
}

TEST_CASE("substitution") {
  const auto F = Field::of_order(3);
  Substitution s{{Variable::z(1), P(F, "z1y1")}};
  CHECK(substitute(P(F, "z1z2"), s) == P(F, "z1y1z2"));
  CHECK_THROWS_AS(substitute(P(F, "z1"), Substitution{{Variable::z(1), P(F, "y1")}}), std::invalid_argument);
  CHECK_THROWS_AS(substitute(P(F, "y1"), Substitution{{Variable::y(1), P(F, "z1")}}), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(F, rng), g = random_poly(F, rng);
    Substitution sig{{Variable::y(1), random_poly(F, rng, true)},
                     {Variable::z(1), P(F, "z2y1 + y2z1")},
                     {Variable::y(2), P(F, "z1z2 - y1")}};
    CHECK(substitute(f * g, sig) == substitute(f, sig) * substitute(g, sig));
    CHECK(substitute(f + g, sig) == substitute(f, sig) + substitute(g, sig));
    const auto [f0, f1] = grading_split(f);
    CHECK(substitute(f0, sig).is_even());
    CHECK(substitute(f1, sig).is_odd());
  }
}

TEST_CASE("parse and print round trip") {
  for (unsigned q : {2u, 3u, 4u, 9u}) {
    const auto F = Field::of_order(q);
    std::mt19937_64 rng(q);
    for (int i = 0; i < 100; ++i) {
      const auto f = random_poly(F, rng);
      CHECK(parse_polynomial(to_string(f), F) == f);
    }
  }
  const auto F4 = Field::of_order(4);
  CHECK(to_string(P(F4, "{0,1}*y1 + z1")) == "{0,1}*y1 + z1");
  const auto F3 = Field::of_order(3);
  CHECK(P(F3, "4*y1") == P(F3, "y1"));
  CHECK(P(F3, "[y1^(2), y2]") == commutator(P(F3, "y1^2"), P(F3, "y2")));
  CHECK(to_string(Polynomial(F3)) == "0");
}

TEST_CASE("parse errors carry positions") {
  const auto F = Field::of_order(3);
  auto pos = [&](const char* s) -> long {
    try {
      parse_polynomial(s, F);
    } catch (const ParseError& e) {
      return long(e.position());
    }
    return -1;
  };
  CHECK(pos("y1 + ") == 5);
  CHECK(pos("z1*+z2") == 3);
  CHECK(pos("x1") == 0);
  CHECK(pos("[y1]") >= 0);
  CHECK(pos("2") >= 0);
  CHECK(pos("y0") >= 0);
  CHECK(pos("(y1") >= 0);
}

}
