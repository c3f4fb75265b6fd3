#include <set>

#include "doctest.h"
#include "gradid/errors.hpp"
#include "gradid/field.hpp"
#include "oracles.hpp"

using namespace gradid;

TEST_SUITE("ff") {

TEST_CASE("prime field arithmetic") {
  const auto F = Field::make(5, 1);
  CHECK(F->add(F->from_int(2), F->from_int(4)) == F->from_int(1));
  CHECK(F->inv(F->from_int(3)) == F->from_int(2));
  CHECK(F->sub(F->from_int(1), F->from_int(3)) == F->from_int(3));
  CHECK(F->from_int(-1) == F->from_int(4));
  CHECK(F->name() == "GF(5)");
  CHECK_THROWS_AS(F->inv(F->zero()), std::domain_error);
}

TEST_CASE("chosen moduli") {
  CHECK(Field::make(2, 2)->modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(Field::make(3, 2)->modulus() == std::vector<unsigned>{1, 0, 1});
  CHECK(Field::make(2, 3)->modulus() == std::vector<unsigned>{1, 0, 1, 1});
}

TEST_CASE("moduli are irreducible and smallest") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto F = Field::make(p, k);
    CHECK_FALSE(oracle::has_root_mod_p(F->modulus(), p));
    // Every monic candidate that is smaller, low coefficient first, has a root.
    std::vector<unsigned> c(k + 1, 0);
    c[k] = 1;
    std::size_t code = 0;
    while (true) {
      std::size_t t = code++;
      for (unsigned i = k; i-- > 0;) {
        c[i] = t % p;
        t /= p;
      }
      if (c == F->modulus()) break;
      CHECK(oracle::has_root_mod_p(c, p));
    }
  }
}

TEST_CASE("field axioms for every supported field") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto F = Field::of_order(q);
    const auto el = F->elements();
    REQUIRE(el.size() == q);
    CHECK(el.front() == F->zero());
    CHECK(std::set<FieldElement>(el.begin(), el.end()).size() == q);
    for (auto a : el) {
      CHECK(F->pow(a, q) == a);
      if (!a.is_zero()) {
        CHECK(F->pow(a, q - 1) == F->one());
        CHECK(F->mul(a, F->inv(a)) == F->one());
      }
      CHECK(F->add(a, F->neg(a)) == F->zero());
      for (auto b : el) {
        CHECK(F->add(a, b) == F->add_direct(a, b));
        CHECK(F->mul(a, b) == F->mul_direct(a, b));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (auto c : el) {
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("GF(4) is closed and a^4 = a") {
  const auto F = Field::of_order(4);
  std::set<FieldElement> el;
  for (auto a : F->elements()) el.insert(a);
  for (auto a : el) {
    CHECK(F->pow(a, 4) == a);
    for (auto b : el) {
      CHECK(el.count(F->add(a, b)));
      CHECK(el.count(F->mul(a, b)));
    }
  }
}

TEST_CASE("literals") {
  const auto F = Field::of_order(4);
  const auto t = F->parse("{0,1}");
  CHECK(F->format(t) == "{0,1}");
  CHECK(F->format(F->parse("1")) == "1");
  CHECK(F->mul(t, t) == F->parse("{1,1}"));
  CHECK_THROWS(F->parse("{1,2}"));
  CHECK_THROWS(Field::of_order(5)->parse("7"));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(11), std::invalid_argument);
  CHECK(Field::of_order(11, 16)->order() == 11);
  CHECK(Field::of_order(16, 16)->modulus() == std::vector<unsigned>{1, 0, 0, 1, 1});
}

}
