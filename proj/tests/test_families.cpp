#include <functional>
#include <set>

#include "doctest.h"
#include "gradid/families.hpp"
#include "gradid/graded_matrix.hpp"
#include "gradid/parser.hpp"
#include "oracles.hpp"

using namespace gradid;

namespace {

Polynomial yv(const FieldPtr& F, unsigned i) { return Polynomial::var(F, Variable::y(i)); }

Polynomial step(Polynomial u, const Polynomial& v, unsigned r) {
  for (unsigned i = 0; i < r; ++i) u = commutator(u, v);
  return u;
}

// Every ordered q-commutator of degree <= d built straight from the
// definition, raw descriptors included (zero exponents, repeated polynomials).
std::set<std::string> q_commutators_by_definition(const FieldPtr& F, unsigned m, unsigned d) {
  const unsigned q = F->order();
  std::set<std::string> out;
  std::vector<unsigned> idx;
  std::vector<bool> used(m + 1, false);
  // Alternating: j1 > j2 < j3 < ... < jn.
  std::function<void(unsigned)> grow = [&](unsigned) {
    if (idx.size() >= 2) {
      const std::size_t n = idx.size();
      std::vector<unsigned> s(n, 1);
      std::function<void(std::size_t, unsigned)> ex = [&](std::size_t i, unsigned deg) {
        if (i == n) {
          Polynomial p = commutator(yv(F, idx[0]), yv(F, idx[1]));
          p = step(p, yv(F, idx[1]), s[1] - 1);
          p = step(p, yv(F, idx[0]), s[0] - 1);
          for (std::size_t k = 2; k < n; ++k) p = step(p, yv(F, idx[k]), s[k]);
          out.insert(to_string(p));
          return;
        }
        for (unsigned e = 1; e < q && deg + e <= d; ++e) {
          s[i] = e;
          ex(i + 1, deg + e);
        }
      };
      ex(0, 0);
    }
    for (unsigned j = 1; j <= m; ++j) {
      if (used[j]) continue;
      if (idx.size() == 1 && !(j < idx[0])) continue;
      if (idx.size() >= 2 && !(j > idx.back())) continue;
      used[j] = true;
      idx.push_back(j);
      grow(0);
      idx.pop_back();
      used[j] = false;
    }
  };
  grow(0);
  // Frobenius head: [y_l^q - y_l, y_{l2}^(t2), ...], l2 < l3 < ..., t in [0, q).
  for (unsigned l = 1; l <= m; ++l) {
    if (q > d) continue;
    std::function<void(Polynomial, unsigned, unsigned)> tail = [&](Polynomial p, unsigned last, unsigned deg) {
      out.insert(to_string(p));
      for (unsigned j = last + 1; j <= m; ++j) {
        if (j == l) continue;
        for (unsigned t = 0; t < q && deg + t <= d; ++t) tail(step(p, yv(F, j), t), j, deg + t);
      }
    };
    tail(yv(F, l).pow(q) - yv(F, l), 0, q);
  }
  return out;
}

}  // namespace

TEST_SUITE("freealg") {

TEST_CASE("ordered q-commutators: small cases") {
  const auto F2 = Field::of_order(2);
  std::set<std::string> got;
  for (const auto& e : enumerate_ordered_q_commutators(F2, 2, 2)) got.insert(to_string(e.poly));
  CHECK(got == std::set<std::string>{to_string(parse_polynomial("[y2,y1]", F2)), to_string(parse_polynomial("y1^2-y1", F2)),
                                     to_string(parse_polynomial("y2^2-y2", F2))});
  CHECK(enumerate_ordered_q_commutators(F2, 1, 1).empty());
  const auto F3 = Field::of_order(3);
  std::set<std::string> got3;
  for (const auto& e : enumerate_ordered_q_commutators(F3, 2, 3)) got3.insert(to_string(e.poly));
  CHECK(got3.count(to_string(parse_polynomial("[y2,y1^(2)]", F3))));
  CHECK(got3.count(to_string(parse_polynomial("y1^3-y1", F3))));
}

TEST_CASE("ordered q-commutators match the definition") {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto F = Field::of_order(q);
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned d = 1; d <= 5; ++d) {
        const auto list = enumerate_ordered_q_commutators(F, m, d);
        std::set<std::string> got;
        unsigned prev = 0;
        for (const auto& e : list) {
          got.insert(to_string(e.poly));
          CHECK(e.poly == e.descriptor.build(F));
          CHECK(e.descriptor.degree(q) >= prev);
          prev = e.descriptor.degree(q);
          CHECK(parse_polynomial(e.descriptor.label(q), F) == e.poly);
        }
        CHECK(got.size() == list.size());
        CHECK(got == q_commutators_by_definition(F, m, d));
      }
    }
  }
}

TEST_CASE("ut2-canonical family at (1,1,3) over GF(2)") {
  const auto F = Field::of_order(2);
  const auto fam = enumerate_spanning_family(Preset::Ut2Canonical, F, 1, 1, 3);
  std::set<std::string> got;
  for (const auto& s : fam.members) got.insert(to_string(s.poly));
  std::set<std::string> want;
  for (const char* s : {"y1", "z1", "y1z1", "[z1,y1]", "y1[z1,y1]"}) want.insert(to_string(parse_polynomial(s, F)));
  CHECK(fam.size() == 5);
  CHECK(got == want);
}

TEST_CASE("family members never lack a variable part and never repeat") {
  for (auto preset : {Preset::Ut2Canonical, Preset::Ut3A, Preset::Ut3B}) {
    for (unsigned q : {2u, 3u}) {
      const auto F = Field::of_order(q);
      const auto fam = enumerate_spanning_family(preset, F, 2, 2, 4);
      std::set<std::string> seen;
      std::size_t total = 0;
      for (const auto& c : fam.count_by_degree()) total += c;
      CHECK(total == fam.size());
      unsigned prev = 0;
      for (const auto& s : fam.members) {
        CHECK_FALSE(s.poly.is_zero());
        CHECK(s.degree == s.poly.degree());
        CHECK(s.degree >= prev);
        prev = s.degree;
        CHECK(seen.insert(to_string(s.poly)).second);
        CHECK(parse_polynomial(s.label, F) == s.poly);
      }
    }
  }
}

TEST_CASE("ut3-B contains the two-bracket and mixed members") {
  const auto F = Field::of_order(2);
  const auto fam = enumerate_spanning_family(Preset::Ut3B, F, 1, 2, 2);
  std::set<std::string> got;
  for (const auto& s : fam.members) got.insert(to_string(s.poly));
  CHECK(got.count("z1z2"));
  CHECK(got.count("z2z1"));
  CHECK(got.count("y1z1"));
}

TEST_CASE("family size equals the dimension of the relatively free algebra") {
  struct W {
    Preset p;
    unsigned q, m, n, d;
  };
  for (auto w : {W{Preset::Ut2Canonical, 2, 1, 1, 3}, W{Preset::Ut2Canonical, 2, 2, 1, 4}, W{Preset::Ut2Canonical, 3, 2, 1, 4},
                 W{Preset::Ut3A, 2, 2, 1, 3}, W{Preset::Ut3B, 2, 1, 2, 3}, W{Preset::Ut3B, 2, 2, 2, 3},
                 W{Preset::Ut3B, 3, 1, 1, 3}}) {
    CAPTURE(preset_name(w.p));
    CAPTURE(w.q);
    const auto F = Field::of_order(w.q);
    const auto fam = enumerate_spanning_family(w.p, F, w.m, w.n, w.d);
    const Window win(w.m, w.n, w.d);
    CHECK(fam.size() == win.dim() - oracle::identity_kernel_dim(F, Grading::preset(w.p), w.m, w.n, w.d));
  }
}

TEST_CASE("presets") {
  CHECK(parse_preset("ut3-A") == Preset::Ut3A);
  CHECK(preset_name(Preset::Ut3B) == "ut3-B");
  CHECK_THROWS_AS(parse_preset("ut4"), std::invalid_argument);
}

}
