#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "gradid/errors.hpp"
#include "gradid/parser.hpp"
#include "gradid/tideal.hpp"
#include "oracles.hpp"

using namespace gradid;

namespace {

Polynomial P(const FieldPtr& F, const char* s) { return parse_polynomial(s, F); }

Polynomial random_window_poly(const Window& W, const FieldPtr& F, std::mt19937_64& rng) {
  Polynomial f(F);
  const auto words = W.words();
  for (unsigned t = 0, n = 1 + rng() % 5; t < n; ++t) {
    f.add_term(words[rng() % words.size()], FieldElement{std::uint8_t(1 + rng() % (F->order() - 1))});
  }
  return f;
}

Assignment random_assignment(const Field& F, const Grading& G, const Window& W, std::mt19937_64& rng) {
  Assignment a;
  for (std::size_t i = 0; i < W.letters(); ++i) {
    const Variable v = W.letter(i);
    const auto els = homogeneous_elements(F, G, v.odd() ? 1 : 0);
    a[v] = els[rng() % els.size()];
  }
  return a;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("gradid-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("tideal") {

TEST_CASE("window layout") {
  const Window W(1, 1, 3);
  CHECK(W.dim() == 14);
  CHECK(W.dim_up_to(1) == 2);
  CHECK(W.dim_up_to(2) == 6);
  const auto words = W.words();
  REQUIRE(words.size() == 14);
  for (std::size_t c = 0; c < W.dim(); ++c) CHECK(W.column(W.word(c)) == c);
  // leading monomial first
  CHECK(W.word(0) == Word{Variable::z(1), Variable::z(1), Variable::z(1)});
  CHECK(W.degree_of_column(W.dim() - 1) == 1);
  const auto F = Field::of_order(3);
  const auto f = P(F, "2*y1z1 + z1 - y1^3");
  CHECK(W.polynomial(F, W.vector(f)) == f);
  CHECK_THROWS_AS(W.vector(P(F, "y2")), std::invalid_argument);
  CHECK_THROWS_AS(W.vector(P(F, "y1^4")), std::invalid_argument);
  CHECK_THROWS_AS(Window(3, 3, 9, 1000), CapExceeded);
}

TEST_CASE("echelon basics") {
  const auto F = Field::of_order(3);
  Echelon E(F, 3);
  CHECK(E.insert(Row{0, 2, 1}).has_value());
  CHECK(E.insert(Row{1, 1, 0}).has_value());
  CHECK_FALSE(E.insert(Row{2, 1, 1}).has_value());
  CHECK(E.rank() == 2);
  E.to_rref();
  CHECK(E.pivot_of(0) == 0);
  CHECK(E.rows()[0] == Row{1, 0, 1});
  CHECK(E.rows()[1] == Row{0, 1, 2});
  CHECK(rank_of(F, {Row{1, 2, 0}, Row{2, 1, 0}, Row{0, 0, 0}}, 3) == 1);
}

TEST_CASE("closure of the ut2 identities in a small window") {
  const auto F = Field::of_order(2);
  const Window W(1, 1, 3);
  const auto comp = closure(IdealPresentation::of_preset(Preset::Ut2Canonical, F), W);
  CHECK(comp.saturated);
  CHECK(comp.rank() == 9);
  CHECK(comp.rank() == oracle::identity_kernel_dim(F, Grading::preset(Preset::Ut2Canonical), 1, 1, 3));
  CHECK(comp.provenance.size() == comp.rank());
  CHECK(comp.rank_up_to(1) == 0);
  CHECK(comp.rank_up_to(3) == 9);
}

TEST_CASE("closure rows are identities") {
  std::mt19937_64 rng(5);
  for (auto p : {Preset::Ut2Canonical, Preset::Ut3A, Preset::Ut3B}) {
    for (unsigned q : {2u, 3u}) {
      const auto F = Field::of_order(q);
      const auto G = Grading::preset(p);
      const Window W(2, 1, 3);
      const auto comp = closure(IdealPresentation::of_preset(p, F), W);
      CHECK(comp.rank() == oracle::identity_kernel_dim(F, G, 2, 1, 3));
      for (std::size_t i = 0; i < comp.rank(); ++i) {
        const auto f = comp.row_polynomial(i);
        for (int t = 0; t < 40; ++t) CHECK(evaluate(f, random_assignment(*F, G, W, rng), G).is_zero());
      }
    }
  }
}

TEST_CASE("closure is monotone and order independent") {
  const auto F = Field::of_order(2);
  const auto pres = IdealPresentation::of_preset(Preset::Ut3B, F);
  const auto c3 = closure(pres, Window(1, 2, 3));
  const auto c4 = closure(pres, Window(1, 2, 4));
  CHECK(c4.rank_up_to(3) >= c3.rank());
  ClosureOptions deep;
  deep.depth = 3;
  CHECK(closure(pres, Window(1, 2, 3), deep).rank() >= c3.rank());
  ClosureOptions shuffled;
  shuffled.shuffle_seed = 77;
  CHECK(closure(pres, Window(1, 2, 3), shuffled).basis == c3.basis);
}

TEST_CASE("empty presentation") {
  const auto F = Field::of_order(3);
  const auto comp = closure(IdealPresentation{"E", F, {}}, Window(1, 1, 3));
  CHECK(comp.rank() == 0);
  CHECK(comp.saturated);
  CHECK(member(Polynomial(F), comp));
  CHECK_FALSE(member(P(F, "y1"), comp));
}

TEST_CASE("membership") {
  const auto F = Field::of_order(3);
  const auto comp = closure(IdealPresentation::of_preset(Preset::Ut2Canonical, F), Window(2, 1, 4));
  CHECK(member(P(F, "z1*z1"), comp));
  CHECK(member(P(F, "y1*[y1,y2]"), comp));
  CHECK(member(P(F, "y2^3 - y2"), comp));
  CHECK(member(P(F, "[z1,y1^3] - [z1,y1]"), comp));
  CHECK_FALSE(member(P(F, "[z1,y1]"), comp));
  CHECK_FALSE(member(P(F, "y1y2"), comp));
  CHECK_THROWS_AS(member(P(F, "y3"), comp), std::invalid_argument);
}

TEST_CASE("normal forms agree with evaluation") {
  std::mt19937_64 rng(13);
  for (auto p : {Preset::Ut2Canonical, Preset::Ut3A, Preset::Ut3B}) {
    const auto F = Field::of_order(2);
    const auto G = Grading::preset(p);
    const Window W(1, 2, 3);
    const auto comp = closure(IdealPresentation::of_preset(p, F), W);
    const auto fam = enumerate_spanning_family(p, F, 1, 2, 3);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const auto nf = normal_form(fam.members[i].poly, fam, comp);
      REQUIRE_FALSE(nf.residual);
      for (std::size_t j = 0; j < fam.size(); ++j) CHECK(nf.coefficients[j] == FieldElement{i == j});
    }
    for (int t = 0; t < 30; ++t) {
      const auto f = random_window_poly(W, F, rng);
      const auto nf = normal_form(f, fam, comp);
      REQUIRE_FALSE(nf.residual);
      Polynomial combo(F);
      for (std::size_t j = 0; j < fam.size(); ++j) combo += fam.members[j].poly.scaled(nf.coefficients[j]);
      CHECK(*nf.ideal_part == f - combo);
      CHECK(oracle::naive_is_identity(f - combo, G));
    }
  }
  const auto F = Field::of_order(2);
  const auto comp = closure(IdealPresentation::of_preset(Preset::Ut2Canonical, F), Window(1, 1, 2));
  const auto fam = enumerate_spanning_family(Preset::Ut2Canonical, F, 1, 1, 2);
  const auto nf = normal_form(P(F, "z1y1"), fam, comp);
  REQUIRE_FALSE(nf.residual);
  Polynomial combo(F);
  for (std::size_t j = 0; j < fam.size(); ++j) combo += fam.members[j].poly.scaled(nf.coefficients[j]);
  CHECK(combo == P(F, "z1y1"));
}

TEST_CASE("cache round trip") {
  TempDir dir;
  const auto F = Field::of_order(3);
  const auto pres = IdealPresentation::of_preset(Preset::Ut3A, F);
  const Window W(2, 1, 3);
  bool hit = true;
  const auto a = cached_closure(pres, W, {}, dir.path, &hit);
  CHECK_FALSE(hit);
  const auto file = dir.path / (cache_key(pres, W, 2).text + ".txt");
  REQUIRE(std::filesystem::exists(file));
  const auto b = cached_closure(pres, W, {}, dir.path, &hit);
  CHECK(hit);
  CHECK(a == b);
  CHECK(a.provenance == b.provenance);

  CHECK_FALSE(load_component(file, IdealPresentation::of_preset(Preset::Ut3B, F), W, 2).has_value());
  CHECK_FALSE(load_component(file, pres, Window(2, 1, 4), 2).has_value());
  CHECK_FALSE(load_component(file, pres, W, 3).has_value());
  CHECK_FALSE(load_component(dir.path / "missing.txt", pres, W, 2).has_value());

  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto cut = text.rfind("end");
  REQUIRE(cut != std::string::npos);
  {
    std::ofstream out(file, std::ios::trunc);
    out << text.substr(0, cut);
  }
  CHECK_FALSE(load_component(file, pres, W, 2).has_value());
  const auto c = cached_closure(pres, W, {}, dir.path, &hit);
  CHECK_FALSE(hit);
  CHECK(c == a);

  const auto k1 = cache_key(pres, W, 2).text, k2 = cache_key(IdealPresentation::of_preset(Preset::Ut3A, Field::of_order(2)), W, 2).text;
  CHECK(k1 != k2);
  CHECK(k1.find("J-p3k1-m2n1d3-s2-") == 0);
}

TEST_CASE("rewriting lemmas") {
  for (const auto& r : lemma_suite()) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
}

}
