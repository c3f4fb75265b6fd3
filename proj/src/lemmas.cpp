#include <random>

#include "gradid/tideal.hpp"

namespace gradid {

namespace {

Polynomial random_polynomial(const FieldPtr& F, std::mt19937_64& rng, unsigned max_terms, unsigned max_len) {
  static const Variable letters[] = {Variable::y(1), Variable::y(2), Variable::z(1)};
  Polynomial f(F);
  const unsigned terms = 1 + unsigned(rng() % max_terms);
  for (unsigned t = 0; t < terms; ++t) {
    Word w(1 + rng() % max_len);
    for (auto& v : w) v = letters[rng() % 3];
    f.add_term(w, FieldElement{std::uint8_t(1 + rng() % (F->order() - 1))});
  }
  return f;
}

unsigned binomial_mod(unsigned n, unsigned k, unsigned p) {
  unsigned long long c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return unsigned(c % p);
}

Polynomial bracket_power(const Polynomial& u, const Polynomial& w, unsigned r) {
  const CommutatorStep step{w, r};
  return powered_commutator(u, std::span(&step, 1));
}

LemmaResult membership_case(const std::string& name, const Polynomial& f, const IdealPresentation& pres,
                            unsigned m, unsigned n, unsigned d) {
  LemmaResult res{name, false, 1, ""};
  const IdealComponent comp = closure(pres, Window(m, n, d));
  res.passed = member(f, comp);
  res.detail = pres.label + " over " + pres.field->name() + ", window (" + std::to_string(m) + "," +
               std::to_string(n) + "," + std::to_string(d) + "), rank " + std::to_string(comp.rank());
  return res;
}

}  // namespace

std::vector<LemmaResult> lemma_suite(const LemmaSuiteOptions& options) {
  std::vector<LemmaResult> out;
  std::mt19937_64 rng(options.seed);

  {
    LemmaResult res{"commutator product rule [uv,w^(r)], r <= 4", true, 0, ""};
    for (unsigned q : {2u, 3u, 5u}) {
      const FieldPtr F = Field::of_order(q);
      for (unsigned t = 0; t < options.random_cases && res.passed; ++t) {
        const Polynomial u = random_polynomial(F, rng, 2, 2);
        const Polynomial v = random_polynomial(F, rng, 2, 2);
        const Polynomial w = random_polynomial(F, rng, 2, 2);
        for (unsigned r = 0; r <= 4; ++r) {
          Polynomial rhs(F);
          for (unsigned i = 0; i <= r; ++i) {
            const unsigned b = binomial_mod(r, i, F->characteristic());
            if (b) rhs += (bracket_power(u, w, i) * bracket_power(v, w, r - i)).scaled(F->from_int(b));
          }
          ++res.cases;
          if (!(bracket_power(u * v, w, r) == rhs)) {
            res.passed = false;
            res.detail = "fails over " + F->name() + " for u = " + to_string(u) + ", v = " + to_string(v) +
                         ", w = " + to_string(w) + ", r = " + std::to_string(r);
            break;
          }
        }
      }
    }
    out.push_back(res);
  }

  {
    LemmaResult res{"Frobenius commutator [u,v^(q)] = [u,v^q]", true, 0, ""};
    for (unsigned q : {2u, 3u, 4u}) {
      const FieldPtr F = Field::of_order(q);
      for (unsigned t = 0; t < options.random_cases; ++t) {
        const Polynomial u = random_polynomial(F, rng, 2, 2);
        const Polynomial v = random_polynomial(F, rng, 2, 2);
        ++res.cases;
        if (!(bracket_power(u, v, q) == commutator(u, v.pow(q)))) {
          res.passed = false;
          res.detail = "fails over " + F->name() + " for u = " + to_string(u) + ", v = " + to_string(v);
          break;
        }
      }
    }
    out.push_back(res);
  }

  {
    LemmaResult res{"[x1x2,x3] = x1[x2,x3] + [x1,x3]x2", true, 0, ""};
    const FieldPtr F = Field::of_order(3);
    for (unsigned t = 0; t < options.random_cases; ++t) {
      const Polynomial a = random_polynomial(F, rng, 2, 2);
      const Polynomial b = random_polynomial(F, rng, 2, 2);
      const Polynomial c = random_polynomial(F, rng, 2, 2);
      ++res.cases;
      if (!(commutator(a * b, c) == a * commutator(b, c) + commutator(a, c) * b)) {
        res.passed = false;
        res.detail = "fails for " + to_string(a) + ", " + to_string(b) + ", " + to_string(c);
        break;
      }
    }
    out.push_back(res);
  }

  auto y = [](const FieldPtr& F, unsigned i) { return Polynomial::var(F, Variable::y(i)); };
  auto z = [](const FieldPtr& F, unsigned i) { return Polynomial::var(F, Variable::z(i)); };

  for (unsigned q : {2u, 3u}) {
    const FieldPtr F = Field::of_order(q);
    IdealPresentation zz{"Z2", F, {{"z1*z2", z(F, 1) * z(F, 2)}}};
    out.push_back(membership_case("z1*f*z2 in <z1z2>, f = y1 (" + F->name() + ")", z(F, 1) * y(F, 1) * z(F, 2),
                                  zz, 1, 2, 3));
  }

  for (unsigned q : {2u, 3u}) {
    const FieldPtr F = Field::of_order(q);
    const Polynomial f = bracket_power(z(F, 1), y(F, 1), q) - commutator(z(F, 1), y(F, 1));
    out.push_back(membership_case("[z1,y1^(q)] = [z1,y1] mod I (" + F->name() + ")", f,
                                  IdealPresentation::of_preset(Preset::Ut2Canonical, F), 1, 1, q + 1));
  }

  {
    const FieldPtr F = Field::of_order(2);
    const Polynomial f = bracket_power(z(F, 1), y(F, 1), 2) - commutator(z(F, 1), y(F, 1)) -
                         z(F, 1) * (y(F, 1).pow(2) - y(F, 1));
    out.push_back(membership_case("[z,y^(2)] = [z,y] + z(y^2-y) mod M (GF(2))", f,
                                  IdealPresentation::without_z_product(Preset::Ut3A, F), 1, 1, 3));
  }

  for (unsigned q : {2u, 3u}) {
    const FieldPtr F = Field::of_order(q);
    const Polynomial y1 = y(F, 1), y2 = y(F, 2), z1 = z(F, 1);
    const Polynomial lhs = commutator(commutator(z1, y2), y1) - commutator(commutator(z1, y1), y2);
    out.push_back(membership_case("[z1,y2,y1] = [z1,y1,y2] + z1[y2,y1] mod M (" + F->name() + ")",
                                  lhs - z1 * commutator(y2, y1),
                                  IdealPresentation::without_z_product(Preset::Ut3A, F), 2, 1, 3));
  }

  {
    const FieldPtr F = Field::of_order(2);
    const Polynomial f = bracket_power(z(F, 1), y(F, 1), 3) - commutator(z(F, 1), y(F, 1));
    out.push_back(membership_case("[z1,y1^(3)] = [z1,y1] mod N (GF(2))", f,
                                  IdealPresentation::without_z_product(Preset::Ut3B, F), 1, 1, 4));
  }

  {
    const FieldPtr F = Field::of_order(2);
    const Polynomial zy = commutator(z(F, 1), y(F, 1));
    const Polynomial f = commutator(commutator(zy, y(F, 1)), z(F, 2)) - commutator(zy, z(F, 2));
    out.push_back(membership_case("[z1,y1,y1,z2] = [z1,y1,z2] mod N (GF(2))", f,
                                  IdealPresentation::without_z_product(Preset::Ut3B, F), 1, 2, 4));
  }

  return out;
}

}  // namespace gradid
