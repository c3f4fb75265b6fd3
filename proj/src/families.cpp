#include "gradid/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace gradid {

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::Ut2Canonical:
      return "ut2-canonical";
    case Preset::Ut3A:
      return "ut3-A";
    case Preset::Ut3B:
      return "ut3-B";
  }
  return "?";
}

Preset parse_preset(std::string_view name) {
  if (name == "ut2-canonical") return Preset::Ut2Canonical;
  if (name == "ut3-A") return Preset::Ut3A;
  if (name == "ut3-B") return Preset::Ut3B;
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

namespace {

std::string step_label(unsigned var, unsigned r) {
  std::string s = "y" + std::to_string(var);
  if (r >= 2) s += "^(" + std::to_string(r) + ")";
  return s;
}

Polynomial yvar(const FieldPtr& F, unsigned i) { return Polynomial::var(F, Variable::y(i)); }

// Calls visit(v) for every v in [0, q)^len (or [1, q)^len) with sum(v) <= budget.
void for_each_exponent_vector(unsigned len, unsigned lo, unsigned q, unsigned budget,
                              const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> v(len, lo);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned used) {
    if (pos == len) {
      visit(v);
      return;
    }
    for (unsigned e = lo; e < q && used + e <= budget; ++e) {
      v[pos] = e;
      rec(pos + 1, used + e);
    }
  };
  if (len * lo <= budget) rec(0, 0);
}

unsigned sum(const std::vector<unsigned>& v) { return std::accumulate(v.begin(), v.end(), 0u); }

std::string prefix_label(std::span<const unsigned> r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "y" + std::to_string(i + 1);
    if (r[i] > 1) s += "^" + std::to_string(r[i]);
  }
  return s;
}

std::string join_labels(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!s.empty()) s += "*";
    s += p;
  }
  return s;
}

// Product of an optional word prefix with the given polynomial factors (nonempty overall).
Polynomial product(const FieldPtr& F, const Word& prefix, std::initializer_list<const Polynomial*> factors) {
  std::optional<Polynomial> acc;
  if (!prefix.empty()) acc = Polynomial::constant_word(F, prefix);
  for (const Polynomial* f : factors) {
    if (!f) continue;
    acc = acc ? *acc * *f : *f;
  }
  if (!acc) throw std::logic_error("empty product in family member");
  return *acc;
}

}  // namespace

unsigned OrderedQCommutator::degree(unsigned q) const {
  const unsigned s = std::accumulate(exponents.begin(), exponents.end(), 0u);
  return kind == Kind::Alternating ? s : q + s;
}

std::string OrderedQCommutator::label(unsigned q) const {
  if (kind == Kind::Alternating) {
    std::string s = "[y" + std::to_string(indices[0]) + "," + step_label(indices[1], exponents[1]);
    if (exponents[0] > 1) s += "," + step_label(indices[0], exponents[0] - 1);
    for (std::size_t i = 2; i < indices.size(); ++i) s += "," + step_label(indices[i], exponents[i]);
    return s + "]";
  }
  const std::string head = "y" + std::to_string(indices[0]) + "^" + std::to_string(q) + "-y" + std::to_string(indices[0]);
  if (indices.size() == 1) return "(" + head + ")";
  std::string s = "[" + head;
  for (std::size_t i = 1; i < indices.size(); ++i) s += "," + step_label(indices[i], exponents[i - 1]);
  return s + "]";
}

Polynomial OrderedQCommutator::build(const FieldPtr& F) const {
  std::vector<CommutatorStep> steps;
  if (kind == Kind::Alternating) {
    steps.push_back({yvar(F, indices[1]), exponents[1]});
    steps.push_back({yvar(F, indices[0]), exponents[0] - 1});
    for (std::size_t i = 2; i < indices.size(); ++i) steps.push_back({yvar(F, indices[i]), exponents[i]});
    return powered_commutator(yvar(F, indices[0]), steps);
  }
  const Polynomial y = yvar(F, indices[0]);
  const Polynomial head = y.pow(F->order()) - y;
  for (std::size_t i = 1; i < indices.size(); ++i) steps.push_back({yvar(F, indices[i]), exponents[i - 1]});
  return powered_commutator(head, steps);
}

std::vector<QCommutatorEntry> enumerate_ordered_q_commutators(const FieldPtr& F, unsigned m, unsigned d) {
  const unsigned q = F->order();
  std::vector<QCommutatorEntry> out;
  // Alternating kind: pick an index set (as a bitmask), j2 = its minimum, j1 any other member.
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<unsigned> set;
    for (unsigned i = 0; i < m; ++i) {
      if (mask & (1u << i)) set.push_back(i + 1);
    }
    if (set.size() < 2 || set.size() > d) continue;
    const unsigned j2 = set.front();
    for (unsigned j1 : set) {
      if (j1 == j2) continue;
      std::vector<unsigned> idx{j1, j2};
      for (unsigned j : set) {
        if (j != j1 && j != j2) idx.push_back(j);
      }
      for_each_exponent_vector(unsigned(idx.size()), 1, q, d, [&](const std::vector<unsigned>& s) {
        OrderedQCommutator c{OrderedQCommutator::Kind::Alternating, idx, s};
        out.push_back({c, c.build(F)});
      });
    }
  }
  // Frobenius-headed kind.
  if (q <= d) {
    for (unsigned l1 = 1; l1 <= m; ++l1) {
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (mask & (1u << (l1 - 1))) continue;
        std::vector<unsigned> idx{l1};
        for (unsigned i = 0; i < m; ++i) {
          if (mask & (1u << i)) idx.push_back(i + 1);
        }
        for_each_exponent_vector(unsigned(idx.size() - 1), 1, q, d - q, [&](const std::vector<unsigned>& t) {
          OrderedQCommutator c{OrderedQCommutator::Kind::FrobeniusHead, idx, t};
          out.push_back({c, c.build(F)});
        });
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [q](const QCommutatorEntry& a, const QCommutatorEntry& b) {
    return a.descriptor.degree(q) < b.descriptor.degree(q);
  });
  return out;
}

Word y_prefix_word(std::span<const unsigned> r) {
  Word w;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (unsigned e = 0; e < r[i]; ++e) w.push_back(Variable::y(unsigned(i + 1)));
  }
  return w;
}

Polynomial z_bracket(const FieldPtr& F, unsigned j, std::span<const unsigned> s) {
  std::vector<CommutatorStep> steps;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) steps.push_back({yvar(F, unsigned(i + 1)), s[i]});
  }
  return powered_commutator(Polynomial::var(F, Variable::z(j)), steps);
}

std::string z_bracket_label(unsigned j, std::span<const unsigned> s) {
  std::string inner;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) inner += "," + step_label(unsigned(i + 1), s[i]);
  }
  if (inner.empty()) return "z" + std::to_string(j);
  return "[z" + std::to_string(j) + inner + "]";
}

std::vector<std::size_t> SpanningFamily::count_by_degree() const {
  std::vector<std::size_t> c(max_deg + 1, 0);
  for (const auto& m : members) ++c[m.degree];
  return c;
}

SpanningFamily enumerate_spanning_family(Preset preset, const FieldPtr& F, unsigned m, unsigned n, unsigned d) {
  if (m + n == 0 || d == 0) throw std::invalid_argument("spanning family needs at least one variable and max_deg >= 1");
  const unsigned q = F->order();
  SpanningFamily fam{preset, F, m, n, d, {}};
  auto emit = [&](std::string label, Polynomial poly, unsigned deg) {
    fam.members.push_back(FamilyMember{std::move(label), std::move(poly), deg});
  };

  // Y-only part shared by ut3-A (theta1 = 0) and ut3-B (set a): prefix times an optional q-commutator.
  const auto qcomms = enumerate_ordered_q_commutators(F, m, d);
  auto emit_y_part = [&](bool with_qcomm) {
    for_each_exponent_vector(m, 0, q, d, [&](const std::vector<unsigned>& r) {
      const unsigned rs = sum(r);
      const Word prefix = y_prefix_word(r);
      if (rs >= 1) emit(prefix_label(r), Polynomial::constant_word(F, prefix), rs);
      if (!with_qcomm) return;
      for (const auto& qc : qcomms) {
        const unsigned deg = rs + qc.descriptor.degree(q);
        if (deg > d) continue;
        emit(join_labels({prefix_label(r), qc.descriptor.label(q)}), product(F, prefix, {&qc.poly}), deg);
      }
    });
  };

  switch (preset) {
    case Preset::Ut2Canonical: {
      emit_y_part(false);
      for_each_exponent_vector(m, 0, q, d, [&](const std::vector<unsigned>& r) {
        const unsigned rs = sum(r);
        if (rs + 1 > d) return;
        const Word prefix = y_prefix_word(r);
        for (unsigned j = 1; j <= n; ++j) {
          for_each_exponent_vector(m, 0, q, d - rs - 1, [&](const std::vector<unsigned>& s) {
            const Polynomial br = z_bracket(F, j, s);
            emit(join_labels({prefix_label(r), z_bracket_label(j, s)}), product(F, prefix, {&br}), rs + 1 + sum(s));
          });
        }
      });
      break;
    }
    case Preset::Ut3A: {
      emit_y_part(true);
      for_each_exponent_vector(m, 0, q, d, [&](const std::vector<unsigned>& r) {
        const unsigned rs = sum(r);
        if (rs + 1 > d) return;
        const Word prefix = y_prefix_word(r);
        for (unsigned j = 1; j <= n; ++j) {
          for_each_exponent_vector(m, 0, q, d - rs - 1, [&](const std::vector<unsigned>& s) {
            const unsigned base = rs + 1 + sum(s);
            const Polynomial br = z_bracket(F, j, s);
            const std::string bl = z_bracket_label(j, s);
            emit(join_labels({prefix_label(r), bl}), product(F, prefix, {&br}), base);
            for (const auto& qc : qcomms) {
              const unsigned deg = base + qc.descriptor.degree(q);
              if (deg > d) continue;
              emit(join_labels({prefix_label(r), bl, qc.descriptor.label(q)}), product(F, prefix, {&br, &qc.poly}),
                   deg);
            }
          });
        }
      });
      break;
    }
    case Preset::Ut3B: {
      emit_y_part(true);
      for_each_exponent_vector(m, 0, q, d, [&](const std::vector<unsigned>& r) {
        const unsigned rs = sum(r);
        if (rs + 1 > d) return;
        const Word prefix = y_prefix_word(r);
        for (unsigned j = 1; j <= n; ++j) {
          for_each_exponent_vector(m, 0, q, d - rs - 1, [&](const std::vector<unsigned>& s) {
            const unsigned base = rs + 1 + sum(s);
            const Polynomial b1 = z_bracket(F, j, s);
            const std::string l1 = z_bracket_label(j, s);
            emit(join_labels({prefix_label(r), l1}), product(F, prefix, {&b1}), base);
            if (base + 1 > d) return;
            for (unsigned k = 1; k <= n; ++k) {
              for_each_exponent_vector(m, 0, q, d - base - 1, [&](const std::vector<unsigned>& t) {
                const Polynomial b2 = z_bracket(F, k, t);
                emit(join_labels({prefix_label(r), l1, z_bracket_label(k, t)}), product(F, prefix, {&b1, &b2}),
                     base + 1 + sum(t));
              });
            }
          });
        }
      });
      break;
    }
  }
  std::stable_sort(fam.members.begin(), fam.members.end(),
                   [](const FamilyMember& a, const FamilyMember& b) { return a.degree < b.degree; });
  return fam;
}

}  // namespace gradid
