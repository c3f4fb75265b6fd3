#include "gradid/identity.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "gradid/errors.hpp"

namespace gradid {

UTMatrix evaluate(const Polynomial& f, const Assignment& values, const Grading& grading) {
  const Field& F = f.field();
  for (const Variable& v : f.variables()) {
    auto it = values.find(v);
    if (it == values.end()) throw std::invalid_argument("variable " + to_string(v) + " is not assigned");
    if (it->second.n != grading.size()) throw std::invalid_argument("assigned matrix has the wrong size");
    if (!is_homogeneous(grading, it->second, v.odd() ? 1 : 0)) {
      throw std::invalid_argument("value of " + to_string(v) + " is not " + (v.odd() ? "odd" : "even"));
    }
  }
  UTMatrix total = UTMatrix::zero(grading.size());
  for (const auto& [w, c] : f.terms()) {
    UTMatrix prod = values.at(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) prod = mul(F, prod, values.at(w[i]));
    total = add(F, total, scale(F, c, prod));
  }
  return total;
}

namespace {

using Raw = std::array<std::uint8_t, kMaxMatrixSize * kMaxMatrixSize>;

// Table-driven arithmetic on raw upper-triangular matrices.
class Kernel {
 public:
  Kernel(const Field& F, int n) : n_(n), q_(F.order()), p_(F.characteristic()), prime_(F.degree() == 1),
                                  add_(F.add_table()), mul_(F.mul_table()) {}

  void mul(const Raw& a, const Raw& b, Raw& c) const {
    for (int i = 0; i < n_; ++i) {
      for (int j = i; j < n_; ++j) {
        if (prime_) {
          unsigned s = 0;
          for (int k = i; k <= j; ++k) s += unsigned(a[i * 4 + k]) * b[k * 4 + j];
          c[i * 4 + j] = std::uint8_t(s % p_);
        } else {
          std::uint8_t s = 0;
          for (int k = i; k <= j; ++k) s = add_[s * q_ + mul_[a[i * 4 + k] * q_ + b[k * 4 + j]]];
          c[i * 4 + j] = s;
        }
      }
    }
  }

  void axpy(std::uint8_t coef, const Raw& a, Raw& acc) const {
    for (int i = 0; i < n_; ++i) {
      for (int j = i; j < n_; ++j) {
        acc[i * 4 + j] = add_[acc[i * 4 + j] * q_ + mul_[coef * q_ + a[i * 4 + j]]];
      }
    }
  }

  void accumulate(const Raw& a, Raw& acc) const {
    for (int i = 0; i < n_; ++i) {
      for (int j = i; j < n_; ++j) acc[i * 4 + j] = add_[acc[i * 4 + j] * q_ + a[i * 4 + j]];
    }
  }

 private:
  int n_;
  unsigned q_;
  unsigned p_;
  bool prime_;
  const std::uint8_t* add_;
  const std::uint8_t* mul_;
};

static_assert(kMaxMatrixSize == 4);

Raw to_raw(const UTMatrix& m) {
  Raw r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = m.entries[i].code;
  return r;
}

UTMatrix from_raw(const Raw& r, int n) {
  UTMatrix m = UTMatrix::zero(n);
  for (std::size_t i = 0; i < r.size(); ++i) m.entries[i] = FieldElement(r[i]);
  return m;
}

// The words of a polynomial stored as a trie. Each node caches the product of
// its prefix; a node only depends on the variables in its prefix, so when the
// odometer changes variables at level >= L only nodes of level >= L are redone.
class CompiledPolynomial {
 public:
  explicit CompiledPolynomial(const Polynomial& f) {
    const auto vs = f.variables();
    vars_.assign(vs.begin(), vs.end());
    for (const auto& [w, c] : f.terms()) {
      int parent = -1;
      int level = -1;
      for (const Variable& v : w) {
        const int vl = int(std::lower_bound(vars_.begin(), vars_.end(), v) - vars_.begin());
        level = std::max(level, vl);
        auto key = std::make_pair(parent, vl);
        auto it = index_.find(key);
        if (it == index_.end()) {
          nodes_.push_back(Node{parent, vl, level, 0});
          it = index_.emplace(key, int(nodes_.size()) - 1).first;
        }
        parent = it->second;
      }
      nodes_[std::size_t(parent)].coef = c.code;
    }
    // Parents are created before children, so creation order is topological.
    const int levels = int(vars_.size());
    recompute_.resize(std::size_t(levels));
    terminals_.resize(std::size_t(levels));
    for (int L = 0; L < levels; ++L) {
      for (int i = 0; i < int(nodes_.size()); ++i) {
        if (nodes_[std::size_t(i)].level >= L) recompute_[std::size_t(L)].push_back(i);
      }
    }
    for (int i = 0; i < int(nodes_.size()); ++i) {
      if (nodes_[std::size_t(i)].coef) terminals_[std::size_t(nodes_[std::size_t(i)].level)].push_back(i);
    }
  }

  const std::vector<Variable>& variables() const { return vars_; }

  struct Node {
    int parent;
    int var;
    int level;
    std::uint8_t coef;
  };

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<int>& recompute_from(int level) const { return recompute_[std::size_t(level)]; }
  const std::vector<int>& terminals_at(int level) const { return terminals_[std::size_t(level)]; }

 private:
  std::vector<Variable> vars_;
  std::vector<Node> nodes_;
  std::map<std::pair<int, int>, int> index_;
  std::vector<std::vector<int>> recompute_;
  std::vector<std::vector<int>> terminals_;
};

class Sweep {
 public:
  Sweep(const CompiledPolynomial& cp, const Kernel& k)
      : cp_(cp), k_(k), values_(cp.nodes().size()), level_sums_(cp.variables().size()),
        current_(cp.variables().size()) {}

  void set(int level, const Raw* m) { current_[std::size_t(level)] = m; }

  /// Recomputes everything depending on variables at level >= L; returns true iff the total vanishes.
  bool update(int L) {
    const auto& nodes = cp_.nodes();
    for (int i : cp_.recompute_from(L)) {
      const auto& nd = nodes[std::size_t(i)];
      const Raw& m = *current_[std::size_t(nd.var)];
      if (nd.parent < 0) {
        values_[std::size_t(i)] = m;
      } else {
        k_.mul(values_[std::size_t(nd.parent)], m, values_[std::size_t(i)]);
      }
    }
    for (std::size_t l = std::size_t(L); l < level_sums_.size(); ++l) {
      Raw& s = level_sums_[l];
      s.fill(0);
      for (int i : cp_.terminals_at(int(l))) k_.axpy(nodes[std::size_t(i)].coef, values_[std::size_t(i)], s);
    }
    total_.fill(0);
    for (const Raw& s : level_sums_) k_.accumulate(s, total_);
    return std::all_of(total_.begin(), total_.end(), [](std::uint8_t x) { return x == 0; });
  }

  const Raw& total() const { return total_; }

 private:
  const CompiledPolynomial& cp_;
  const Kernel& k_;
  std::vector<Raw> values_;
  std::vector<Raw> level_sums_;
  std::vector<const Raw*> current_;
  Raw total_{};
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::uint64_t assignment_space_size(const Polynomial& f, const Grading& grading) {
  std::uint64_t total = 1;
  const unsigned q = f.field().order();
  for (const Variable& v : f.variables()) {
    const auto dim = grading.basis(v.odd() ? 1 : 0).size();
    for (std::size_t i = 0; i < dim; ++i) total = saturating_mul(total, q);
  }
  return total;
}

IdentityVerdict check_identity(const Polynomial& f, const Grading& grading, const CheckOptions& options) {
  const Field& F = f.field();
  IdentityVerdict verdict;
  verdict.mode = options.mode;
  verdict.seed = options.seed;
  if (f.is_zero()) return verdict;

  const CompiledPolynomial cp(f);
  const Kernel kernel(F, grading.size());
  const auto& vars = cp.variables();
  const int levels = int(vars.size());

  if (options.mode == CheckMode::Random) {
    verdict.exact = false;
    std::mt19937_64 rng(options.seed);
    std::vector<Raw> current(vars.size());
    std::vector<std::vector<std::pair<int, int>>> bases;
    for (const auto& v : vars) bases.push_back(grading.basis(v.odd() ? 1 : 0));
    Sweep sweep(cp, kernel);
    for (int l = 0; l < levels; ++l) sweep.set(l, &current[std::size_t(l)]);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      for (int l = 0; l < levels; ++l) {
        Raw& m = current[std::size_t(l)];
        m.fill(0);
        for (const auto& [i, j] : bases[std::size_t(l)]) m[std::size_t(i * 4 + j)] = std::uint8_t(rng() % F.order());
      }
      ++verdict.evaluations;
      if (!sweep.update(0)) {
        verdict.identity = false;
        verdict.exact = true;
        Assignment a;
        for (int l = 0; l < levels; ++l) a.emplace(vars[std::size_t(l)], from_raw(current[std::size_t(l)], grading.size()));
        verdict.counterexample = std::move(a);
        verdict.counterexample_value = from_raw(sweep.total(), grading.size());
        return verdict;
      }
    }
    return verdict;
  }

  const std::uint64_t space = assignment_space_size(f, grading);
  if (space > options.exhaustive_cap) {
    throw CapExceeded("exhaustive check needs " + std::to_string(space) + " assignments (cap " +
                          std::to_string(options.exhaustive_cap) + "); use random mode",
                      "assignment tuples", double(space), double(options.exhaustive_cap));
  }

  // Component elements per level, as raw matrices.
  std::vector<std::vector<Raw>> comps;
  for (const auto& v : vars) {
    std::vector<Raw> raw;
    for (const auto& m : homogeneous_elements(F, grading, v.odd() ? 1 : 0, std::size_t(options.exhaustive_cap))) {
      raw.push_back(to_raw(m));
    }
    comps.push_back(std::move(raw));
  }
  std::vector<std::uint64_t> stride(vars.size(), 1);
  for (int l = levels - 2; l >= 0; --l) stride[std::size_t(l)] = stride[std::size_t(l) + 1] * comps[std::size_t(l) + 1].size();

  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, unsigned(comps[0].size())));

  auto run = [&](unsigned worker) {
    Sweep sweep(cp, kernel);
    std::vector<std::size_t> digit(vars.size(), 0);
    for (std::size_t d0 = worker; d0 < comps[0].size(); d0 += workers) {
      std::uint64_t index = d0 * stride[0];
      if (index > best.load(std::memory_order_relaxed)) return;
      std::fill(digit.begin(), digit.end(), 0);
      digit[0] = d0;
      for (int l = 0; l < levels; ++l) sweep.set(l, &comps[std::size_t(l)][digit[std::size_t(l)]]);
      int changed = 0;
      while (true) {
        if (!sweep.update(changed)) {
          std::uint64_t cur = best.load();
          while (index < cur && !best.compare_exchange_weak(cur, index)) {
          }
          return;
        }
        if ((index & 0xFFF) == 0 && index > best.load(std::memory_order_relaxed)) return;
        // Advance the odometer below level 0.
        int l = levels - 1;
        while (l > 0) {
          if (++digit[std::size_t(l)] < comps[std::size_t(l)].size()) break;
          digit[std::size_t(l)] = 0;
          sweep.set(l, &comps[std::size_t(l)][0]);
          --l;
        }
        if (l == 0) break;
        sweep.set(l, &comps[std::size_t(l)][digit[std::size_t(l)]]);
        changed = l;
        ++index;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  const std::uint64_t found = best.load();
  if (found == std::numeric_limits<std::uint64_t>::max()) {
    verdict.evaluations = space;
    return verdict;
  }
  verdict.identity = false;
  verdict.evaluations = found + 1;
  Assignment a;
  std::uint64_t rest = found;
  for (int l = 0; l < levels; ++l) {
    const std::uint64_t d = rest / stride[std::size_t(l)];
    rest %= stride[std::size_t(l)];
    a.emplace(vars[std::size_t(l)], from_raw(comps[std::size_t(l)][d], grading.size()));
  }
  verdict.counterexample_value = evaluate(f, a, grading);
  verdict.counterexample = std::move(a);
  return verdict;
}

std::vector<Generator> generator_set(Preset preset, const FieldPtr& F) {
  const unsigned q = F->order();
  auto y = [&](unsigned i) { return Polynomial::var(F, Variable::y(i)); };
  auto z = [&](unsigned i) { return Polynomial::var(F, Variable::z(i)); };
  const std::string qs = std::to_string(q);
  struct Omega {
    std::string label;
    Polynomial poly;
  };
  auto omega = [&](unsigned i) {
    const unsigned a = 2 * i - 1;
    const unsigned b = 2 * i;
    const std::string ya = "y" + std::to_string(a);
    const std::string yb = "y" + std::to_string(b);
    return std::vector<Omega>{{"[" + ya + "," + yb + "]", commutator(y(a), y(b))},
                              {"(" + yb + "^" + qs + "-" + yb + ")", y(b).pow(q) - y(b)}};
  };

  std::vector<Generator> gens;
  switch (preset) {
    case Preset::Ut2Canonical:
      gens.push_back({"z1*z2", z(1) * z(2)});
      gens.push_back({"[y1,y2]", commutator(y(1), y(2))});
      gens.push_back({"y1^" + qs + "-y1", y(1).pow(q) - y(1)});
      break;
    case Preset::Ut3A:
      gens.push_back({"z1*z2", z(1) * z(2)});
      for (const auto& w : omega(1)) gens.push_back({w.label + "*z1", w.poly * z(1)});
      for (const auto& w1 : omega(1)) {
        for (const auto& w2 : omega(2)) gens.push_back({w1.label + "*" + w2.label, w1.poly * w2.poly});
      }
      break;
    case Preset::Ut3B:
      gens.push_back({"z1*z2*z3", z(1) * z(2) * z(3)});
      for (const auto& w : omega(1)) gens.push_back({"z1*" + w.label, z(1) * w.poly});
      for (const auto& w : omega(1)) gens.push_back({w.label + "*z1", w.poly * z(1)});
      for (const auto& w1 : omega(1)) {
        for (const auto& w2 : omega(2)) gens.push_back({w1.label + "*" + w2.label, w1.poly * w2.poly});
      }
      break;
  }
  return gens;
}

unsigned witness_params_per_y(Preset preset) {
  switch (preset) {
    case Preset::Ut2Canonical:
      return 2;
    case Preset::Ut3A:
      return 4;
    case Preset::Ut3B:
      return 3;
  }
  return 0;
}

std::vector<UTMatrix> witness_y_values(Preset preset, const Field& F, std::span<const FieldElement> params) {
  const unsigned per = witness_params_per_y(preset);
  if (params.size() % per != 0) {
    throw std::invalid_argument("witness parameter tuple length must be a multiple of " + std::to_string(per));
  }
  const int n = preset == Preset::Ut2Canonical ? 2 : 3;
  std::vector<UTMatrix> out;
  for (std::size_t i = 0; i < params.size(); i += per) {
    const FieldElement a = params[i];
    const FieldElement b = params[i + 1];
    UTMatrix m = UTMatrix::zero(n);
    m.at(0, 0) = a;
    m.at(1, 1) = F.add(a, b);
    if (n == 3) m.at(2, 2) = F.add(F.add(a, b), params[i + 2]);
    if (preset == Preset::Ut3A) m.at(1, 2) = params[i + 3];
    out.push_back(m);
  }
  return out;
}

std::vector<UTMatrix> witness_z_options(Preset preset) {
  switch (preset) {
    case Preset::Ut2Canonical:
      return {UTMatrix::unit(2, 1, 2)};
    case Preset::Ut3A:
      return {UTMatrix::unit(3, 1, 2)};
    case Preset::Ut3B: {
      UTMatrix both = UTMatrix::unit(3, 1, 2);
      both.at(1, 2) = FieldElement{1};
      return {UTMatrix::unit(3, 1, 2), UTMatrix::unit(3, 2, 3), both};
    }
  }
  return {};
}

}  // namespace gradid
