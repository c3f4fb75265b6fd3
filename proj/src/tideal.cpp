#include "gradid/tideal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gradid {

IdealPresentation IdealPresentation::of_preset(Preset preset, const FieldPtr& field) {
  static const char* const names[] = {"I", "J", "Q"};
  return IdealPresentation{names[int(preset)], field, generator_set(preset, field)};
}

IdealPresentation IdealPresentation::without_z_product(Preset preset, const FieldPtr& field) {
  static const char* const names[] = {"I0", "M", "N"};
  auto gens = generator_set(preset, field);
  gens.erase(gens.begin());
  return IdealPresentation{names[int(preset)], field, std::move(gens)};
}

namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t IdealPresentation::hash() const {
  std::string text = field->name() + ";";
  for (unsigned c : field->modulus()) text += std::to_string(c) + ",";
  for (const auto& g : generators) text += ";" + to_string(g.poly);
  return fnv1a(text);
}

std::size_t IdealComponent::rank_up_to(unsigned l) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    if (window.degree_of_column(basis.pivot_of(i)) <= l) ++n;
  }
  return n;
}

Polynomial IdealComponent::row_polynomial(std::size_t i) const {
  return window.polynomial(basis.field_ptr(), basis.rows()[i]);
}

bool IdealComponent::operator==(const IdealComponent& o) const {
  return window == o.window && label == o.label && generator_hash == o.generator_hash && depth == o.depth &&
         saturated == o.saturated && basis == o.basis && provenance == o.provenance;
}

namespace {

struct Instance {
  Polynomial poly;
  std::string how;
};

// Class of an occurrence count under v -> lambda v with lambda ranging over F*.
unsigned reduced_exponent(unsigned a, unsigned q) { return a == 0 ? 0 : (a - 1) % (q - 1) + 1; }

std::string class_label(const std::vector<unsigned>& cls) {
  std::string s = "(";
  for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + std::to_string(cls[i]);
  return s + ")";
}

// Components of h(v -> sum_i lambda_i u_i) in which every u_i occurs, grouped by
// the reduced occurrence vector. Over F* these groups span the same space as
// all substitutions with nonzero lambdas.
std::map<std::vector<unsigned>, Polynomial> linearization_components(const Polynomial& h, Variable v,
                                                                    const std::vector<const Word*>& us) {
  const unsigned q = h.field().order();
  const std::size_t k = us.size();
  std::map<std::vector<unsigned>, Polynomial> out;
  std::vector<std::size_t> positions;
  std::vector<std::size_t> fill;
  std::vector<unsigned> alpha(k);
  for (const auto& [w, c] : h.terms()) {
    positions.clear();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == v) positions.push_back(i);
    }
    if (positions.size() < k) continue;
    fill.assign(positions.size(), 0);
    while (true) {
      std::fill(alpha.begin(), alpha.end(), 0);
      for (std::size_t f : fill) ++alpha[f];
      if (std::all_of(alpha.begin(), alpha.end(), [](unsigned a) { return a > 0; })) {
        Word out_word;
        std::size_t next = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (next < positions.size() && positions[next] == i) {
            const Word& u = *us[fill[next++]];
            out_word.insert(out_word.end(), u.begin(), u.end());
          } else {
            out_word.push_back(w[i]);
          }
        }
        std::vector<unsigned> cls(k);
        for (std::size_t i = 0; i < k; ++i) cls[i] = reduced_exponent(alpha[i], q);
        out.try_emplace(cls, h.field_ptr()).first->second.add_term(out_word, c);
      }
      std::size_t t = fill.size();
      while (t > 0) {
        --t;
        if (++fill[t] < k) break;
        fill[t] = 0;
        if (t == 0) goto done;
      }
      if (fill.empty()) break;
    }
  done:;
  }
  return out;
}

std::size_t min_length_containing(const Polynomial& h, Variable v, unsigned& max_occurrences, bool& some_without) {
  std::size_t best = SIZE_MAX;
  max_occurrences = 0;
  some_without = false;
  for (const auto& [w, c] : h.terms()) {
    const auto o = unsigned(std::count(w.begin(), w.end(), v));
    if (o == 0) {
      some_without = true;
      continue;
    }
    best = std::min(best, w.size());
    max_occurrences = std::max(max_occurrences, o);
  }
  return best;
}

// Seed instances of one generator: every variable replaced, one after the other,
// by a single window monomial or by the components of a sum of up to `depth`
// distinct monomials. Only results of degree <= d are kept.
std::vector<Instance> seed_instances(const Generator& g, const Window& window, unsigned depth,
                                     const std::vector<std::vector<Word>>& by_parity) {
  const unsigned d = window.max_deg();
  std::vector<Instance> current{{g.poly, ""}};
  for (Variable v : g.poly.variables()) {
    const auto& candidates = by_parity[v.odd() ? 1 : 0];
    std::vector<Instance> next;
    for (auto& inst : current) {
      unsigned occ = 0;
      bool some_without = false;
      const std::size_t L = min_length_containing(inst.poly, v, occ, some_without);
      const std::string sep = inst.how.empty() ? "" : ", ";
      if (occ == 0) {
        next.push_back(std::move(inst));
        continue;
      }
      if (some_without) {
        Polynomial rest(inst.poly.field_ptr());
        for (const auto& [w, c] : inst.poly.terms()) {
          if (std::find(w.begin(), w.end(), v) == w.end()) rest.add_term(w, c);
        }
        next.push_back({std::move(rest), inst.how + sep + to_string(v) + "->0"});
      }
      if (L > d) continue;
      const std::size_t kmax = std::min<std::size_t>(depth, occ);
      std::vector<const Word*> chosen;
      // Each chosen monomial occurs at least once in a word of length >= L.
      std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t length_budget) {
        if (!chosen.empty()) {
          for (auto& [cls, comp] : linearization_components(inst.poly, v, chosen)) {
            if (comp.is_zero() || comp.min_degree() > d) continue;
            std::string how = inst.how + sep + to_string(v) + "->";
            if (chosen.size() == 1) {
              how += to_string(*chosen[0]);
            } else {
              how += "{";
              for (std::size_t i = 0; i < chosen.size(); ++i) how += (i ? "," : "") + to_string(*chosen[i]);
              how += "}" + class_label(cls);
            }
            next.push_back({std::move(comp), std::move(how)});
          }
        }
        if (chosen.size() == kmax) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
          const std::size_t len = candidates[i].size();
          if (len > length_budget) break;  // candidates are sorted by length
          chosen.push_back(&candidates[i]);
          choose(i + 1, length_budget - len + 1);
          chosen.pop_back();
        }
      };
      // Total length of the chosen monomials is at most d - L + k.
      choose(0, d - L + 1);
    }
    current = std::move(next);
  }
  std::vector<Instance> out;
  for (auto& inst : current) {
    if (inst.poly.is_zero() || inst.poly.degree() > d) continue;
    inst.how = "gen " + g.label + (inst.how.empty() ? "" : " : " + inst.how);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

IdealComponent closure(const IdealPresentation& pres, const Window& window_in, const ClosureOptions& options) {
  const Window window(window_in.yvars(), window_in.zvars(), window_in.max_deg(), options.window_cap);
  const FieldPtr& F = pres.field;
  const unsigned d = window.max_deg();
  const std::size_t dim = window.dim();
  const std::size_t L = window.letters();

  std::vector<std::vector<Word>> by_parity(2);
  for (Word& w : window.words()) by_parity[std::size_t(parity(w))].push_back(std::move(w));

  std::vector<std::vector<Instance>> per_generator(pres.generators.size());
  auto work = [&](std::size_t i) {
    per_generator[i] = seed_instances(pres.generators[i], window, options.depth, by_parity);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, unsigned(pres.generators.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < pres.generators.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < pres.generators.size(); i += threads) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<Instance> seeds;
  for (auto& v : per_generator) {
    for (auto& inst : v) seeds.push_back(std::move(inst));
  }
  if (options.shuffle_seed != 0) {
    std::mt19937_64 rng(options.shuffle_seed);
    for (std::size_t i = seeds.size(); i > 1; --i) std::swap(seeds[i - 1], seeds[std::size_t(rng() % i)]);
  }

  // Column of x*w and w*x for every word w of length < d.
  std::vector<std::size_t> left(dim * L, SIZE_MAX), right(dim * L, SIZE_MAX);
  for (std::size_t c = 0; c < dim; ++c) {
    Word w = window.word(c);
    if (w.size() >= d) continue;
    for (std::size_t x = 0; x < L; ++x) {
      Word lw;
      lw.reserve(w.size() + 1);
      lw.push_back(window.letter(x));
      lw.insert(lw.end(), w.begin(), w.end());
      Word rw = w;
      rw.push_back(window.letter(x));
      left[c * L + x] = window.column(lw);
      right[c * L + x] = window.column(rw);
    }
  }

  Echelon ech(F, dim);
  std::map<std::size_t, std::string> how_by_pivot;
  std::deque<std::size_t> work_queue;
  std::uint64_t candidates = 0;
  bool saturated = true;

  auto offer = [&](Row v, const std::function<std::string()>& how) {
    ++candidates;
    if (auto r = ech.insert(std::move(v))) {
      how_by_pivot.emplace(ech.pivot_of(*r), how());
      work_queue.push_back(*r);
    }
  };

  for (const auto& s : seeds) {
    offer(window.vector(s.poly), [&] { return s.how; });
  }
  while (!work_queue.empty()) {
    if (candidates > options.max_candidates) {
      saturated = false;
      break;
    }
    const std::size_t r = work_queue.front();
    work_queue.pop_front();
    const std::size_t pivot = ech.pivot_of(r);
    if (window.degree_of_column(pivot) >= d) continue;
    const Row src = ech.rows()[r];
    const std::string lead = to_string(window.word(pivot));
    for (std::size_t x = 0; x < L; ++x) {
      for (int side = 0; side < 2; ++side) {
        const auto& table = side == 0 ? left : right;
        Row v(dim, 0);
        for (std::size_t c = 0; c < dim; ++c) {
          if (src[c]) v[table[c * L + x]] = src[c];
        }
        const std::string xs = to_string(window.letter(x));
        offer(std::move(v), [&] { return side == 0 ? xs + " * (row led by " + lead + ")" : "(row led by " + lead + ") * " + xs; });
      }
    }
  }

  ech.to_rref();
  std::vector<std::string> provenance;
  for (std::size_t i = 0; i < ech.rank(); ++i) provenance.push_back(how_by_pivot.at(ech.pivot_of(i)));
  return IdealComponent{window, pres.label, pres.hash(), options.depth, saturated, std::move(ech),
                        std::move(provenance)};
}

bool member(const Polynomial& f, const IdealComponent& comp) {
  if (!comp.window.contains(f)) throw std::invalid_argument("polynomial lies outside the window");
  return comp.basis.in_span(comp.window.vector(f));
}

NormalForm normal_form(const Polynomial& f, const SpanningFamily& family, const IdealComponent& comp) {
  const Window& W = comp.window;
  if (!W.contains(f)) throw std::invalid_argument("polynomial lies outside the window");
  const std::size_t dim = W.dim();
  const std::size_t s = family.size();
  // Rows [s mod I | e_i]; solving f = sum c_i s_i mod I by tracking the tags.
  Echelon ech(family.field, dim + s, dim);
  for (std::size_t i = 0; i < s; ++i) {
    if (!W.contains(family.members[i].poly)) throw std::invalid_argument("family member outside the window");
    Row v = W.vector(family.members[i].poly);
    comp.basis.reduce(v);
    v.resize(dim + s, 0);
    v[dim + i] = 1;
    ech.insert(std::move(v));
  }
  Row v = W.vector(f);
  comp.basis.reduce(v);
  v.resize(dim + s, 0);
  NormalForm nf;
  if (ech.reduce(v)) {
    nf.residual = true;
    return nf;
  }
  // v = f - sum over tags; the tag part holds -c_i.
  const Field& F = *family.field;
  nf.coefficients.resize(s);
  Polynomial rest = f;
  for (std::size_t i = 0; i < s; ++i) {
    nf.coefficients[i] = F.neg(FieldElement{v[dim + i]});
    if (!nf.coefficients[i].is_zero()) rest -= family.members[i].poly.scaled(nf.coefficients[i]);
  }
  nf.ideal_part = std::move(rest);
  return nf;
}

CacheKey cache_key(const IdealPresentation& pres, const Window& window, unsigned depth) {
  std::string label;
  for (char c : pres.label) label += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(pres.hash()));
  const Field& F = *pres.field;
  return CacheKey{label + "-p" + std::to_string(F.characteristic()) + "k" + std::to_string(F.degree()) + "-m" +
                  std::to_string(window.yvars()) + "n" + std::to_string(window.zvars()) + "d" +
                  std::to_string(window.max_deg()) + "-s" + std::to_string(depth) + "-" + hash + "-v" +
                  std::to_string(kClosureCodeVersion)};
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("GRADID_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "gradid";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "gradid";
  return std::filesystem::temp_directory_path() / "gradid-cache";
}

namespace {

constexpr const char* kCacheMagic = "gradid-closure-cache";

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

void save_component(const IdealComponent& comp, const Field& field, const std::filesystem::path& file) {
  std::ostringstream out;
  out << kCacheMagic << " 1\n";
  out << "code_version " << kClosureCodeVersion << "\n";
  out << "field " << field.characteristic() << " " << field.degree() << " " << field.order() << "\n";
  out << "modulus";
  for (unsigned c : field.modulus()) out << " " << c;
  out << "\n";
  out << "window " << comp.window.yvars() << " " << comp.window.zvars() << " " << comp.window.max_deg() << "\n";
  out << "label " << comp.label << "\n";
  out << "generator_hash " << hex64(comp.generator_hash) << "\n";
  out << "depth " << comp.depth << "\n";
  out << "saturated " << (comp.saturated ? 1 : 0) << "\n";
  out << "dim_w " << comp.window.dim() << "\n";
  out << "rank " << comp.rank() << "\n";
  for (std::size_t i = 0; i < comp.rank(); ++i) {
    out << "row";
    const Row& r = comp.basis.rows()[i];
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c]) out << " " << c << ":" << unsigned(r[c]);
    }
    out << "\nfrom " << comp.provenance[i] << "\n";
  }
  out << "end\n";
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write cache file " + tmp);
    f << out.str();
  }
  std::filesystem::rename(tmp, file);
}

std::optional<IdealComponent> load_component(const std::filesystem::path& file, const IdealPresentation& pres,
                                             const Window& window, unsigned depth) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  const Field& F = *pres.field;
  auto expect = [&](const std::string& key, const std::string& value) {
    std::string line;
    if (!std::getline(in, line)) return false;
    return line == key + " " + value;
  };
  std::string modulus;
  for (unsigned c : F.modulus()) modulus += (modulus.empty() ? "" : " ") + std::to_string(c);
  if (!expect(kCacheMagic, "1") || !expect("code_version", std::to_string(kClosureCodeVersion)) ||
      !expect("field", std::to_string(F.characteristic()) + " " + std::to_string(F.degree()) + " " +
                           std::to_string(F.order())) ||
      !expect("modulus", modulus) ||
      !expect("window", std::to_string(window.yvars()) + " " + std::to_string(window.zvars()) + " " +
                            std::to_string(window.max_deg())) ||
      !expect("label", pres.label) || !expect("generator_hash", hex64(pres.hash())) ||
      !expect("depth", std::to_string(depth))) {
    return std::nullopt;
  }
  std::string line, key;
  bool saturated = false;
  std::size_t dim = 0, rank = 0;
  {
    std::getline(in, line);
    std::istringstream s(line);
    int sat = 0;
    if (!(s >> key >> sat) || key != "saturated") return std::nullopt;
    saturated = sat != 0;
  }
  {
    std::getline(in, line);
    std::istringstream s(line);
    if (!(s >> key >> dim) || key != "dim_w" || dim != window.dim()) return std::nullopt;
  }
  {
    std::getline(in, line);
    std::istringstream s(line);
    if (!(s >> key >> rank) || key != "rank") return std::nullopt;
  }
  Echelon ech(pres.field, dim);
  std::vector<std::string> provenance;
  for (std::size_t i = 0; i < rank; ++i) {
    if (!std::getline(in, line) || !line.starts_with("row")) return std::nullopt;
    Row r(dim, 0);
    std::istringstream s(line.substr(3));
    std::string tok;
    while (s >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) return std::nullopt;
      const std::size_t c = std::stoul(tok.substr(0, colon));
      const unsigned x = unsigned(std::stoul(tok.substr(colon + 1)));
      if (c >= dim || x == 0 || x >= F.order()) return std::nullopt;
      r[c] = std::uint8_t(x);
    }
    if (!std::getline(in, line) || !line.starts_with("from ")) return std::nullopt;
    provenance.push_back(line.substr(5));
    if (!ech.insert(std::move(r))) return std::nullopt;
  }
  if (!std::getline(in, line) || line != "end") return std::nullopt;
  IdealComponent comp{Window(window.yvars(), window.zvars(), window.max_deg(), std::max(dim, kDefaultWindowCap)),
                      pres.label, pres.hash(), depth, saturated, std::move(ech), std::move(provenance)};
  // Stored rows are already in reduced echelon form; re-reducing must not change them.
  Echelon check = comp.basis;
  check.to_rref();
  if (!(check == comp.basis)) return std::nullopt;
  return comp;
}

IdealComponent cached_closure(const IdealPresentation& pres, const Window& window, const ClosureOptions& options,
                              const std::optional<std::filesystem::path>& cache_dir, bool* hit) {
  if (hit) *hit = false;
  // Shuffled runs are for testing order independence and bypass the cache.
  if (!cache_dir || options.shuffle_seed != 0) return closure(pres, window, options);
  const auto file = *cache_dir / (cache_key(pres, window, options.depth).text + ".txt");
  if (auto comp = load_component(file, pres, window, options.depth)) {
    if (hit) *hit = true;
    return std::move(*comp);
  }
  IdealComponent comp = closure(pres, window, options);
  if (comp.saturated) {
    try {
      save_component(comp, *pres.field, file);
    } catch (const std::exception&) {
      // An unwritable cache only costs time.
    }
  }
  return comp;
}

}  // namespace gradid
