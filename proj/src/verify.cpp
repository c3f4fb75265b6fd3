#include "gradid/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"

#include "gradid/linalg.hpp"

namespace gradid {

std::vector<InclusionVerdict> verify_inclusion(const VerificationConfig& config) {
  const Grading grading = Grading::preset(config.preset);
  std::vector<InclusionVerdict> out;
  for (const auto& g : generator_set(config.preset, config.field)) {
    CheckOptions opts;
    opts.exhaustive_cap = config.exhaustive_cap;
    opts.samples = config.samples;
    opts.seed = config.seed;
    opts.threads = config.threads;
    opts.mode = assignment_space_size(g.poly, grading) <= config.exhaustive_cap ? CheckMode::Exhaustive
                                                                                  : CheckMode::Random;
    out.push_back({g.label, check_identity(g.poly, grading, opts)});
  }
  return out;
}

SpanningCertificate verify_spanning(const SpanningFamily& family, const IdealComponent& comp) {
  SpanningCertificate cert;
  cert.dim_w = comp.window.dim();
  cert.dim_ideal = comp.rank();
  cert.family_size = family.size();
  Echelon stacked = comp.basis;
  for (const auto& s : family.members) stacked.insert(comp.window.vector(s.poly));
  cert.stacked_rank = stacked.rank();
  cert.spans = cert.stacked_rank == cert.dim_w;
  return cert;
}

namespace {

// Evaluates every window word under one assignment and appends the entry rows
// of the given polynomials to the echelon.
class WordEvaluator {
 public:
  WordEvaluator(const Window& W, const std::vector<Polynomial>& polys) : W_(W) {
    const std::size_t dim = W.dim();
    prefix_.assign(dim, SIZE_MAX);
    last_.assign(dim, 0);
    for (std::size_t c = 0; c < dim; ++c) {
      Word w = W.word(c);
      last_[c] = W.letter_index(w.back());
      w.pop_back();
      if (!w.empty()) prefix_[c] = W.column(w);
    }
    for (const auto& p : polys) {
      std::vector<std::pair<std::size_t, FieldElement>> t;
      for (const auto& [w, c] : p.terms()) {
        if (!W.contains(w)) throw std::invalid_argument("polynomial " + to_string(p) + " lies outside the window");
        t.emplace_back(W.column(w), c);
      }
      terms_.push_back(std::move(t));
    }
  }

  /// Adds the rows of one assignment (one per matrix entry); returns the rank.
  std::size_t add(const Field& F, const std::vector<UTMatrix>& letter_values, Echelon& ech) {
    const std::size_t dim = W_.dim();
    values_.resize(dim);
    // Columns run from long words to short ones, so walk them backwards.
    for (std::size_t c = dim; c-- > 0;) {
      const UTMatrix& x = letter_values[last_[c]];
      values_[c] = prefix_[c] == SIZE_MAX ? x : mul(F, values_[prefix_[c]], x);
    }
    const int n = letter_values.front().n;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Row row(terms_.size(), 0);
        bool any = false;
        for (std::size_t s = 0; s < terms_.size(); ++s) {
          FieldElement acc{};
          for (const auto& [col, coef] : terms_[s]) acc = F.add(acc, F.mul(coef, values_[col].at(i, j)));
          row[s] = acc.code;
          any = any || acc.code;
        }
        if (any) ech.insert(std::move(row));
      }
    }
    return ech.rank();
  }

 private:
  const Window& W_;
  std::vector<std::size_t> prefix_;
  std::vector<std::size_t> last_;
  std::vector<std::vector<std::pair<std::size_t, FieldElement>>> terms_;
  std::vector<UTMatrix> values_;
};

UTMatrix random_homogeneous(const Field& F, const Grading& grading, int g, std::mt19937_64& rng) {
  UTMatrix m = UTMatrix::zero(grading.size());
  for (const auto& [i, j] : grading.basis(g)) m.at(i, j) = FieldElement{std::uint8_t(rng() % F.order())};
  return m;
}

}  // namespace

IndependenceCertificate evaluation_rank(const std::vector<Polynomial>& polys, Preset preset, const FieldPtr& field,
                                        unsigned yvars, unsigned zvars, unsigned max_deg, std::uint64_t seed,
                                        unsigned topup_budget, unsigned witness_samples) {
  const Field& F = *field;
  const Window W(yvars, zvars, max_deg);
  const Grading grading = Grading::preset(preset);
  WordEvaluator eval(W, polys);
  Echelon ech(field, polys.size());
  IndependenceCertificate cert;
  cert.family_size = polys.size();
  const std::size_t target = polys.size();

  const unsigned per = witness_params_per_y(preset);
  const std::size_t nparams = std::size_t(per) * yvars;
  std::vector<UTMatrix> zopts{UTMatrix::zero(grading.size())};
  for (const auto& z : witness_z_options(preset)) zopts.push_back(z);
  std::vector<UTMatrix> letters(W.letters(), UTMatrix::zero(grading.size()));

  auto run_params = [&](const std::vector<FieldElement>& params) {
    const auto ys = witness_y_values(preset, F, params);
    for (unsigned i = 0; i < yvars; ++i) letters[i] = ys[i];
    // Every choice of z-witnesses, first z slowest.
    std::vector<std::size_t> zi(zvars, 0);
    while (true) {
      for (unsigned k = 0; k < zvars; ++k) letters[yvars + k] = zopts[zi[k]];
      ++cert.witness_assignments;
      if (eval.add(F, letters, ech) == target) return true;
      std::size_t t = zvars;
      while (t > 0) {
        --t;
        if (++zi[t] < zopts.size()) break;
        zi[t] = 0;
        if (t == 0) return false;
      }
      if (zvars == 0) return false;
    }
  };

  const double space = std::pow(double(F.order()), double(nparams));
  bool full = target == 0;
  if (!full && F.order() <= 3 && space <= 1e6) {
    cert.witness_parameters_exhaustive = true;
    std::vector<unsigned> digits(nparams, 0);
    std::vector<FieldElement> params(nparams);
    while (!full) {
      for (std::size_t i = 0; i < nparams; ++i) params[i] = FieldElement{std::uint8_t(digits[i])};
      full = run_params(params);
      std::size_t t = nparams;
      bool done = true;
      while (t > 0) {
        --t;
        if (++digits[t] < F.order()) {
          done = false;
          break;
        }
        digits[t] = 0;
      }
      if (done) break;
    }
  } else if (!full) {
    std::mt19937_64 rng(seed);
    std::vector<FieldElement> params(nparams);
    for (unsigned s = 0; s < witness_samples && !full; ++s) {
      for (auto& p : params) p = FieldElement{std::uint8_t(rng() % F.order())};
      full = run_params(params);
    }
  }
  cert.witness_rank = ech.rank();
  cert.witnesses_sufficient = cert.witness_rank == target;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (unsigned t = 0; t < topup_budget && ech.rank() < target; ++t) {
    for (std::size_t i = 0; i < W.letters(); ++i) {
      letters[i] = random_homogeneous(F, grading, W.letter(i).odd() ? 1 : 0, rng);
    }
    ++cert.random_assignments;
    eval.add(F, letters, ech);
  }
  cert.rank = ech.rank();
  cert.independent = cert.rank == target;
  return cert;
}

IndependenceCertificate verify_independence(const SpanningFamily& family, const VerificationConfig& config) {
  std::vector<Polynomial> polys;
  for (const auto& s : family.members) polys.push_back(s.poly);
  return evaluation_rank(polys, config.preset, config.field, config.yvars, config.zvars, config.max_deg, config.seed,
                         config.topup_budget, config.witness_samples);
}

VerificationReport verify_basis(const VerificationConfig& config) {
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a) { return std::chrono::duration<double>(clock::now() - a).count(); };
  VerificationReport rep;
  rep.config = config;

  auto t0 = clock::now();
  if (config.check_inclusion) {
    rep.inclusion = verify_inclusion(config);
    for (const auto& v : rep.inclusion) rep.inclusion_ok = rep.inclusion_ok && v.verdict.identity;
    if (config.record_timings) rep.seconds_inclusion = seconds(t0);
  }

  t0 = clock::now();
  const Window W(config.yvars, config.zvars, config.max_deg, config.window_cap);
  const IdealPresentation pres = IdealPresentation::of_preset(config.preset, config.field);
  ClosureOptions copts;
  copts.depth = config.schedule_depth;
  copts.threads = config.threads;
  copts.window_cap = config.window_cap;
  rep.cache_key = cache_key(pres, W, config.schedule_depth).text;
  const IdealComponent comp = cached_closure(pres, W, copts, config.cache_dir);
  rep.saturated = comp.saturated;
  const SpanningFamily family =
      enumerate_spanning_family(config.preset, config.field, config.yvars, config.zvars, config.max_deg);
  rep.spanning = verify_spanning(family, comp);
  if (config.record_timings) rep.seconds_closure = seconds(t0);

  t0 = clock::now();
  rep.independence = verify_independence(family, config);
  if (config.record_timings) rep.seconds_independence = seconds(t0);

  const auto counts = family.count_by_degree();
  rep.degrees_consistent = true;
  std::size_t cumulative = 0;
  for (unsigned l = 1; l <= config.max_deg; ++l) {
    cumulative += counts[l];
    DegreeRow row{l, W.dim_up_to(l), comp.rank_up_to(l), cumulative, 0};
    row.quotient = row.dim_w - row.dim_ideal;
    rep.degrees_consistent = rep.degrees_consistent && row.quotient == row.family;
    rep.by_degree.push_back(row);
  }
  rep.rank_bound_ok = rep.independence.rank <= rep.spanning.dim_w - rep.spanning.dim_ideal;
  rep.pinch = rep.independence.rank == family.size() && rep.spanning.dim_w == rep.spanning.dim_ideal + family.size() &&
              rep.spanning.spans;
  return rep;
}

namespace {

using ojson = nlohmann::ordered_json;

std::string mode_name(CheckMode m) { return m == CheckMode::Exhaustive ? "exhaustive" : "random"; }

ojson report_json(const VerificationReport& r) {
  const VerificationConfig& c = r.config;
  const Field& F = *c.field;
  ojson j;
  j["schema"] = kReportSchema;
  ojson cfg;
  cfg["preset"] = preset_name(c.preset);
  cfg["field"] = F.name();
  cfg["characteristic"] = F.characteristic();
  cfg["extension_degree"] = F.degree();
  cfg["modulus"] = F.modulus();
  cfg["yvars"] = c.yvars;
  cfg["zvars"] = c.zvars;
  cfg["max_deg"] = c.max_deg;
  cfg["schedule_depth"] = c.schedule_depth;
  cfg["seed"] = c.seed;
  cfg["samples"] = c.samples;
  cfg["exhaustive_cap"] = c.exhaustive_cap;
  cfg["topup_budget"] = c.topup_budget;
  j["config"] = cfg;

  ojson inc = ojson::array();
  for (const auto& v : r.inclusion) {
    ojson e;
    e["generator"] = v.generator;
    e["verdict"] = v.verdict.identity ? "identity" : "counterexample";
    e["mode"] = mode_name(v.verdict.mode);
    e["exact"] = v.verdict.exact;
    e["evaluations"] = v.verdict.evaluations;
    if (v.verdict.mode == CheckMode::Random) e["seed"] = v.verdict.seed;
    if (v.verdict.counterexample) {
      ojson a;
      for (const auto& [var, m] : *v.verdict.counterexample) a[to_string(var)] = to_string(F, m);
      e["counterexample"] = a;
      e["value"] = to_string(F, *v.verdict.counterexample_value);
    }
    inc.push_back(e);
  }
  j["inclusion"] = inc;

  ojson sp;
  sp["dim_w"] = r.spanning.dim_w;
  sp["dim_ideal"] = r.spanning.dim_ideal;
  sp["family_size"] = r.spanning.family_size;
  sp["stacked_rank"] = r.spanning.stacked_rank;
  sp["spans"] = r.spanning.spans;
  sp["ideal_saturated"] = r.saturated;
  sp["cache_key"] = r.cache_key;
  j["spanning"] = sp;

  ojson ind;
  ind["rank"] = r.independence.rank;
  ind["witness_rank"] = r.independence.witness_rank;
  ind["witnesses_sufficient"] = r.independence.witnesses_sufficient;
  ind["witness_parameters_exhaustive"] = r.independence.witness_parameters_exhaustive;
  ind["witness_assignments"] = r.independence.witness_assignments;
  ind["random_assignments"] = r.independence.random_assignments;
  ind["independent"] = r.independence.independent;
  j["independence"] = ind;

  ojson deg = ojson::array();
  for (const auto& d : r.by_degree) {
    ojson e;
    e["degree"] = d.degree;
    e["dim_w"] = d.dim_w;
    e["dim_ideal"] = d.dim_ideal;
    e["quotient"] = d.quotient;
    e["family"] = d.family;
    deg.push_back(e);
  }
  j["by_degree"] = deg;

  ojson v;
  v["inclusion"] = r.config.check_inclusion ? ojson(r.inclusion_ok) : ojson("skipped");
  v["degrees_consistent"] = r.degrees_consistent;
  v["rank_bound"] = r.rank_bound_ok;
  v["pinch"] = r.pinch;
  j["verdict"] = v;

  if (r.seconds_inclusion || r.seconds_closure || r.seconds_independence) {
    ojson t;
    if (r.seconds_inclusion) t["inclusion"] = *r.seconds_inclusion;
    if (r.seconds_closure) t["closure"] = *r.seconds_closure;
    if (r.seconds_independence) t["independence"] = *r.seconds_independence;
    j["timings_seconds"] = t;
  }
  return j;
}

std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(const ojson& v, int indent, std::ostringstream& out) {
  const std::string pad(std::size_t(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const ojson& x = it.value();
    if (x.is_object()) {
      out << pad << it.key() << ":\n";
      render(x, indent + 2, out);
    } else if (x.is_array() && !x.empty() && x.front().is_object()) {
      out << pad << it.key() << ":\n";
      for (const auto& item : x) {
        out << pad << "  -\n";
        render(item, indent + 4, out);
      }
    } else if (x.is_array()) {
      out << pad << it.key() << ": [";
      for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << scalar_text(x[i]);
      out << "]\n";
    } else {
      out << pad << it.key() << ": " << scalar_text(x) << "\n";
    }
  }
}

}  // namespace

std::string report_to_json(const VerificationReport& report) { return report_json(report).dump(2) + "\n"; }

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  render(report_json(report), 0, out);
  return out.str();
}

}  // namespace gradid
