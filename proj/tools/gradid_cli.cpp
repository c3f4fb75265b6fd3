// gradid: command line front end.
//
// Exit codes: 0 success (identity, pinch true, reduction found), 1 negative
// verdict (counterexample, pinch false, residual), 2 usage or input error,
// 3 a size cap was exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gradid/errors.hpp"
#include "gradid/parser.hpp"
#include "gradid/verify.hpp"

using namespace gradid;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldArgs {
  unsigned q = 0;
  unsigned p = 0;
  unsigned k = 1;
  unsigned max_field = kDefaultMaxFieldSize;

  void add(CLI::App* cmd) {
    cmd->add_option("--field", q, "field order q = p^k");
    cmd->add_option("--prime", p, "field characteristic (with --ext)");
    cmd->add_option("--ext", k, "extension degree (with --prime)")->check(CLI::PositiveNumber);
    cmd->add_option("--max-field", max_field, "largest field order accepted")->check(CLI::Range(2u, 256u));
  }

  FieldPtr make() const {
    if (q != 0 && p != 0) throw UsageError("give either --field or --prime/--ext, not both");
    if (q != 0) return Field::of_order(q, max_field);
    if (p != 0) return Field::make(p, k, max_field);
    throw UsageError("a field is required (--field q or --prime p --ext k)");
  }
};

struct WindowArgs {
  unsigned yvars = 1;
  unsigned zvars = 1;
  unsigned max_deg = 3;

  void add(CLI::App* cmd) {
    cmd->add_option("--yvars", yvars, "number of even variables y1..ym");
    cmd->add_option("--zvars", zvars, "number of odd variables z1..zn");
    cmd->add_option("--max-deg", max_deg, "largest total degree")->check(CLI::PositiveNumber);
  }
};

struct CacheArgs {
  std::string dir;
  bool disabled = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--cache-dir", dir, "closure cache directory (default $GRADID_CACHE_DIR or ~/.cache/gradid)");
    cmd->add_flag("--no-cache", disabled, "do not read or write the closure cache");
  }

  std::optional<std::filesystem::path> path() const {
    if (disabled) return std::nullopt;
    if (!dir.empty()) return std::filesystem::path(dir);
    return default_cache_dir();
  }
};

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + output);
  f << text;
}

std::string mode_name(CheckMode m) { return m == CheckMode::Exhaustive ? "exhaustive" : "random"; }

int run_check_identity(const FieldArgs& fa, const std::string& preset, const std::string& grading_text,
                       const std::string& poly, const std::string& mode, const CheckOptions& base, bool json,
                       const std::string& output) {
  const FieldPtr F = fa.make();
  if (!preset.empty() && !grading_text.empty()) throw UsageError("give either --preset or --grading, not both");
  if (preset.empty() && grading_text.empty()) throw UsageError("a grading is required (--preset or --grading)");
  const Grading grading = Grading::parse(preset.empty() ? grading_text : preset);
  const Polynomial f = parse_polynomial(poly, F);
  CheckOptions opts = base;
  if (mode == "exhaustive") {
    opts.mode = CheckMode::Exhaustive;
  } else if (mode == "random") {
    opts.mode = CheckMode::Random;
  } else {
    throw UsageError("--mode must be exhaustive or random");
  }
  const IdentityVerdict v = check_identity(f, grading, opts);

  ojson j;
  j["schema"] = "gradid-identity/1";
  j["field"] = F->name();
  j["grading"] = grading.name();
  j["polynomial"] = to_string(f);
  j["verdict"] = v.identity ? "identity" : "counterexample";
  j["mode"] = mode_name(v.mode);
  j["exact"] = v.exact;
  j["evaluations"] = v.evaluations;
  if (v.mode == CheckMode::Random) j["seed"] = v.seed;
  if (v.counterexample) {
    ojson a;
    for (const auto& [var, m] : *v.counterexample) a[to_string(var)] = to_string(*F, m);
    j["counterexample"] = a;
    j["value"] = to_string(*F, *v.counterexample_value);
  }
  if (json) {
    emit(j.dump(2) + "\n", output);
  } else {
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object()) {
        s += it.key() + ":\n";
        for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
          s += "  " + jt.key() + " = " + jt.value().get<std::string>() + "\n";
        }
      } else {
        s += it.key() + ": " + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) + "\n";
      }
    }
    emit(s, output);
  }
  return v.identity ? 0 : kExitNegative;
}

std::string combination_text(const SpanningFamily& family, const std::vector<FieldElement>& coeffs) {
  const Field& F = *family.field;
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += F.format(coeffs[i]) + "*" + family.members[i].label;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded polynomial identities of upper-triangular matrix algebras over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gradid 0.1.0");

  FieldArgs fa;
  WindowArgs wa;
  CacheArgs ca;
  std::string preset, grading, poly, mode = "exhaustive", output;
  bool json = false;
  CheckOptions copts;
  unsigned depth = 2;
  bool timings = false;
  bool skip_inclusion = false;

  auto* check = app.add_subcommand("check-identity", "decide whether a polynomial is a graded identity");
  fa.add(check);
  check->add_option("--preset", preset, "ut2-canonical | ut3-A | ut3-B | trivial:<n>");
  check->add_option("--grading", grading, "degree tuple, e.g. 0,1,1");
  check->add_option("--poly", poly, "polynomial text")->required();
  check->add_option("--mode", mode, "exhaustive | random");
  check->add_option("--samples", copts.samples, "random draws");
  check->add_option("--seed", copts.seed, "random seed");
  check->add_option("--exhaustive-cap", copts.exhaustive_cap, "largest exhaustive sweep");
  check->add_option("--threads", copts.threads, "worker threads")->check(CLI::PositiveNumber);
  check->add_flag("--json", json, "JSON output");
  check->add_option("--output", output, "write to file");

  VerificationConfig vc;
  auto* verify = app.add_subcommand("verify-basis", "certify the spanning family as a basis at a window");
  fa.add(verify);
  wa.add(verify);
  ca.add(verify);
  verify->add_option("--preset", preset, "ut2-canonical | ut3-A | ut3-B")->required();
  verify->add_option("--seed", vc.seed, "random seed");
  verify->add_option("--samples", vc.samples, "random draws per generator when sweeps exceed the cap");
  verify->add_option("--exhaustive-cap", vc.exhaustive_cap, "largest exhaustive sweep");
  verify->add_option("--schedule-depth", depth, "monomials per substituted sum")->check(CLI::PositiveNumber);
  verify->add_option("--threads", vc.threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "include wall-clock timings (reports are then not reproducible)");
  verify->add_flag("--skip-inclusion", skip_inclusion, "do not check the generators");
  verify->add_flag("--json", json, "JSON output");
  verify->add_option("--output", output, "write to file");

  auto* reduce = app.add_subcommand("reduce", "express a polynomial in the spanning family modulo the ideal");
  fa.add(reduce);
  wa.add(reduce);
  ca.add(reduce);
  reduce->add_option("--preset", preset, "ut2-canonical | ut3-A | ut3-B")->required();
  reduce->add_option("--poly", poly, "polynomial text")->required();
  reduce->add_option("--schedule-depth", depth, "monomials per substituted sum")->check(CLI::PositiveNumber);
  reduce->add_flag("--json", json, "JSON output");
  reduce->add_option("--output", output, "write to file");

  auto* dims = app.add_subcommand("dims", "dimension table by degree");
  fa.add(dims);
  wa.add(dims);
  ca.add(dims);
  dims->add_option("--preset", preset, "ut2-canonical | ut3-A | ut3-B")->required();
  dims->add_option("--schedule-depth", depth, "monomials per substituted sum")->check(CLI::PositiveNumber);
  dims->add_flag("--json", json, "JSON output");
  dims->add_option("--output", output, "write to file");

  auto* enumerate = app.add_subcommand("enumerate", "list the spanning family");
  fa.add(enumerate);
  wa.add(enumerate);
  enumerate->add_option("--preset", preset, "ut2-canonical | ut3-A | ut3-B")->required();
  enumerate->add_flag("--json", json, "JSON output");
  enumerate->add_option("--output", output, "write to file");

  auto* cache = app.add_subcommand("cache", "inspect or clear the closure cache");
  cache->require_subcommand(1);
  auto* cache_list = cache->add_subcommand("list", "list cached closures");
  auto* cache_clear = cache->add_subcommand("clear", "delete cached closures");
  std::string cache_dir;
  for (auto* c : {cache_list, cache_clear}) c->add_option("--cache-dir", cache_dir, "cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return run_check_identity(fa, preset, grading, poly, mode, copts, json, output);

    if (*verify) {
      vc.preset = parse_preset(preset);
      vc.field = fa.make();
      vc.yvars = wa.yvars;
      vc.zvars = wa.zvars;
      vc.max_deg = wa.max_deg;
      vc.schedule_depth = depth;
      vc.cache_dir = ca.path();
      vc.record_timings = timings;
      vc.check_inclusion = !skip_inclusion;
      const VerificationReport rep = verify_basis(vc);
      emit(json ? report_to_json(rep) : report_to_text(rep), output);
      const bool inclusion_failed = std::any_of(rep.inclusion.begin(), rep.inclusion.end(),
                                                [](const InclusionVerdict& v) { return !v.verdict.identity; });
      return rep.pinch && !inclusion_failed ? 0 : kExitNegative;
    }

    if (*reduce || *dims) {
      const Preset p = parse_preset(preset);
      const FieldPtr F = fa.make();
      const Window W(wa.yvars, wa.zvars, wa.max_deg);
      const IdealPresentation pres = IdealPresentation::of_preset(p, F);
      ClosureOptions co;
      co.depth = depth;
      const IdealComponent comp = cached_closure(pres, W, co, ca.path());
      const SpanningFamily family = enumerate_spanning_family(p, F, wa.yvars, wa.zvars, wa.max_deg);

      if (*dims) {
        const auto counts = family.count_by_degree();
        ojson rows = ojson::array();
        std::string text = "degree  dim_w  dim_ideal  quotient  family\n";
        std::size_t cumulative = 0;
        for (unsigned l = 1; l <= wa.max_deg; ++l) {
          cumulative += counts[l];
          const std::size_t dw = W.dim_up_to(l), di = comp.rank_up_to(l);
          rows.push_back({{"degree", l}, {"dim_w", dw}, {"dim_ideal", di}, {"quotient", dw - di},
                          {"family", cumulative}, {"family_in_degree", counts[l]}});
          char line[96];
          std::snprintf(line, sizeof line, "%6u  %5zu  %9zu  %8zu  %6zu\n", l, dw, di, dw - di, cumulative);
          text += line;
        }
        if (json) {
          ojson j;
          j["schema"] = "gradid-dims/1";
          j["preset"] = preset_name(p);
          j["field"] = F->name();
          j["cache_key"] = cache_key(pres, W, depth).text;
          j["rows"] = rows;
          emit(j.dump(2) + "\n", output);
        } else {
          emit(text, output);
        }
        return 0;
      }

      const Polynomial f = parse_polynomial(poly, F);
      if (!W.contains(f)) throw UsageError("polynomial lies outside the window; raise --yvars/--zvars/--max-deg");
      const NormalForm nf = normal_form(f, family, comp);
      if (json) {
        ojson j;
        j["schema"] = "gradid-reduce/1";
        j["polynomial"] = to_string(f);
        j["residual"] = nf.residual;
        if (!nf.residual) {
          ojson terms = ojson::array();
          for (std::size_t i = 0; i < family.size(); ++i) {
            if (!nf.coefficients[i].is_zero()) {
              terms.push_back({{"member", family.members[i].label}, {"coefficient", F->format(nf.coefficients[i])}});
            }
          }
          j["terms"] = terms;
          j["ideal_part"] = to_string(*nf.ideal_part);
        }
        emit(j.dump(2) + "\n", output);
      } else if (nf.residual) {
        emit("residual: no reduction at this truncation\n", output);
      } else {
        emit(combination_text(family, nf.coefficients) + "\n", output);
      }
      return nf.residual ? kExitNegative : 0;
    }

    if (*enumerate) {
      const Preset p = parse_preset(preset);
      const FieldPtr F = fa.make();
      const SpanningFamily family = enumerate_spanning_family(p, F, wa.yvars, wa.zvars, wa.max_deg);
      if (json) {
        ojson j;
        j["schema"] = "gradid-family/1";
        j["preset"] = preset_name(p);
        j["field"] = F->name();
        j["size"] = family.size();
        ojson members = ojson::array();
        for (const auto& m : family.members) {
          members.push_back({{"label", m.label}, {"degree", m.degree}, {"expanded", to_string(m.poly)}});
        }
        j["members"] = members;
        emit(j.dump(2) + "\n", output);
      } else {
        std::string s;
        for (const auto& m : family.members) s += std::to_string(m.degree) + "  " + m.label + "\n";
        emit(s, output);
      }
      return 0;
    }

    if (*cache) {
      const std::filesystem::path dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
      std::vector<std::filesystem::path> files;
      if (std::filesystem::is_directory(dir)) {
        for (const auto& e : std::filesystem::directory_iterator(dir)) {
          if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
        }
      }
      std::sort(files.begin(), files.end());
      if (*cache_list) {
        for (const auto& f : files) std::cout << f.stem().string() << "\n";
      } else {
        for (const auto& f : files) std::filesystem::remove(f);
        std::cout << "removed " << files.size() << " cached closures from " << dir.string() << "\n";
      }
      return 0;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "limit: " << e.quantity() << " " << std::llround(e.requested()) << " exceeds "
              << std::llround(e.cap()) << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
