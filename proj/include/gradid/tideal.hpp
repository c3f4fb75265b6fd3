#pragma once

// Degree-truncated T2-ideals: the consequences of a generator list inside a
// window W(m, n, d), membership and reduction onto a spanning family.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gradid/families.hpp"
#include "gradid/identity.hpp"
#include "gradid/linalg.hpp"
#include "gradid/window.hpp"

namespace gradid {

/// Bumped whenever closure output for a fixed input could change.
inline constexpr int kClosureCodeVersion = 1;

struct IdealPresentation {
  std::string label;
  FieldPtr field;
  std::vector<Generator> generators;

  /// The full identity ideal of a preset: I (ut2-canonical), J (ut3-A), Q (ut3-B).
  static IdealPresentation of_preset(Preset preset, const FieldPtr& field);
  /// The preset ideal without its pure-Z generator (the ideals named M and N
  /// for ut3-A and ut3-B); for ut2-canonical this drops z1*z2.
  static IdealPresentation without_z_product(Preset preset, const FieldPtr& field);

  /// FNV-1a over the field and the canonical text of every generator.
  std::uint64_t hash() const;
};

struct ClosureOptions {
  /// Largest number of distinct monomials substituted for one variable at once.
  unsigned depth = 2;
  /// Nonzero: shuffle the seed instances with this seed before reduction.
  std::uint64_t shuffle_seed = 0;
  std::size_t window_cap = kDefaultWindowCap;
  /// Give up (saturated = false) after this many candidate vectors.
  std::uint64_t max_candidates = 50'000'000;
  unsigned threads = 1;
};

/// Row-reduced basis of the computed subspace of (ideal ∩ W).
struct IdealComponent {
  Window window;
  std::string label;
  std::uint64_t generator_hash = 0;
  unsigned depth = 0;
  bool saturated = false;
  /// Reduced row echelon basis; rows sorted by pivot (leading monomial).
  Echelon basis;
  /// For each row: the instance that first produced its pivot.
  std::vector<std::string> provenance;

  std::size_t rank() const { return basis.rank(); }
  /// dim of the computed subspace intersected with words of length <= l.
  std::size_t rank_up_to(unsigned l) const;
  Polynomial row_polynomial(std::size_t i) const;

  bool operator==(const IdealComponent& o) const;
};

IdealComponent closure(const IdealPresentation& pres, const Window& window, const ClosureOptions& options = {});

/// True iff f lies in the computed subspace (a proof of ideal membership).
/// False only means "not found at this truncation". Throws if f leaves the window.
bool member(const Polynomial& f, const IdealComponent& comp);

struct NormalForm {
  /// One coefficient per family member, in family order.
  std::vector<FieldElement> coefficients;
  /// Set when f is not in span(family) + computed ideal.
  bool residual = false;
  /// f - sum c_s s, which lies in the computed ideal when residual is false.
  std::optional<Polynomial> ideal_part;
};

NormalForm normal_form(const Polynomial& f, const SpanningFamily& family, const IdealComponent& comp);

// On-disk cache of closures.

struct CacheKey {
  std::string text;  // also the file stem
};

CacheKey cache_key(const IdealPresentation& pres, const Window& window, unsigned depth);

std::filesystem::path default_cache_dir();

void save_component(const IdealComponent& comp, const Field& field, const std::filesystem::path& file);
/// Returns nullopt if the file is missing or was written for another input or code version.
std::optional<IdealComponent> load_component(const std::filesystem::path& file, const IdealPresentation& pres,
                                             const Window& window, unsigned depth);

/// closure() through the cache directory (read if present, written otherwise).
IdealComponent cached_closure(const IdealPresentation& pres, const Window& window, const ClosureOptions& options,
                              const std::optional<std::filesystem::path>& cache_dir, bool* hit = nullptr);

// Rewriting lemmas checked on concrete instances.

struct LemmaResult {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;
};

struct LemmaSuiteOptions {
  std::uint64_t seed = 1;
  unsigned random_cases = 200;
};

std::vector<LemmaResult> lemma_suite(const LemmaSuiteOptions& options = {});

}  // namespace gradid
