#pragma once

// Truncated basis certificates: inclusion of the generators in the identities,
// spanning modulo the computed ideal, and independence by evaluation rank.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gradid/families.hpp"
#include "gradid/identity.hpp"
#include "gradid/tideal.hpp"

namespace gradid {

inline constexpr const char* kReportSchema = "gradid-report/1";

struct VerificationConfig {
  Preset preset = Preset::Ut2Canonical;
  FieldPtr field;
  unsigned yvars = 1;
  unsigned zvars = 1;
  unsigned max_deg = 3;
  std::uint64_t exhaustive_cap = 100'000'000;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  unsigned schedule_depth = 2;
  unsigned threads = 1;
  std::size_t window_cap = kDefaultWindowCap;
  /// Random graded assignments tried after the witnesses when rank is short.
  unsigned topup_budget = 4096;
  /// Witness parameter tuples drawn when q > 3 (exhaustive otherwise).
  unsigned witness_samples = 4096;
  std::optional<std::filesystem::path> cache_dir;
  bool check_inclusion = true;
  bool record_timings = false;
};

struct InclusionVerdict {
  std::string generator;
  IdentityVerdict verdict;
};

std::vector<InclusionVerdict> verify_inclusion(const VerificationConfig& config);

struct SpanningCertificate {
  std::size_t dim_w = 0;
  std::size_t dim_ideal = 0;
  std::size_t family_size = 0;
  std::size_t stacked_rank = 0;
  bool spans = false;
};

SpanningCertificate verify_spanning(const SpanningFamily& family, const IdealComponent& comp);

struct IndependenceCertificate {
  std::size_t family_size = 0;
  /// Rank reached with the witness matrices alone.
  std::size_t witness_rank = 0;
  std::size_t rank = 0;
  std::uint64_t witness_assignments = 0;
  std::uint64_t random_assignments = 0;
  bool witness_parameters_exhaustive = false;
  bool witnesses_sufficient = false;
  bool independent = false;
};

/// Rank of the evaluation matrix of arbitrary polynomials in y1..ym, z1..zn of
/// degree <= d (columns in the given order).
IndependenceCertificate evaluation_rank(const std::vector<Polynomial>& polys, Preset preset, const FieldPtr& field,
                                        unsigned yvars, unsigned zvars, unsigned max_deg, std::uint64_t seed,
                                        unsigned topup_budget = 4096, unsigned witness_samples = 4096);

IndependenceCertificate verify_independence(const SpanningFamily& family, const VerificationConfig& config);

struct DegreeRow {
  unsigned degree = 0;
  std::size_t dim_w = 0;
  std::size_t dim_ideal = 0;
  std::size_t family = 0;
  std::size_t quotient = 0;
};

struct VerificationReport {
  VerificationConfig config;
  std::vector<InclusionVerdict> inclusion;
  bool inclusion_ok = true;
  SpanningCertificate spanning;
  IndependenceCertificate independence;
  std::vector<DegreeRow> by_degree;
  /// Family count equals quotient dimension in every degree <= d.
  bool degrees_consistent = false;
  /// rank(E) <= dim W - dim I, which holds whenever the ideal rows are identities.
  bool rank_bound_ok = false;
  bool saturated = false;
  bool pinch = false;
  std::string cache_key;
  std::optional<double> seconds_inclusion, seconds_closure, seconds_independence;
};

VerificationReport verify_basis(const VerificationConfig& config);

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace gradid
