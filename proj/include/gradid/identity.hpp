#pragma once

// Evaluation of graded polynomials on graded matrix algebras and identity checks.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradid/families.hpp"
#include "gradid/graded_matrix.hpp"
#include "gradid/polynomial.hpp"

namespace gradid {

using Assignment = std::map<Variable, UTMatrix>;

/// Throws std::invalid_argument if a variable of f is unassigned, or if a
/// Y-variable gets a non-even (Z-variable a non-odd) matrix.
UTMatrix evaluate(const Polynomial& f, const Assignment& values, const Grading& grading);

enum class CheckMode { Exhaustive, Random };

struct CheckOptions {
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  /// Maximum number of assignment tuples an exhaustive sweep may visit.
  std::uint64_t exhaustive_cap = 100'000'000;
  unsigned threads = 1;
};

struct IdentityVerdict {
  bool identity = true;
  /// True when the verdict is a proof: exhaustive sweeps, or any counterexample.
  bool exact = true;
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
  std::optional<Assignment> counterexample;
  std::optional<UTMatrix> counterexample_value;
};

/// Number of graded assignments of the variables of f (saturating at UINT64_MAX).
std::uint64_t assignment_space_size(const Polynomial& f, const Grading& grading);

/// Exhaustive mode visits tuples in lexicographic order (variables in y < z
/// order, component elements in homogeneous_elements order) and reports the
/// first counterexample in that order. Throws CapExceeded if the space is too large.
IdentityVerdict check_identity(const Polynomial& f, const Grading& grading, const CheckOptions& options);

struct Generator {
  std::string label;
  Polynomial poly;
};

/// Expanded generators of the identity ideal of each preset, with the product
/// generators instantiated over {[y(2i-1), y(2i)], y(2i)^q - y(2i)}.
std::vector<Generator> generator_set(Preset preset, const FieldPtr& field);

// Witness matrices used to certify independence.

/// Parameters consumed per y-variable: 2 (ut2-canonical), 4 (ut3-A), 3 (ut3-B).
unsigned witness_params_per_y(Preset preset);

/// ut2-canonical: a e11 + (a+b) e22.
/// ut3-A:         a e11 + (a+b) e22 + (a+b+c) e33 + d e23.
/// ut3-B:         a e11 + (a+b) e22 + (a+b+c) e33.
std::vector<UTMatrix> witness_y_values(Preset preset, const Field& F, std::span<const FieldElement> params);

/// Nonzero odd witnesses: e12 (ut2-canonical, ut3-A); e12, e23, e12+e23 (ut3-B).
std::vector<UTMatrix> witness_z_options(Preset preset);

}  // namespace gradid
