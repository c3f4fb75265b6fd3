#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gradid/polynomial.hpp"

namespace gradid {

/// The three Z2-graded upper-triangular algebras with known bases of identities.
enum class Preset { Ut2Canonical, Ut3A, Ut3B };

std::string preset_name(Preset p);
/// Accepts `ut2-canonical`, `ut3-A`, `ut3-B`; throws std::invalid_argument otherwise.
Preset parse_preset(std::string_view name);

/// Commutators in Y-variables that form the associative normal-form tails.
///
/// Alternating: [y_{j1}, y_{j2}^(s2), y_{j1}^(s1-1), y_{j3}^(s3), ..., y_{jn}^(sn)],
///   distinct indices, j1 > j2 < j3 < ... < jn, 1 <= si < q, n >= 2.
/// FrobeniusHead: [y_{l1}^q - y_{l1}, y_{l2}^(t2), ..., y_{lk}^(tk)],
///   distinct indices, l2 < ... < lk, 1 <= ti < q, k >= 1. Zero exponents are
///   dropped from the descriptor since [u, v^(0)] = u.
struct OrderedQCommutator {
  enum class Kind { Alternating, FrobeniusHead };
  Kind kind = Kind::Alternating;
  std::vector<unsigned> indices;
  /// Alternating: s1..sn aligned with indices. FrobeniusHead: t2..tk (one shorter).
  std::vector<unsigned> exponents;

  unsigned degree(unsigned q) const;
  std::string label(unsigned q) const;
  Polynomial build(const FieldPtr& field) const;
};

struct QCommutatorEntry {
  OrderedQCommutator descriptor;
  Polynomial poly;
};

/// All ordered q-commutators in y1..ym of degree <= max_deg, by degree and then
/// in generation order.
std::vector<QCommutatorEntry> enumerate_ordered_q_commutators(const FieldPtr& field, unsigned yvars,
                                                              unsigned max_deg);

struct FamilyMember {
  std::string label;  // parseable text that evaluates to poly
  Polynomial poly;
  unsigned degree = 0;
};

struct SpanningFamily {
  Preset preset = Preset::Ut2Canonical;
  FieldPtr field;
  unsigned yvars = 0;
  unsigned zvars = 0;
  unsigned max_deg = 0;
  std::vector<FamilyMember> members;

  std::size_t size() const { return members.size(); }
  /// Number of members of each degree 1..max_deg (index 0 unused).
  std::vector<std::size_t> count_by_degree() const;
};

/// Canonical spanning set of the relatively free graded algebra, truncated to
/// variables y1..ym, z1..zn and total degree <= max_deg.
SpanningFamily enumerate_spanning_family(Preset preset, const FieldPtr& field, unsigned yvars, unsigned zvars,
                                         unsigned max_deg);

// Building blocks shared with the witness checks.

/// y1^{r1} ... ym^{rm} as a word (possibly empty).
Word y_prefix_word(std::span<const unsigned> r);
/// [z_j, y1^(s1), ..., ym^(sm)].
Polynomial z_bracket(const FieldPtr& field, unsigned j, std::span<const unsigned> s);
std::string z_bracket_label(unsigned j, std::span<const unsigned> s);

}  // namespace gradid
