#pragma once

// Upper-triangular matrices UT_n (n <= 4) over GF(q) with an elementary Z2-grading.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradid/families.hpp"
#include "gradid/field.hpp"

namespace gradid {

inline constexpr int kMaxMatrixSize = 4;

/// Elementary grading given by (g1, ..., gn); e_ij has degree gi + gj mod 2.
class Grading {
 public:
  explicit Grading(std::vector<int> degs, std::string name = {});

  static Grading preset(Preset p);
  /// `ut2-canonical`, `ut3-A`, `ut3-B`, `trivial:<n>` or a comma tuple such as `0,1,1`.
  static Grading parse(std::string_view text);

  int size() const { return int(degs_.size()); }
  const std::vector<int>& degrees() const { return degs_; }
  int degree_of(int i, int j) const { return (degs_[i] + degs_[j]) & 1; }
  /// Positions (i, j), i <= j, 0-based, of the elementary matrices of degree g.
  std::vector<std::pair<int, int>> basis(int g) const;
  const std::string& name() const { return name_; }

  bool operator==(const Grading& o) const { return degs_ == o.degs_; }

 private:
  std::vector<int> degs_;
  std::string name_;
};

struct UTMatrix {
  int n = 0;
  std::array<FieldElement, kMaxMatrixSize * kMaxMatrixSize> entries{};

  static UTMatrix zero(int n);
  /// Elementary matrix e_ij with 1-based indices.
  static UTMatrix unit(int n, int i, int j, FieldElement c = FieldElement{1});

  FieldElement at(int i, int j) const { return entries[std::size_t(i * kMaxMatrixSize + j)]; }
  FieldElement& at(int i, int j) { return entries[std::size_t(i * kMaxMatrixSize + j)]; }
  bool is_zero() const;

  bool operator==(const UTMatrix&) const = default;
};

UTMatrix add(const Field& F, const UTMatrix& a, const UTMatrix& b);
UTMatrix sub(const Field& F, const UTMatrix& a, const UTMatrix& b);
UTMatrix mul(const Field& F, const UTMatrix& a, const UTMatrix& b);
UTMatrix scale(const Field& F, FieldElement c, const UTMatrix& a);
/// a^e for e >= 1.
UTMatrix pow(const Field& F, const UTMatrix& a, unsigned e);

/// True iff every nonzero entry sits at a position of degree g (zero is homogeneous of both degrees).
bool is_homogeneous(const Grading& grading, const UTMatrix& a, int g);

/// Every element of the degree-g component, in coordinate order over basis(g).
/// Throws CapExceeded when q^dim exceeds cap.
std::vector<UTMatrix> homogeneous_elements(const Field& F, const Grading& grading, int g,
                                           std::size_t cap = 1'000'000);

/// Sum of c*eij terms with 1-based indices, or "0".
std::string to_string(const Field& F, const UTMatrix& a);

}  // namespace gradid
