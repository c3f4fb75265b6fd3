#pragma once

// Dense row echelon forms over GF(q).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gradid/field.hpp"

namespace gradid {

using Row = std::vector<std::uint8_t>;

/// Incrementally built echelon basis. The pivot of a row is its first nonzero
/// entry among the leading `pivot_columns` columns; the remaining columns are
/// carried along (used to track combinations).
class Echelon {
 public:
  Echelon(FieldPtr field, std::size_t columns, std::size_t pivot_columns);
  Echelon(FieldPtr field, std::size_t columns) : Echelon(std::move(field), columns, columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t pivot_columns() const { return pivot_columns_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  /// Eliminates every pivot column of v. Returns the first nonzero pivot-range
  /// column left, if any.
  std::optional<std::size_t> reduce(Row& v) const;
  bool in_span(Row v) const { return !reduce(v).has_value(); }

  /// Reduces v and keeps it (scaled to a monic pivot) when independent.
  /// Returns the new row's index.
  std::optional<std::size_t> insert(Row v);

  /// Back-substitutes and sorts rows by pivot: the reduced row echelon form,
  /// which depends only on the row space.
  void to_rref();

  const std::vector<Row>& rows() const { return rows_; }
  std::size_t pivot_of(std::size_t row) const { return pivots_[row]; }
  /// Row index having pivot column c.
  std::optional<std::size_t> row_with_pivot(std::size_t c) const;

  bool operator==(const Echelon& other) const;

 private:
  void axpy(Row& v, std::uint8_t c, const Row& r, std::size_t from) const;

  FieldPtr field_;
  std::size_t columns_;
  std::size_t pivot_columns_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;  // column -> row or -1
};

/// Rank of a list of rows.
std::size_t rank_of(const FieldPtr& field, const std::vector<Row>& rows, std::size_t columns);

}  // namespace gradid
