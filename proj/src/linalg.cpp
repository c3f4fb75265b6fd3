#include "gradid/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gradid {

Echelon::Echelon(FieldPtr field, std::size_t columns, std::size_t pivot_columns)
    : field_(std::move(field)), columns_(columns), pivot_columns_(pivot_columns), pivot_row_(pivot_columns, -1) {
  if (pivot_columns > columns) throw std::invalid_argument("pivot range wider than the row");
}

void Echelon::axpy(Row& v, std::uint8_t c, const Row& r, std::size_t from) const {
  const unsigned q = field_->order();
  const std::uint8_t* add = field_->add_table();
  const std::uint8_t* mul = field_->mul_table();
  const std::uint8_t* cm = mul + std::size_t(c) * q;
  for (std::size_t j = from; j < columns_; ++j) {
    if (r[j]) v[j] = add[v[j] * q + cm[r[j]]];
  }
}

std::optional<std::size_t> Echelon::reduce(Row& v) const {
  if (v.size() != columns_) throw std::invalid_argument("row length mismatch");
  std::optional<std::size_t> lead;
  for (std::size_t c = 0; c < pivot_columns_; ++c) {
    if (!v[c]) continue;
    const auto r = pivot_row_[c];
    if (r < 0) {
      if (!lead) lead = c;
      continue;
    }
    axpy(v, field_->neg(FieldElement{v[c]}).code, rows_[std::size_t(r)], c);
  }
  return lead;
}

std::optional<std::size_t> Echelon::insert(Row v) {
  const auto lead = reduce(v);
  if (!lead) return std::nullopt;
  const std::uint8_t inv = field_->inv(FieldElement{v[*lead]}).code;
  if (inv != 1) {
    const std::uint8_t* mul = field_->mul_table() + std::size_t(inv) * field_->order();
    for (auto& x : v) x = mul[x];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(*lead);
  pivot_row_[*lead] = std::int64_t(rows_.size() - 1);
  return rows_.size() - 1;
}

void Echelon::to_rref() {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;
  for (std::size_t i : order) {
    rows.push_back(std::move(rows_[i]));
    pivots.push_back(pivots_[i]);
  }
  rows_ = std::move(rows);
  pivots_ = std::move(pivots);
  std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
  for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[pivots_[i]] = std::int64_t(i);
  // Clear entries above each pivot, bottom row first.
  for (std::size_t i = rows_.size(); i-- > 0;) {
    const std::size_t c = pivots_[i];
    for (std::size_t k = 0; k < i; ++k) {
      const std::uint8_t x = rows_[k][c];
      if (x) axpy(rows_[k], field_->neg(FieldElement{x}).code, rows_[i], c);
    }
  }
}

std::optional<std::size_t> Echelon::row_with_pivot(std::size_t c) const {
  if (c >= pivot_columns_ || pivot_row_[c] < 0) return std::nullopt;
  return std::size_t(pivot_row_[c]);
}

bool Echelon::operator==(const Echelon& other) const {
  return *field_ == *other.field_ && columns_ == other.columns_ && pivot_columns_ == other.pivot_columns_ &&
         rows_ == other.rows_ && pivots_ == other.pivots_;
}

std::size_t rank_of(const FieldPtr& field, const std::vector<Row>& rows, std::size_t columns) {
  Echelon e(field, columns);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace gradid
