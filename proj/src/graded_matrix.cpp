#include "gradid/graded_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "gradid/errors.hpp"

namespace gradid {

Grading::Grading(std::vector<int> degs, std::string name) : degs_(std::move(degs)), name_(std::move(name)) {
  if (degs_.empty() || degs_.size() > std::size_t(kMaxMatrixSize)) {
    throw std::invalid_argument("grading tuple must have length 1.." + std::to_string(kMaxMatrixSize));
  }
  for (int g : degs_) {
    if (g != 0 && g != 1) throw std::invalid_argument("grading tuple entries must be 0 or 1");
  }
  if (name_.empty()) {
    for (std::size_t i = 0; i < degs_.size(); ++i) name_ += (i ? "," : "") + std::to_string(degs_[i]);
  }
}

Grading Grading::preset(Preset p) {
  switch (p) {
    case Preset::Ut2Canonical:
      return Grading({0, 1}, "ut2-canonical");
    case Preset::Ut3A:
      return Grading({0, 1, 1}, "ut3-A");
    case Preset::Ut3B:
      return Grading({0, 1, 0}, "ut3-B");
  }
  throw std::logic_error("unreachable");
}

Grading Grading::parse(std::string_view text) {
  if (text == "ut2-canonical" || text == "ut3-A" || text == "ut3-B") return preset(parse_preset(text));
  if (text.starts_with("trivial:")) {
    const std::string n(text.substr(8));
    int size = 0;
    try {
      size = std::stoi(n);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad trivial grading size '" + n + "'");
    }
    if (size < 1 || size > kMaxMatrixSize) throw std::invalid_argument("trivial grading size out of range");
    return Grading(std::vector<int>(std::size_t(size), 0), "trivial:" + n);
  }
  std::vector<int> degs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (tok == "0") {
      degs.push_back(0);
    } else if (tok == "1") {
      degs.push_back(1);
    } else {
      throw std::invalid_argument("unknown grading '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Grading(std::move(degs));
}

std::vector<std::pair<int, int>> Grading::basis(int g) const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = i; j < size(); ++j) {
      if (degree_of(i, j) == g) out.emplace_back(i, j);
    }
  }
  return out;
}

UTMatrix UTMatrix::zero(int n) {
  if (n < 1 || n > kMaxMatrixSize) throw std::invalid_argument("matrix size out of range");
  UTMatrix m;
  m.n = n;
  return m;
}

UTMatrix UTMatrix::unit(int n, int i, int j, FieldElement c) {
  UTMatrix m = zero(n);
  if (i < 1 || j < i || j > n) throw std::invalid_argument("elementary matrix index outside the upper triangle");
  m.at(i - 1, j - 1) = c;
  return m;
}

bool UTMatrix::is_zero() const {
  for (const auto& e : entries) {
    if (!e.is_zero()) return false;
  }
  return true;
}

namespace {
void check_sizes(const UTMatrix& a, const UTMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
}
}  // namespace

UTMatrix add(const Field& F, const UTMatrix& a, const UTMatrix& b) {
  check_sizes(a, b);
  UTMatrix c = UTMatrix::zero(a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = i; j < a.n; ++j) c.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  }
  return c;
}

UTMatrix sub(const Field& F, const UTMatrix& a, const UTMatrix& b) {
  check_sizes(a, b);
  UTMatrix c = UTMatrix::zero(a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = i; j < a.n; ++j) c.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
  }
  return c;
}

UTMatrix mul(const Field& F, const UTMatrix& a, const UTMatrix& b) {
  check_sizes(a, b);
  UTMatrix c = UTMatrix::zero(a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = i; j < a.n; ++j) {
      FieldElement s{};
      for (int k = i; k <= j; ++k) s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = s;
    }
  }
  return c;
}

UTMatrix scale(const Field& F, FieldElement c, const UTMatrix& a) {
  UTMatrix out = UTMatrix::zero(a.n);
  for (int i = 0; i < a.n; ++i) {
    for (int j = i; j < a.n; ++j) out.at(i, j) = F.mul(c, a.at(i, j));
  }
  return out;
}

UTMatrix pow(const Field& F, const UTMatrix& a, unsigned e) {
  if (e == 0) throw std::invalid_argument("matrix power exponent must be positive");
  UTMatrix r = a;
  for (unsigned i = 1; i < e; ++i) r = mul(F, r, a);
  return r;
}

bool is_homogeneous(const Grading& grading, const UTMatrix& a, int g) {
  if (a.n != grading.size()) return false;
  for (int i = 0; i < a.n; ++i) {
    for (int j = i; j < a.n; ++j) {
      if (!a.at(i, j).is_zero() && grading.degree_of(i, j) != g) return false;
    }
  }
  return true;
}

std::vector<UTMatrix> homogeneous_elements(const Field& F, const Grading& grading, int g, std::size_t cap) {
  const auto positions = grading.basis(g);
  const double count = std::pow(double(F.order()), double(positions.size()));
  if (count > double(cap)) {
    throw CapExceeded("component of degree " + std::to_string(g) + " has " + std::to_string(std::llround(count)) +
                          " elements",
                      "component size", count, double(cap));
  }
  std::vector<UTMatrix> out;
  out.reserve(std::size_t(count));
  std::vector<unsigned> digits(positions.size(), 0);
  const unsigned q = F.order();
  while (true) {
    UTMatrix m = UTMatrix::zero(grading.size());
    for (std::size_t t = 0; t < positions.size(); ++t) {
      m.at(positions[t].first, positions[t].second) = FieldElement(std::uint8_t(digits[t]));
    }
    out.push_back(m);
    // The last basis position varies fastest.
    std::size_t t = positions.size();
    while (t > 0) {
      --t;
      if (++digits[t] < q) break;
      digits[t] = 0;
      if (t == 0) return out;
    }
    if (positions.empty()) return out;
  }
}

std::string to_string(const Field& F, const UTMatrix& a) {
  std::string s;
  for (int i = 0; i < a.n; ++i) {
    for (int j = i; j < a.n; ++j) {
      const FieldElement c = a.at(i, j);
      if (c.is_zero()) continue;
      if (!s.empty()) s += " + ";
      if (c != F.one()) s += F.format(c) + "*";
      s += "e" + std::to_string(i + 1) + std::to_string(j + 1);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace gradid
