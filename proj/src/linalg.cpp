#include "polycentre/linalg.hpp"

#include <algorithm>

#include "polycentre/errors.hpp"

namespace polycentre {

namespace {

void check_dims(int a, int b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": dims " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

std::string join_coords(const std::vector<Rational>& coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += to_string(coords[i]);
  }
  out += ")";
  return out;
}

}  // namespace

Vector Vector::zero(int dim) {
  return Vector(std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
}

Vector Vector::unit(int dim, int axis) {
  Vector v = zero(dim);
  v[axis] = 1;
  return v;
}

Covector Covector::zero(int dim) {
  return Covector(std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
}

Covector Covector::unit(int dim, int axis) {
  Covector f = zero(dim);
  f[axis] = 1;
  return f;
}

Vector operator+(const Vector& a, const Vector& b) {
  check_dims(a.dim(), b.dim(), "vector +");
  Vector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  check_dims(a.dim(), b.dim(), "vector -");
  Vector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r = v;
  for (auto& c : r.coords) c *= s;
  return r;
}

Covector operator+(const Covector& a, const Covector& b) {
  check_dims(a.dim(), b.dim(), "covector +");
  Covector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

Covector operator-(const Covector& a, const Covector& b) {
  check_dims(a.dim(), b.dim(), "covector -");
  Covector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

Covector operator*(const Rational& s, const Covector& f) {
  Covector r = f;
  for (auto& c : r.coords) c *= s;
  return r;
}

Rational dot(const Covector& f, const Vector& v) {
  check_dims(f.dim(), v.dim(), "dot");
  Rational sum(0);
  for (int i = 0; i < v.dim(); ++i) sum += f[i] * v[i];
  return sum;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.coords.begin(), v.coords.end(),
                     [](const Rational& c) { return c == 0; });
}

int rank(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(v.coords);
  const int cols = vectors.front().dim();
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[r][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::string to_string(const Vector& v) { return join_coords(v.coords); }
std::string to_string(const Covector& f) { return join_coords(f.coords); }

}  // namespace polycentre
