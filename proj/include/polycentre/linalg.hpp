#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polycentre/rational.hpp"

namespace polycentre {

/// Dense coordinate vector over exact rationals.
struct Vector {
  std::vector<Rational> coords;

  Vector() = default;
  explicit Vector(std::vector<Rational> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int i) const { return coords[i]; }
  Rational& operator[](int i) { return coords[i]; }

  bool operator==(const Vector&) const = default;

  static Vector zero(int dim);
  static Vector unit(int dim, int axis);
};

/// Linear functional in coordinates; acts on vectors by the dot pairing.
struct Covector {
  std::vector<Rational> coords;

  Covector() = default;
  explicit Covector(std::vector<Rational> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int i) const { return coords[i]; }
  Rational& operator[](int i) { return coords[i]; }

  bool operator==(const Covector&) const = default;

  static Covector zero(int dim);
  static Covector unit(int dim, int axis);
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);

Covector operator+(const Covector& a, const Covector& b);
Covector operator-(const Covector& a, const Covector& b);
Covector operator*(const Rational& s, const Covector& f);

/// Exact pairing <f, v>. Throws DimensionMismatch on unequal dims.
Rational dot(const Covector& f, const Vector& v);

bool is_zero(const Vector& v);

/// Rank of the span of the given vectors, by exact Gaussian elimination.
int rank(std::span<const Vector> vectors);

std::string to_string(const Vector& v);
std::string to_string(const Covector& f);

}  // namespace polycentre
