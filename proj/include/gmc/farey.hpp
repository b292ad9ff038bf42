#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>

#include "gmc/gl2z.hpp"

namespace gmc {

// A vertex a/b of the Farey triangulation (a point of Q u {inf}), stored as
// a primitive integer vector up to sign. Canonical representative: b > 0,
// or (a, b) = (1, 0) for infinity.
class Slope {
 public:
  // Throws DomainError for (0, 0) or a non-primitive pair.
  Slope(std::int64_t a, std::int64_t b);

  static Slope infinity() { return Slope(1, 0); }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }

  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// a_1 * b_2 - a_2 * b_1 (sign depends on the chosen representatives).
std::int64_t cross(const Slope& s, const Slope& t);

// Triangle of the Farey triangulation: three slopes pairwise at |cross| = 1,
// kept sorted so that equality is equality of vertex sets.
class FareyTriangle {
 public:
  // Throws DomainError unless the three slopes span a Farey triangle.
  FareyTriangle(const Slope& x, const Slope& y, const Slope& z);

  const std::array<Slope, 3>& vertices() const noexcept { return v_; }
  bool contains(const Slope& s) const noexcept;

  friend bool operator==(const FareyTriangle&, const FareyTriangle&) = default;

 private:
  std::array<Slope, 3> v_;
};

std::ostream& operator<<(std::ostream& os, const FareyTriangle& t);

// {inf, 0, 1} and {inf, 0, -1}.
FareyTriangle tau_plus();
FareyTriangle tau_minus();

// Sum of the (positive) continued fraction coefficients of p/q.
// Requires p, q > 0 coprime; throws DomainError otherwise.
std::int64_t cf_sum(std::int64_t p, std::int64_t q);

// Left multiplication on column vectors (a, b): each slope goes to
// (alpha a + beta b, gamma a + delta b). Requires |det a| = 1.
Slope act(const Gl2Matrix& a, const Slope& s);
FareyTriangle act(const Gl2Matrix& a, const FareyTriangle& t);

// Number of edges on the path between the two triangles in the dual tree.
std::int64_t farey_distance(const FareyTriangle& from, const FareyTriangle& to);

// Complexity of a normalized determinant -1 matrix via the continued fraction
// closed form: 0 for +-H, otherwise cf_sum(|beta|, |delta|) - 1.
// Throws DomainError for a matrix that is not normalized.
std::int64_t matrix_complexity(const Gl2Matrix& a);

// Complexity as the minimum of the four distances d(A tau_s, tau_t) for
// s, t in {+, -}, computed by walking the dual tree. Requires |det a| = 1.
std::int64_t complexity_by_search(const Gl2Matrix& a);

}  // namespace gmc
