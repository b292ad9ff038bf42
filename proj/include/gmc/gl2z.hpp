#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gmc {

// Exact 2x2 integer matrix ( alpha beta / gamma delta ), row major.
// Arithmetic is overflow-checked; see checked.hpp.
struct Gl2Matrix {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t delta = 1;

  std::int64_t determinant() const;
  Gl2Matrix operator-() const;

  friend bool operator==(const Gl2Matrix&, const Gl2Matrix&) = default;
};

std::ostream& operator<<(std::ostream& os, const Gl2Matrix& a);
std::string to_string(const Gl2Matrix& a);

inline constexpr Gl2Matrix kIdentity{1, 0, 0, 1};
inline constexpr Gl2Matrix kH{0, 1, 1, 0};
inline constexpr Gl2Matrix kU{1, 0, 1, 1};

// Exact product a * b.
Gl2Matrix compose(const Gl2Matrix& a, const Gl2Matrix& b);
inline Gl2Matrix operator*(const Gl2Matrix& a, const Gl2Matrix& b) { return compose(a, b); }

// U^k = ( 1 0 / k 1 ) for any integer k.
Gl2Matrix power_u(std::int64_t k);

bool is_plus_minus_h(const Gl2Matrix& a);

// Determinant -1 and beta != 0; the shape every edge label must have.
bool is_edge_shape(const Gl2Matrix& a);

// 0 <= eps*alpha < |beta| and 0 <= eps*delta < |beta| with eps = sign(beta).
// Throws DomainError unless is_edge_shape(a).
bool is_normalized(const Gl2Matrix& a);

struct Normalization {
  Gl2Matrix matrix;  // U^h * A * U^k
  std::int64_t k = 0;
  std::int64_t h = 0;
};

// Brings A into normalized form with k = -floor(alpha/beta) applied on the
// right first, then h = -floor(delta'/beta) on the left. beta is untouched.
// Throws DomainError unless is_edge_shape(a).
Normalization normalize(const Gl2Matrix& a);

}  // namespace gmc
