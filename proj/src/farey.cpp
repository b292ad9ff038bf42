#include "gmc/farey.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "gmc/checked.hpp"

namespace gmc {

using checked::add;
using checked::mul;
using checked::sub;

Slope::Slope(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (a == 0 && b == 0) throw DomainError("slope (0,0) is not a slope");
  if (std::gcd(a, b) != 1) throw DomainError("slope components must be coprime");
  if (b_ < 0 || (b_ == 0 && a_ < 0)) {
    a_ = checked::neg(a_);
    b_ = checked::neg(b_);
  }
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
  if (s.b() == 0) return os << "inf";
  if (s.b() == 1) return os << s.a();
  return os << s.a() << "/" << s.b();
}

std::int64_t cross(const Slope& s, const Slope& t) { return sub(mul(s.a(), t.b()), mul(t.a(), s.b())); }

FareyTriangle::FareyTriangle(const Slope& x, const Slope& y, const Slope& z) : v_{x, y, z} {
  if (checked::abs(cross(x, y)) != 1 || checked::abs(cross(y, z)) != 1 ||
      checked::abs(cross(x, z)) != 1)
    throw DomainError("slopes do not span a Farey triangle");
  std::sort(v_.begin(), v_.end());
}

bool FareyTriangle::contains(const Slope& s) const noexcept {
  return std::find(v_.begin(), v_.end(), s) != v_.end();
}

std::ostream& operator<<(std::ostream& os, const FareyTriangle& t) {
  return os << "{" << t.vertices()[0] << ", " << t.vertices()[1] << ", " << t.vertices()[2] << "}";
}

FareyTriangle tau_plus() { return {Slope::infinity(), Slope(0, 1), Slope(1, 1)}; }
FareyTriangle tau_minus() { return {Slope::infinity(), Slope(0, 1), Slope(-1, 1)}; }

std::int64_t cf_sum(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0) throw DomainError("cf_sum needs a positive rational");
  if (std::gcd(p, q) != 1) throw DomainError("cf_sum needs coprime numerator and denominator");
  std::int64_t sum = 0;
  while (q != 0) {
    sum = add(sum, p / q);
    std::int64_t rest = p % q;
    p = q;
    q = rest;
  }
  return sum;
}

Slope act(const Gl2Matrix& a, const Slope& s) {
  return Slope(add(mul(a.alpha, s.a()), mul(a.beta, s.b())),
               add(mul(a.gamma, s.a()), mul(a.delta, s.b())));
}

FareyTriangle act(const Gl2Matrix& a, const FareyTriangle& t) {
  if (checked::abs(a.determinant()) != 1) throw DomainError("matrix is not in GL2(Z)");
  const auto& v = t.vertices();
  return {act(a, v[0]), act(a, v[1]), act(a, v[2])};
}

namespace {

int sign(std::int64_t x) { return (x > 0) - (x < 0); }

// Writes x = s*u + t*v (|cross(u, v)| = 1) and returns sign(s*t). The sign
// is independent of the representatives chosen for x, u and v up to a common
// flip, and tells on which side of the Farey edge uv the point x lies:
// +1 on the arc through u+v, -1 on the arc through u-v.
int side_of_edge(const Slope& u, const Slope& v, const Slope& x) {
  const std::int64_t d = cross(u, v);
  const std::int64_t s = cross(x, v) * d;  // d = +-1, so this is the coefficient up to sign
  const std::int64_t t = cross(u, x) * d;
  return sign(s) * sign(t);
}

Slope combine(const Slope& u, const Slope& v, int sgn) {
  return Slope(add(u.a(), mul(sgn, v.a())), add(u.b(), mul(sgn, v.b())));
}

}  // namespace

std::int64_t farey_distance(const FareyTriangle& from, const FareyTriangle& to) {
  FareyTriangle cur = from;
  std::int64_t steps = 0;
  while (!(cur == to)) {
    const auto v = cur.vertices();
    bool moved = false;
    for (int drop = 0; drop < 3 && !moved; ++drop) {
      const Slope& w = v[drop];
      const Slope& u = v[(drop + 1) % 3];
      const Slope& x = v[(drop + 2) % 3];
      // The triangle across edge (u, x) has third vertex u+x or u-x,
      // whichever is not w.
      const Slope plus = combine(u, x, 1);
      const Slope far = (plus == w) ? combine(u, x, -1) : plus;
      const int far_side = side_of_edge(u, x, far);
      for (const Slope& y : to.vertices()) {
        if (y == u || y == x) continue;
        if (side_of_edge(u, x, y) == far_side) {
          cur = FareyTriangle(u, x, far);
          ++steps;
          moved = true;
        }
        break;
      }
    }
    if (!moved) throw std::logic_error("farey_distance: no separating edge found");
  }
  return steps;
}

std::int64_t matrix_complexity(const Gl2Matrix& a) {
  if (!is_normalized(a)) throw DomainError("matrix " + to_string(a) + " is not normalized");
  if (is_plus_minus_h(a)) return 0;
  return cf_sum(checked::abs(a.beta), checked::abs(a.delta)) - 1;
}

std::int64_t complexity_by_search(const Gl2Matrix& a) {
  const FareyTriangle plus = tau_plus();
  const FareyTriangle minus = tau_minus();
  const FareyTriangle a_minus = act(a, minus);
  const FareyTriangle a_plus = act(a, plus);
  return std::min({farey_distance(a_minus, minus), farey_distance(a_minus, plus),
                   farey_distance(a_plus, minus), farey_distance(a_plus, plus)});
}

}  // namespace gmc
