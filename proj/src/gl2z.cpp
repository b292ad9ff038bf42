#include "gmc/gl2z.hpp"

#include <ostream>
#include <sstream>

#include "gmc/checked.hpp"

namespace gmc {

using checked::add;
using checked::mul;
using checked::sub;

std::int64_t Gl2Matrix::determinant() const { return sub(mul(alpha, delta), mul(beta, gamma)); }

Gl2Matrix Gl2Matrix::operator-() const {
  return {checked::neg(alpha), checked::neg(beta), checked::neg(gamma), checked::neg(delta)};
}

std::ostream& operator<<(std::ostream& os, const Gl2Matrix& a) {
  return os << "[[" << a.alpha << "," << a.beta << "],[" << a.gamma << "," << a.delta << "]]";
}

std::string to_string(const Gl2Matrix& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

Gl2Matrix compose(const Gl2Matrix& a, const Gl2Matrix& b) {
  return {add(mul(a.alpha, b.alpha), mul(a.beta, b.gamma)),
          add(mul(a.alpha, b.beta), mul(a.beta, b.delta)),
          add(mul(a.gamma, b.alpha), mul(a.delta, b.gamma)),
          add(mul(a.gamma, b.beta), mul(a.delta, b.delta))};
}

Gl2Matrix power_u(std::int64_t k) { return {1, 0, k, 1}; }

bool is_plus_minus_h(const Gl2Matrix& a) { return a == kH || a == Gl2Matrix{0, -1, -1, 0}; }

bool is_edge_shape(const Gl2Matrix& a) { return a.beta != 0 && a.determinant() == -1; }

namespace {

void require_edge_shape(const Gl2Matrix& a) {
  if (a.beta == 0)
    throw DomainError("matrix " + to_string(a) +
                      " has beta = 0: the gluing sends a fibre to a fibre, so the "
                      "decomposition is not minimal");
  if (a.determinant() != -1)
    throw DomainError("matrix " + to_string(a) + " does not have determinant -1");
}

}  // namespace

bool is_normalized(const Gl2Matrix& a) {
  require_edge_shape(a);
  const std::int64_t eps = a.beta > 0 ? 1 : -1;
  const std::int64_t bound = checked::abs(a.beta);
  const std::int64_t ea = mul(eps, a.alpha);
  const std::int64_t ed = mul(eps, a.delta);
  return 0 <= ea && ea < bound && 0 <= ed && ed < bound;
}

Normalization normalize(const Gl2Matrix& a) {
  require_edge_shape(a);
  const std::int64_t k = checked::neg(checked::floor_div(a.alpha, a.beta));
  const Gl2Matrix right = compose(a, power_u(k));
  const std::int64_t h = checked::neg(checked::floor_div(right.delta, right.beta));
  return {compose(power_u(h), right), k, h};
}

}  // namespace gmc
