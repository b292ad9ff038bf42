#include "gmc/seifert.hpp"

#include <numeric>
#include <sstream>

#include "gmc/checked.hpp"

namespace gmc {

std::int64_t handle_count(const SeifertData& s) {
  return s.g >= 0 ? checked::mul(2, s.g) : checked::neg(s.g);
}

std::vector<std::string> check_fibres(const SeifertData& s) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.fibres.size(); ++k) {
    const Fibre& f = s.fibres[k];
    if (!(0 < f.q && f.q < f.p)) {
      std::ostringstream msg;
      msg << "fibre (" << f.p << "," << f.q << ") must satisfy 0 < q < p";
      out.push_back(msg.str());
    } else if (std::gcd(f.p, f.q) != 1) {
      std::ostringstream msg;
      msg << "fibre (" << f.p << "," << f.q << ") is not coprime";
      out.push_back(msg.str());
    }
    if (k > 0 && f < s.fibres[k - 1]) {
      std::ostringstream msg;
      msg << "fibres out of lexicographic order at position " << k;
      out.push_back(msg.str());
    }
  }
  return out;
}

std::vector<std::string> validate_class_s(const SeifertData& s, std::int64_t d) {
  if (d < 1) return {"closed piece: a piece must have at least one boundary torus"};
  const std::int64_t h = handle_count(s);
  const std::int64_t total = checked::add(checked::add(d, s.r()), checked::mul(2, h));
  if (total >= 3) return {};
  // total < 3 forces h = 0, i.e. g = 0, and d + r <= 2.
  if (d == 1) return {"fibred solid torus shape (d + r + 2h < 3)"};
  return {"thickened torus shape (d + r + 2h < 3)"};
}

bool is_twisted_pair_piece(const SeifertData& s) {
  return s.g == 0 && s.fibres.size() == 2 && s.fibres[0] == Fibre{2, 1} &&
         s.fibres[1] == Fibre{2, 1};
}

}  // namespace gmc
