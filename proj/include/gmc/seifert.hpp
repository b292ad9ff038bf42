#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmc {

// Exceptional fibre of type (p, q), 0 < q < p, gcd(p, q) = 1.
struct Fibre {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend auto operator<=>(const Fibre&, const Fibre&) = default;
};

// One Seifert piece (g, (p_1,q_1), ..., (p_r,q_r), b). The number of
// boundary tori is not stored: it is always the degree of the vertex that
// owns the piece.
//
// g >= 0 is the genus of an orientable base; g < 0 encodes a non-orientable
// base of genus -g.
struct SeifertData {
  std::int64_t g = 0;
  std::vector<Fibre> fibres;
  std::int64_t b = 0;

  std::int64_t r() const noexcept { return static_cast<std::int64_t>(fibres.size()); }

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

// 2g for an orientable base, -g otherwise.
std::int64_t handle_count(const SeifertData& s);

// Checks the fibre list: every pair coprime with 0 < q < p, and the list in
// non-decreasing lexicographic order. Returns one message per problem.
std::vector<std::string> check_fibres(const SeifertData& s);

// Membership in the admissible class of pieces for a piece with `d` boundary
// tori: d >= 1 and d + r + 2h >= 3. Returns an empty list when admissible,
// otherwise a message naming the excluded shape.
std::vector<std::string> validate_class_s(const SeifertData& s, std::int64_t d);

// True for the piece (0, (2,1), (2,1), b) with any b.
bool is_twisted_pair_piece(const SeifertData& s);

}  // namespace gmc
