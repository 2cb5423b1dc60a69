#include "regpair/p1point.hpp"

#include <array>

namespace regpair {

P1Point parse_point(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "inf" || t == "Inf" || t == "INF" || t == "oo" || t == "infinity")
    return P1Point::infinity();
  return P1Point(parse_gq(t));
}

namespace {

// x_i y_j - x_j y_i for points in homogeneous coordinates.
GaussianRational hom_diff(const P1Point& p, const P1Point& q) {
  auto [xp, yp] = p.hom();
  auto [xq, yq] = q.hom();
  return xp * yq - xq * yp;
}

}  // namespace

GaussianRational cross_ratio(const P1Point& z1, const P1Point& z2, const P1Point& z3,
                             const P1Point& z4) {
  std::array<P1Point, 4> pts{z1, z2, z3, z4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j])
        throw PreconditionError("cross_ratio: points must be pairwise distinct");
  GaussianRational num = hom_diff(z1, z3) * hom_diff(z2, z4);
  GaussianRational den = hom_diff(z2, z3) * hom_diff(z1, z4);
  return num / den;
}

}  // namespace regpair
