#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socle/local.hpp"

namespace socle {

/// A named ring with the invariants it is expected to have. Every expected
/// value is recomputed by verify_entry before use.
struct ZooEntry {
  std::string id;
  std::string description;
  LocalRing ring;
  unsigned dim = 0;
  std::uint64_t multiplicity = 0;
  /// Expected generators of H^0_m(A), as printed polynomials.
  std::vector<std::string> h0;
  std::optional<unsigned> depth;
  /// Cohen-Macaulay type, where it is known in closed form.
  std::optional<std::uint64_t> type;
  bool buchsbaum = false;
};

/// k[X,Y]/(X^2, XY).
ZooEntry build_almost_dvr(const Field& f);
/// k[X1..Xe] with deg Xi = e + i - 1 modulo the 2x2 minors of
/// [[X1 .. Xe], [X2 .. Xe, X1^2]] other than D = X2*X1^2 - X3*Xe, plus D*(X1..Xe).
ZooEntry build_semigroup(unsigned e, const Field& f);
/// k[X,Y,Z] / (X^l) cap (Y, Z) = (X^l*Y, X^l*Z).
ZooEntry build_plane_line(unsigned l, const Field& f);
/// k[X,Y,Z]/(X^3, XY, Y^2 - XZ).
ZooEntry build_fat_line(const Field& f);
/// Polynomial ring in d variables, d <= 3 named X, Y, Z.
ZooEntry build_regular(unsigned d, const Field& f);
/// k[X,Y,Z,W] / (X,Y) cap (Z,W).
ZooEntry build_two_planes(const Field& f);
/// k[X,Y,Z]/(XY - Z^2).
ZooEntry build_quadric_cone(const Field& f);

std::vector<std::string> zoo_ids();
/// Throws InputError for an unknown id.
ZooEntry build_zoo(const std::string& id, const Field& f);

/// The determinant D of the semigroup ring, in that ring.
Polynomial semigroup_delta(const ZooEntry& entry);

struct ZooCheck {
  bool ok = true;
  std::vector<std::string> mismatches;
};
/// Recomputes dim, multiplicity, H^0 and depth.
ZooCheck verify_entry(const ZooEntry& entry);

}  // namespace socle
