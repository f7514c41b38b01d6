#pragma once

#include "socle/groebner.hpp"

namespace socle {

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
/// power(J, 0) is the unit ideal.
Ideal power(const Ideal& J, unsigned n);
/// Via T*a + (1 - T)*b with T eliminated.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& J, const Polynomial& g);
/// Throws InputError for the zero ideal.
Ideal colon(const Ideal& J, const Ideal& K);

struct Saturation {
  Ideal ideal;
  /// First n with J : K^n = J : K^(n+1).
  unsigned exponent;
};
Saturation saturate(const Ideal& J, const Ideal& K);

bool equal_as_S_ideals(const Ideal& a, const Ideal& b);
bool equal_as_S_ideals(const Ideal& a, const Ideal& b, const MonomialOrder& order);

/// f / g; throws std::logic_error when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// The ideal of all variables.
Ideal maximal_ideal(const RingPtr& R);
Ideal principal(const Polynomial& f);

}  // namespace socle
