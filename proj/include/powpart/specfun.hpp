#ifndef POWPART_SPECFUN_HPP
#define POWPART_SPECFUN_HPP

namespace powpart {

// Hurwitz zeta  zeta(s, x) = sum_{n>=0} (n+x)^{-s}  for s > 1, 0 < x <= 1,
// by Euler-Maclaurin summation; absolute accuracy ~1e-15 on that domain.
double hurwitz_zeta(double s, double x);

// Riemann zeta for s > 1 (standard library implementation).
double zeta(double s);

// log Gamma and Gamma at positive real arguments.
double gamma_pos(double x);

} // namespace powpart

#endif
