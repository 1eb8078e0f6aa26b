#pragma once

#include <complex>

// Special functions backing the exact solutions: Airy Ai/Bi, complex Gamma,
// Kummer's confluent hypergeometric M(a,b,z), parabolic cylinder (Weber)
// D_lambda(z) of complex order, and the real-axis di/trilogarithm.
namespace qdt::sf {

using cplx = std::complex<double>;

struct AiryResult {
    double ai, bi, aip, bip;
};

// Ai, Bi and derivatives for |z| <= 50. Series near the origin, Taylor
// marching of y'' = z y in the intermediate band, asymptotic expansions
// beyond. Relative accuracy ~1e-11 (validated by Wronskian and by Numerov
// integration in the tests).
AiryResult airy(double z);

// Gamma(z) for complex z, Lanczos approximation (g = 7, 9 coefficients).
cplx cgamma(cplx z);
// 1/Gamma(z); entire, zero at the poles of Gamma.
cplx rgamma(cplx z);

// Kummer's M(a,b,z) = 1F1(a;b;z). Taylor series with term-ratio stopping at
// 1e-16 for |z| <= 30, two-sector asymptotic expansion beyond.
cplx kummer_M(cplx a, cplx b, cplx z);

// Weber (parabolic cylinder) function D_lambda(z), complex order, |z| <= 40.
// Assembled from the two Kummer branches (alpha,gamma) = (-l/2, 1/2) and
// ((1-l)/2, 3/2) with Gamma prefactors; direct asymptotic series in the
// exponentially decaying sector where that assembly cancels.
cplx weber_D(cplx lambda, cplx z);

// Pure outgoing solution of the inverted-parabola barrier equation
// w'' = (a_u^2 - u^2) w, i.e. D_{-1/2 - i a_u^2/2}(sqrt(2) e^{-i pi/4} u).
cplx outgoing_parabolic(double a_u, double u);

// Li_n(x) for n in {2,3}, real x <= 0. Direct/Landen series on [-1,0],
// inversion formulas for x < -1; ~1e-14 relative.
double polylog(int n, double x);

}  // namespace qdt::sf
