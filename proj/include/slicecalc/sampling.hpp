#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "slicecalc/multivector.hpp"

namespace slicecalc {

// Seeded sampling for the verification suites. Uniform doubles are built
// directly from the generator's bit stream, so a fixed seed reproduces the
// exact byte stream of every report.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t raw() { return g_(); }
    double unif() { return static_cast<double>(g_() >> 11) * 0x1.0p-53; }
    double unif(double a, double b) { return a + (b - a) * unif(); }
    int uniform_int(int lo, int hi); // inclusive bounds
    double normal();
    std::vector<double> unit_vector(int k);

private:
    std::mt19937_64 g_;
};

// Paravector coordinates (x0..xn) with Re in [alpha_lo, alpha_hi] and
// |Im| in [beta_lo, beta_hi], imaginary direction uniform on S^{n-1}.
std::vector<double> sample_paravector_off_axis(Rng& rng, int n, double alpha_lo = -2.0,
                                               double alpha_hi = 2.0, double beta_lo = 0.1,
                                               double beta_hi = 2.0);

// Quaternion coordinates (x0..x3); the imaginary direction runs over the full
// sphere of unit imaginary quaternions.
std::vector<double> sample_quaternion_off_axis(Rng& rng, double alpha_lo = -2.0,
                                               double alpha_hi = 2.0, double beta_lo = 0.1,
                                               double beta_hi = 2.0);

// Point of R^4 with |x| in [r_lo, r_hi] (uniform direction).
std::vector<double> sample_shell4(Rng& rng, double r_lo, double r_hi);

Rat sample_rat(Rng& rng, int max_num, int den);
MvQ sample_rational_mv(Rng& rng, int n, int max_num, int den);
MvQ sample_rational_paravector(Rng& rng, int n, int max_num, int den);

// Rational element of the quadratic cone of R_{0,3} with nonzero bivector
// part, built by solving the cone quadric exactly.
MvQ sample_cone_r3(Rng& rng);

// Coefficients a_0..a_degree for a random one-sided polynomial.
std::vector<MvQ> random_poly_coeffs(Rng& rng, int n, int degree, int max_num, int den);

} // namespace slicecalc
