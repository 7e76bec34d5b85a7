#include "slicecalc/sampling.hpp"

#include <cmath>

namespace slicecalc {

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) fail(errc::argument, "empty integer range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(raw() % span);
}

double Rng::normal() {
    double u1 = 1.0 - unif(); // (0, 1]
    double u2 = unif();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

std::vector<double> Rng::unit_vector(int k) {
    std::vector<double> v(k);
    for (;;) {
        double s = 0.0;
        for (int i = 0; i < k; ++i) {
            v[i] = normal();
            s += v[i] * v[i];
        }
        if (s > 1e-12) {
            double inv = 1.0 / std::sqrt(s);
            for (auto& c : v) c *= inv;
            return v;
        }
    }
}

std::vector<double> sample_paravector_off_axis(Rng& rng, int n, double alpha_lo, double alpha_hi,
                                               double beta_lo, double beta_hi) {
    std::vector<double> x(n + 1, 0.0);
    x[0] = rng.unif(alpha_lo, alpha_hi);
    double beta = rng.unif(beta_lo, beta_hi);
    std::vector<double> dir = rng.unit_vector(n);
    for (int i = 1; i <= n; ++i) x[i] = beta * dir[i - 1];
    return x;
}

std::vector<double> sample_quaternion_off_axis(Rng& rng, double alpha_lo, double alpha_hi,
                                               double beta_lo, double beta_hi) {
    return sample_paravector_off_axis(rng, 3, alpha_lo, alpha_hi, beta_lo, beta_hi);
}

std::vector<double> sample_shell4(Rng& rng, double r_lo, double r_hi) {
    std::vector<double> dir = rng.unit_vector(4);
    double r = rng.unif(r_lo, r_hi);
    for (auto& c : dir) c *= r;
    return dir;
}

Rat sample_rat(Rng& rng, int max_num, int den) {
    return Rat(rng.uniform_int(-max_num, max_num), den);
}

MvQ sample_rational_mv(Rng& rng, int n, int max_num, int den) {
    MvQ m(n);
    for (std::size_t i = 0; i < m.dim(); ++i) m[i] = sample_rat(rng, max_num, den);
    return m;
}

MvQ sample_rational_paravector(Rng& rng, int n, int max_num, int den) {
    std::vector<Rat> coords(n + 1);
    for (auto& c : coords) c = sample_rat(rng, max_num, den);
    return MvQ::paravector(n, coords);
}

MvQ sample_cone_r3(Rng& rng) {
    // x = x0 + x1 e1 + x2 e2 + x3 e3 + x12 e12 + x13 e13 + x23 e23 with
    // x23 solving x1*x23 - x2*x13 + x3*x12 = 0 (x1 != 0).
    Rat x1;
    do {
        x1 = sample_rat(rng, 8, 4);
    } while (x1 == 0);
    Rat x0 = sample_rat(rng, 8, 4);
    Rat x2 = sample_rat(rng, 8, 4);
    Rat x3 = sample_rat(rng, 8, 4);
    Rat x12 = sample_rat(rng, 8, 4);
    Rat x13 = sample_rat(rng, 8, 4);
    Rat x23 = (x2 * x13 - x3 * x12) / x1;
    MvQ m(3);
    m[0b000] = x0;
    m[0b001] = x1;
    m[0b010] = x2;
    m[0b100] = x3;
    m[0b011] = x12;
    m[0b101] = x13;
    m[0b110] = x23;
    return m;
}

std::vector<MvQ> random_poly_coeffs(Rng& rng, int n, int degree, int max_num, int den) {
    std::vector<MvQ> coeffs;
    coeffs.reserve(degree + 1);
    for (int m = 0; m <= degree; ++m) coeffs.push_back(sample_rational_mv(rng, n, max_num, den));
    return coeffs;
}

} // namespace slicecalc
