#include "slicecalc/harmonics.hpp"

#include <cmath>
#include <complex>

namespace slicecalc {

MvD paravector3(const Point4& x) {
    return MvD::paravector(3, std::vector<double>(x.begin(), x.end()));
}

MvD quaternion4(const Point4& x) {
    MvD q(2);
    q[0b00] = x[0];
    q[0b01] = x[1];
    q[0b10] = x[2];
    q[0b11] = x[3];
    return q;
}

MvD zonal_full(int m, const MvD& y) {
    if (m < 0) fail(errc::argument, "zonal harmonic degree must be nonnegative");
    return power_spherical_derivative(m + 1, y).scaled(static_cast<double>(m + 1));
}

namespace {

double abs4(const Point4& x) {
    return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
}

void check_pole(const Point4& a) {
    if (std::abs(abs4(a) - 1.0) > 1e-12) fail(errc::argument, "pole must lie on the unit sphere");
}

} // namespace

double zonal(int m, const Point4& x, const Point4& a) {
    check_pole(a);
    MvD y = product(paravector3(x), conjugate(paravector3(a)));
    return zonal_full(m, y).scalar_part();
}

double zonal_quaternion(int m, const Point4& x, const Point4& a) {
    check_pole(a);
    MvD y = product(quaternion4(x), conjugate(quaternion4(a)));
    return zonal_full(m, y).scalar_part();
}

double gegenbauer_c1(int k, double t) {
    if (k < 0) fail(errc::argument, "polynomial degree must be nonnegative");
    double prev = 1.0; // C_0
    if (k == 0) return prev;
    double cur = 2.0 * t; // C_1
    for (int i = 2; i <= k; ++i) {
        double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double poisson(const Point4& x, const Point4& a) {
    check_pole(a);
    double r = abs4(x);
    if (r >= 1.0) fail(errc::outside_domain, "Poisson kernel needs |x| < 1");
    double d2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        double v = x[i] - a[i];
        d2 += v * v;
    }
    return (1.0 - r * r) / (d2 * d2);
}

EvaluableField kelvin(const EvaluableField& f) {
    if (f.nvars() != 4) fail(errc::argument, "Kelvin transform acts on fields over R^4");
    EvaluableField g;
    g.frame = f.frame;
    auto inner = f;
    g.eval = [inner](const std::vector<double>& x) {
        double r2 = 0.0;
        for (double c : x) r2 += c * c;
        if (r2 == 0.0) fail(errc::outside_domain, "Kelvin transform is singular at the origin");
        std::vector<double> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] / r2;
        return inner.eval(y).scaled(1.0 / r2);
    };
    g.in_domain = [inner](const std::vector<double>& x) {
        double r2 = 0.0;
        for (double c : x) r2 += c * c;
        if (r2 == 0.0) return false;
        if (!inner.in_domain) return true;
        std::vector<double> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] / r2;
        return inner.in_domain(y);
    };
    return g;
}

MvD koebe(const MvD& x) {
    MvD one_minus = MvD::scalar(x.n(), 1.0) - x;
    try {
        return product(power(one_minus, -2), x);
    } catch (const error& e) {
        if (e.code() == errc::zero_norm) fail(errc::pole, "Koebe function has a pole at 1");
        throw;
    }
}

SliceFunction koebe_slice_function(int n) {
    using C = std::complex<double>;
    auto fn = [](C z) {
        C d = C(1.0, 0.0) - z;
        if (std::abs(d) < 1e-12) fail(errc::pole, "Koebe function has a pole at 1");
        return z / (d * d);
    };
    auto dfn = [](C z) {
        C d = C(1.0, 0.0) - z;
        if (std::abs(d) < 1e-12) fail(errc::pole, "Koebe function has a pole at 1");
        return (C(1.0, 0.0) + z) / (d * d * d);
    };
    return SliceFunction(holomorphic_stem(n, fn, dfn, PlanarDomain::plane()));
}

double koebe_spherical_derivative(const MvD& x) {
    return koebe_slice_function(x.n()).spherical_derivative(x).scalar_part();
}

MvD power_from_zonal(int m, const MvD& x) {
    if (m < 1) fail(errc::argument, "power reconstruction needs m >= 1");
    double zm = zonal_full(m, x).scalar_part();
    double zm1 = zonal_full(m - 1, x).scalar_part();
    return MvD::scalar(x.n(), zm / (m + 1)) - conjugate(x).scaled(zm1 / m);
}

double zonal_tail_bound(int m_max, double rho) {
    if (rho < 0.0 || rho >= 1.0) fail(errc::argument, "tail bound needs 0 <= rho < 1");
    double sum = 0.0;
    double rp = std::pow(rho, m_max + 1);
    for (int m = m_max + 1;; ++m) {
        double term = (m + 1.0) * (m + 1.0) * rp;
        sum += term;
        rp *= rho;
        if (term < 1e-18 * (1.0 + sum) || m > m_max + 100000) break;
    }
    return sum;
}

} // namespace slicecalc
