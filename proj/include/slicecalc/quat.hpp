#pragma once

#include "slicecalc/diff_ops.hpp"

namespace slicecalc {

// Quaternion x0 + x1 i + x2 j + x3 k over the identification
// i = e1, j = e2, k = e12 inside R_{0,2}. The whole algebra is the quadratic
// cone, so every element decomposes as alpha + beta J.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    Quaternion() = default;
    Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    MvD to_mv() const {
        MvD m(2);
        m[0b00] = w;
        m[0b01] = x;
        m[0b10] = y;
        m[0b11] = z;
        return m;
    }

    static Quaternion from_mv(const MvD& m) {
        if (m.n() != 2) fail(errc::argument, "quaternions live in R_{0,2}");
        return Quaternion(m[0b00], m[0b01], m[0b10], m[0b11]);
    }
};

inline Quaternion quat_product(const Quaternion& a, const Quaternion& b) {
    return Quaternion::from_mv(product(a.to_mv(), b.to_mv()));
}

// Field of a slice function over quaternion coordinates.
inline EvaluableField make_field_quaternion(const SliceFunction& f) {
    return make_field(f, CoordFrame::quaternion());
}

// Cauchy-Riemann-Fueter operator d/dx0 + i d/dx1 + j d/dx2 + k d/dx3 and its
// conjugate; these are the frame Dirac operators of the quaternion frame.
inline MvD apply_crf_fd(const EvaluableField& f, const std::vector<double>& x, const FDScheme& s) {
    return apply_cauchy_riemann_fd(f, x, s);
}
inline MvD apply_crf_conj_fd(const EvaluableField& f, const std::vector<double>& x,
                             const FDScheme& s) {
    return apply_cauchy_riemann_conj_fd(f, x, s);
}

// Global slice operator on the full algebra and the quaternionic spherical
// Dirac operator -i L23 + j L13 - k L12.
inline MvD apply_global_slice_quaternion_fd(const EvaluableField& f, const std::vector<double>& x,
                                            const FDScheme& s) {
    return apply_global_slice_fd(f, x, s);
}
inline MvD apply_spherical_dirac_quaternion_fd(const EvaluableField& f,
                                               const std::vector<double>& x, const FDScheme& s) {
    return apply_spherical_dirac_fd(f, x, s);
}

} // namespace slicecalc
