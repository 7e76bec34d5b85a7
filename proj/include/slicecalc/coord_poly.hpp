#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slicecalc/multivector.hpp"

namespace slicecalc {

// Coordinate frame for polynomial variables: coordinate i stands next to the
// unit multivector basis[i]. Two frames are used: x0 + x1 e1 + ... + xn en
// (paravectors of R_{0,n}) and x0 + x1 e1 + x2 e2 + x3 e12 (the quaternions
// inside R_{0,2}).
struct CoordFrame {
    int sig_n = 0;
    std::vector<MvQ> basis;

    static CoordFrame paravector(int n);
    static CoordFrame quaternion();

    int nvars() const { return static_cast<int>(basis.size()); }
    MvD basis_floating(int i) const { return to_floating(basis[i]); }
};

using Expo = std::vector<std::uint8_t>;

// Graded-lex with the highest-degree, lexicographically largest exponent first;
// fixes both the storage and the rendering order.
struct TermOrder {
    bool operator()(const Expo& a, const Expo& b) const;
};

inline constexpr int kDegreeCap = 64;

// Multivariate polynomial in real coordinates with exact rational Multivector
// coefficients. Coordinates commute with everything; coefficient order matters.
class CoordPoly {
public:
    using TermMap = std::map<Expo, MvQ, TermOrder>;

    CoordPoly(int nvars, int sig_n);
    static CoordPoly constant(int nvars, MvQ c);
    static CoordPoly variable(int nvars, int sig_n, int i);

    int nvars() const { return nvars_; }
    int sig_n() const { return sig_n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial

    void add_term(const Expo& e, const MvQ& c);

    CoordPoly& operator+=(const CoordPoly& o);
    CoordPoly& operator-=(const CoordPoly& o);
    friend CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
    friend CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
    CoordPoly operator-() const;
    CoordPoly operator*(const CoordPoly& o) const;
    bool operator==(const CoordPoly& o) const;

    CoordPoly scaled(const Rat& k) const;
    CoordPoly mul_left(const MvQ& u) const;  // u (x) coefficient, per term
    CoordPoly mul_right(const MvQ& u) const; // coefficient (x) u, per term

    CoordPoly partial(int i) const;
    CoordPoly laplacian() const; // sum of second partials over all coordinates
    CoordPoly iterated_laplacian(int k) const;

    MvQ evaluate(const std::vector<Rat>& coords) const;
    MvD evaluate(const std::vector<double>& coords) const;

    std::string render_plain() const;
    // Pulls out the signed rational content when it is not +-1, e.g.
    // "-2*(3*x0^2 - x1^2 - x2^2 - x3^2)"; falls back to render_plain.
    std::string render() const;

private:
    void check_compat(const CoordPoly& o) const;

    int nvars_;
    int sig_n_;
    TermMap terms_;
};

// Conjugates every coefficient (the coordinates are real).
CoordPoly conjugate_coeffs(const CoordPoly& p);

// First-order Dirac-type operators in a frame, coefficients multiplied on the left:
//   apply_cauchy_riemann:       d/dx0 p + sum_{i>=1} basis[i] (x) d/dxi p
//   apply_cauchy_riemann_conj:  d/dx0 p - sum_{i>=1} basis[i] (x) d/dxi p
CoordPoly apply_cauchy_riemann(const CoordPoly& p, const CoordFrame& f);
CoordPoly apply_cauchy_riemann_conj(const CoordPoly& p, const CoordFrame& f);

// Angular momentum L_ij = x_i d/dx_j - x_j d/dx_i (1 <= i < j < nvars).
CoordPoly apply_angular(const CoordPoly& p, int i, int j);

// Spherical Dirac operator -sum_{1<=i<j} (basis[i] basis[j]) (x) L_ij p.
CoordPoly apply_spherical_dirac(const CoordPoly& p, const CoordFrame& f);

// Laplace-Beltrami operator sum_{1<=i<j} L_ij^2 p.
CoordPoly apply_laplace_beltrami(const CoordPoly& p);

// (x0 basis[0] + ... + x_{v-1} basis[v-1])^m and the same power of the
// conjugated variable.
CoordPoly expand_power(const CoordFrame& f, int m);
CoordPoly expand_power_conj(const CoordFrame& f, int m);

// sum_{k=0}^{m-1} x^{m-1-k} (x^c)^k, expanded in frame coordinates; real
// scalar coefficients, homogeneous of degree m-1.
CoordPoly spherical_derivative_poly(const CoordFrame& f, int m);

// (x^m + (x^m)^c)/2 in frame coordinates.
CoordPoly spherical_value_poly(const CoordFrame& f, int m);

// Substitutes (u, v) -> (x0, x1^2 + ... + x_{v-1}^2) into a two-variable
// polynomial g(u, v).
CoordPoly expand_radial(const CoordPoly& g, const CoordFrame& f);

} // namespace slicecalc
