#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slicecalc/coord_poly.hpp"
#include "slicecalc/slice_function.hpp"

namespace slicecalc {

// Central second-order differences; separate step for second derivatives.
struct FDScheme {
    double h = 1e-4;
    double laplacian_h = 1e-3;
    bool scale_by_point = true;

    double step(const std::vector<double>& x) const;
    double step2(const std::vector<double>& x) const;
};

// Multivector-valued function of frame coordinates with an optional domain
// predicate; wraps slice functions, exact polynomials and ad-hoc fields.
struct EvaluableField {
    CoordFrame frame;
    std::function<MvD(const std::vector<double>&)> eval;
    std::function<bool(const std::vector<double>&)> in_domain; // null = everywhere

    int nvars() const { return frame.nvars(); }
    bool contains(const std::vector<double>& x) const { return !in_domain || in_domain(x); }
    MvD point_mv(const std::vector<double>& x) const;       // sum x_i basis[i]
    MvD imaginary_mv(const std::vector<double>& x) const;   // sum_{i>=1} x_i basis[i]
};

EvaluableField make_field(const SliceFunction& f, const CoordFrame& frame);
EvaluableField make_poly_field(const CoordPoly& p, const CoordFrame& frame);

MvD fd_partial(const EvaluableField& f, const std::vector<double>& x, int i, const FDScheme& s);
MvD fd_second_partial(const EvaluableField& f, const std::vector<double>& x, int i,
                      const FDScheme& s);

// d/dx0 + sum basis[i] d/dxi and its conjugate.
MvD apply_cauchy_riemann_fd(const EvaluableField& f, const std::vector<double>& x,
                            const FDScheme& s);
MvD apply_cauchy_riemann_conj_fd(const EvaluableField& f, const std::vector<double>& x,
                                 const FDScheme& s);

// Global slice operator d/dx0 + Im(x)/|Im(x)|^2 sum_{i>=1} x_i d/dxi and its
// conjugate; undefined near the real axis (|Im(x)| >= 0.1 enforced).
MvD apply_global_slice_fd(const EvaluableField& f, const std::vector<double>& x,
                          const FDScheme& s);
MvD apply_global_slice_conj_fd(const EvaluableField& f, const std::vector<double>& x,
                               const FDScheme& s);

// Spherical Dirac operator -sum_{i<j} basis[i]basis[j] (x_i d/dxj - x_j d/dxi).
MvD apply_spherical_dirac_fd(const EvaluableField& f, const std::vector<double>& x,
                             const FDScheme& s);

MvD apply_laplacian_fd(const EvaluableField& f, const std::vector<double>& x, const FDScheme& s);

struct SampleResidual {
    std::vector<double> x;
    double residual = 0.0;
};

struct IdentityReport {
    std::string identity;
    int n = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    double tol = 0.0;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    bool pass = true;
    bool expect_fail = false; // negative controls: pass means the residual stayed large
    std::vector<SampleResidual> failures;

    void record(const std::vector<double>& x, double residual);
    void finalize(); // recomputes pass from the residuals
    void merge(const IdentityReport& other);

private:
    double residual_sum_ = 0.0;
    double min_residual_ = 0.0;
    bool any_ = false;

    friend IdentityReport merge_reports(IdentityReport, const IdentityReport&);
};

inline constexpr int kMaxRecordedFailures = 16;
inline constexpr double kWitnessResidualFloor = 0.5; // expect-fail checks must exceed this

// Residual checks of the first-order and Laplacian identities for slice
// functions restricted to paravectors; names:
//   teo1        global slice operator annihilates regular functions
//   teo2a       spherical Dirac vs spherical derivative
//   teo2b       Cauchy-Riemann minus global slice operator
//   cor1a       Cauchy-Riemann determines the spherical derivative (regular f)
//   cor1c       conjugate operators, value part
//   cor1c_sder  conjugate operators agree on the spherical derivative
//   laplacian_a Laplacian of f's via the profile partial
//   laplacian_c Laplacian of f's via the spherical value
//   vs_a        Laplacian of f°s via the profile partial
//   vs_c        Laplacian of f°s via d/dx0 of f's
//   cor2d       four-dimensional Laplacian vs slice derivative of f's (n = 3)
IdentityReport verify_identity(const std::string& name, const SliceFunction& f, int samples,
                               std::uint64_t seed, const FDScheme& scheme, double tol,
                               bool expect_fail = false);

const std::vector<std::string>& identity_names();

// Quaternionic counterparts on the full algebra (frame 1, e1, e2, e12), with
// samples drawn from all of the algebra; names:
//   propH_a, propH_b, corH_a, corH_c, corH_c_sder, teo12_c
IdentityReport verify_identity_quaternion(const std::string& name, const SliceFunction& f,
                                          int samples, std::uint64_t seed, const FDScheme& scheme,
                                          double tol, bool expect_fail = false);

const std::vector<std::string>& identity_names_quaternion();

} // namespace slicecalc
