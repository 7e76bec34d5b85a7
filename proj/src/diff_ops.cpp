#include "slicecalc/diff_ops.hpp"

#include <algorithm>
#include <cmath>

#include "slicecalc/sampling.hpp"

namespace slicecalc {

namespace {

double point_scale(const std::vector<double>& x) {
    double s = 0.0;
    for (double c : x) s += c * c;
    return 1.0 + std::sqrt(s);
}

} // namespace

double FDScheme::step(const std::vector<double>& x) const {
    if (h <= 0) fail(errc::argument, "step must be positive");
    return scale_by_point ? h * point_scale(x) : h;
}

double FDScheme::step2(const std::vector<double>& x) const {
    if (laplacian_h <= 0) fail(errc::argument, "step must be positive");
    return scale_by_point ? laplacian_h * point_scale(x) : laplacian_h;
}

MvD EvaluableField::point_mv(const std::vector<double>& x) const {
    MvD acc(frame.sig_n);
    for (int i = 0; i < nvars(); ++i) acc += frame.basis_floating(i).scaled(x[i]);
    return acc;
}

MvD EvaluableField::imaginary_mv(const std::vector<double>& x) const {
    MvD acc(frame.sig_n);
    for (int i = 1; i < nvars(); ++i) acc += frame.basis_floating(i).scaled(x[i]);
    return acc;
}

EvaluableField make_field(const SliceFunction& f, const CoordFrame& frame) {
    if (f.n() != frame.sig_n) fail(errc::signature_mismatch, "function and frame algebra differ");
    EvaluableField field;
    field.frame = frame;
    auto stem = f.stem_ptr();
    field.eval = [f, frame](const std::vector<double>& x) {
        EvaluableField tmp{frame, nullptr, nullptr};
        return f.eval(tmp.point_mv(x));
    };
    field.in_domain = [stem, frame](const std::vector<double>& x) {
        double alpha = x[0];
        double s = 0.0;
        for (int i = 1; i < frame.nvars(); ++i) s += x[i] * x[i];
        return stem->domain().contains(alpha, std::sqrt(s));
    };
    return field;
}

EvaluableField make_poly_field(const CoordPoly& p, const CoordFrame& frame) {
    if (p.nvars() != frame.nvars() || p.sig_n() != frame.sig_n)
        fail(errc::signature_mismatch, "polynomial and frame differ");
    EvaluableField field;
    field.frame = frame;
    field.eval = [p](const std::vector<double>& x) { return p.evaluate(x); };
    return field;
}

namespace {

void check_arity(const EvaluableField& f, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != f.nvars())
        fail(errc::argument, "coordinate arity does not match the field frame");
}

void check_margin(const EvaluableField& f, const std::vector<double>& x, int i, double margin) {
    if (!f.in_domain) return;
    std::vector<double> p = x;
    p[i] = x[i] + margin;
    bool ok = f.contains(p);
    p[i] = x[i] - margin;
    ok = ok && f.contains(p);
    if (!ok) fail(errc::outside_domain, "finite-difference stencil leaves the domain");
}

MvD eval_shifted(const EvaluableField& f, std::vector<double> x, int i, double delta) {
    x[i] += delta;
    return f.eval(x);
}

} // namespace

MvD fd_partial(const EvaluableField& f, const std::vector<double>& x, int i, const FDScheme& s) {
    check_arity(f, x);
    if (i < 0 || i >= f.nvars()) fail(errc::argument, "coordinate index out of range");
    double h = s.step(x);
    check_margin(f, x, i, 2.0 * h);
    return (eval_shifted(f, x, i, h) - eval_shifted(f, x, i, -h)).scaled(1.0 / (2.0 * h));
}

MvD fd_second_partial(const EvaluableField& f, const std::vector<double>& x, int i,
                      const FDScheme& s) {
    check_arity(f, x);
    if (i < 0 || i >= f.nvars()) fail(errc::argument, "coordinate index out of range");
    double h = s.step2(x);
    check_margin(f, x, i, 2.0 * h);
    MvD mid = f.eval(x);
    return (eval_shifted(f, x, i, h) - mid.scaled(2.0) + eval_shifted(f, x, i, -h))
        .scaled(1.0 / (h * h));
}

namespace {

std::vector<MvD> all_partials(const EvaluableField& f, const std::vector<double>& x,
                              const FDScheme& s) {
    std::vector<MvD> d;
    d.reserve(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) d.push_back(fd_partial(f, x, i, s));
    return d;
}

double imaginary_norm(const EvaluableField& f, const std::vector<double>& x) {
    double s = 0.0;
    for (int i = 1; i < f.nvars(); ++i) s += x[i] * x[i];
    return std::sqrt(s);
}

} // namespace

MvD apply_cauchy_riemann_fd(const EvaluableField& f, const std::vector<double>& x,
                            const FDScheme& s) {
    check_arity(f, x);
    MvD acc = fd_partial(f, x, 0, s);
    for (int i = 1; i < f.nvars(); ++i)
        acc += product(f.frame.basis_floating(i), fd_partial(f, x, i, s));
    return acc;
}

MvD apply_cauchy_riemann_conj_fd(const EvaluableField& f, const std::vector<double>& x,
                                 const FDScheme& s) {
    check_arity(f, x);
    MvD acc = fd_partial(f, x, 0, s);
    for (int i = 1; i < f.nvars(); ++i)
        acc -= product(f.frame.basis_floating(i), fd_partial(f, x, i, s));
    return acc;
}

namespace {

MvD global_slice_fd(const EvaluableField& f, const std::vector<double>& x, const FDScheme& s,
                    bool conj) {
    check_arity(f, x);
    double r = imaginary_norm(f, x);
    if (r < 0.1) fail(errc::near_real_axis, "global slice operator needs |Im(x)| >= 0.1");
    MvD radial(f.frame.sig_n);
    for (int i = 1; i < f.nvars(); ++i) radial += fd_partial(f, x, i, s).scaled(x[i]);
    MvD factor = f.imaginary_mv(x).scaled(1.0 / (r * r));
    MvD tail = product(factor, radial);
    MvD d0 = fd_partial(f, x, 0, s);
    return conj ? d0 - tail : d0 + tail;
}

} // namespace

MvD apply_global_slice_fd(const EvaluableField& f, const std::vector<double>& x,
                          const FDScheme& s) {
    return global_slice_fd(f, x, s, false);
}

MvD apply_global_slice_conj_fd(const EvaluableField& f, const std::vector<double>& x,
                               const FDScheme& s) {
    return global_slice_fd(f, x, s, true);
}

MvD apply_spherical_dirac_fd(const EvaluableField& f, const std::vector<double>& x,
                             const FDScheme& s) {
    check_arity(f, x);
    std::vector<MvD> d = all_partials(f, x, s);
    MvD acc(f.frame.sig_n);
    for (int i = 1; i < f.nvars(); ++i) {
        for (int j = i + 1; j < f.nvars(); ++j) {
            MvD lij = d[j].scaled(x[i]) - d[i].scaled(x[j]);
            acc -= product(product(f.frame.basis_floating(i), f.frame.basis_floating(j)), lij);
        }
    }
    return acc;
}

MvD apply_laplacian_fd(const EvaluableField& f, const std::vector<double>& x, const FDScheme& s) {
    check_arity(f, x);
    MvD acc(f.frame.sig_n);
    for (int i = 0; i < f.nvars(); ++i) acc += fd_second_partial(f, x, i, s);
    return acc;
}

// --- identity reports ----------------------------------------------------

void IdentityReport::record(const std::vector<double>& x, double residual) {
    samples += 1;
    residual_sum_ += residual;
    max_residual = std::max(max_residual, residual);
    min_residual_ = any_ ? std::min(min_residual_, residual) : residual;
    any_ = true;
    mean_residual = residual_sum_ / samples;
    // tol = 0 marks an exact check: any nonzero residual is a failure
    bool bad = expect_fail ? residual <= kWitnessResidualFloor
                           : (tol > 0 ? residual >= tol : residual != 0.0);
    if (bad && static_cast<int>(failures.size()) < kMaxRecordedFailures)
        failures.push_back({x, residual});
}

void IdentityReport::finalize() {
    if (!any_) {
        pass = !expect_fail;
        return;
    }
    if (expect_fail)
        pass = min_residual_ > kWitnessResidualFloor;
    else
        pass = tol > 0 ? max_residual < tol : max_residual == 0.0;
}

void IdentityReport::merge(const IdentityReport& other) {
    if (identity != other.identity || expect_fail != other.expect_fail)
        fail(errc::argument, "cannot merge reports of different identities");
    samples += other.samples;
    residual_sum_ += other.residual_sum_;
    max_residual = std::max(max_residual, other.max_residual);
    if (other.any_) {
        min_residual_ = any_ ? std::min(min_residual_, other.min_residual_) : other.min_residual_;
        any_ = true;
    }
    if (samples > 0) mean_residual = residual_sum_ / samples;
    for (const auto& f : other.failures)
        if (static_cast<int>(failures.size()) < kMaxRecordedFailures) failures.push_back(f);
    finalize();
}

// --- identity registry ----------------------------------------------------

namespace {

struct IdentityCtx {
    const SliceFunction& f;
    CoordFrame frame;
    FDScheme scheme;
    EvaluableField field;
    EvaluableField sval_field;
    EvaluableField sder_field;
    std::optional<SliceFunction> sder_slice_derivative;

    explicit IdentityCtx(const SliceFunction& fn, CoordFrame fr, const FDScheme& sc)
        : f(fn), frame(std::move(fr)), scheme(sc) {
        field = make_field(f, frame);
        sval_field = make_field(f.spherical_value_fn(), frame);
        sder_field = make_field(f.spherical_derivative_fn(), frame);
    }

    MvD point(const std::vector<double>& x) const { return field.point_mv(x); }
    MvD im(const std::vector<double>& x) const { return field.imaginary_mv(x); }
    double r(const std::vector<double>& x) const {
        double s = 0.0;
        for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * x[i];
        return std::sqrt(s);
    }
};

double identity_residual(const std::string& name, IdentityCtx& ctx,
                         const std::vector<double>& x) {
    const int dim = ctx.frame.nvars() - 1; // n for paravectors, 3 for quaternions
    const auto& f = ctx.f;
    const auto& sc = ctx.scheme;
    MvD xm = ctx.point(x);

    if (name == "teo1") return apply_global_slice_fd(ctx.field, x, sc).max_abs();
    if (name == "teo2a" || name == "propH_a") {
        double factor = (name == "teo2a") ? dim - 1 : 2.0;
        MvD lhs = apply_spherical_dirac_fd(ctx.field, x, sc);
        MvD rhs = product(ctx.im(x), f.spherical_derivative(xm)).scaled(factor);
        return max_abs_diff(lhs, rhs);
    }
    if (name == "teo2b" || name == "propH_b") {
        double factor = (name == "teo2b") ? 1.0 - dim : -2.0;
        MvD lhs = apply_cauchy_riemann_fd(ctx.field, x, sc) -
                  apply_global_slice_fd(ctx.field, x, sc);
        MvD rhs = f.spherical_derivative(xm).scaled(factor);
        return max_abs_diff(lhs, rhs);
    }
    if (name == "cor1a" || name == "corH_a") {
        double factor = (name == "cor1a") ? 1.0 - dim : -2.0;
        MvD lhs = apply_cauchy_riemann_fd(ctx.field, x, sc);
        MvD rhs = f.spherical_derivative(xm).scaled(factor);
        return max_abs_diff(lhs, rhs);
    }
    if (name == "cor1c" || name == "corH_c") {
        double factor = (name == "cor1c") ? dim - 1 : 2.0;
        MvD lhs = apply_cauchy_riemann_conj_fd(ctx.field, x, sc) -
                  apply_global_slice_conj_fd(ctx.field, x, sc);
        MvD rhs = f.spherical_derivative(xm).scaled(factor);
        return max_abs_diff(lhs, rhs);
    }
    if (name == "cor1c_sder" || name == "corH_c_sder") {
        MvD lhs = apply_global_slice_conj_fd(ctx.sder_field, x, sc);
        MvD rhs = apply_cauchy_riemann_conj_fd(ctx.sder_field, x, sc);
        return max_abs_diff(lhs, rhs);
    }
    if (name == "laplacian_a") {
        MvD lhs = apply_laplacian_fd(ctx.sder_field, x, sc);
        MvD g1k(f.n()), g2k(f.n());
        double rr = ctx.r(x);
        f.g_partials(x[0], rr * rr, 1, g1k, g2k);
        return max_abs_diff(lhs, g2k.scaled(2.0 * (dim - 3)));
    }
    if (name == "laplacian_c") {
        MvD lhs = apply_laplacian_fd(ctx.sder_field, x, sc);
        double rr = ctx.r(x);
        MvD rhs = (fd_partial(ctx.sval_field, x, 0, sc) - f.spherical_derivative(xm))
                      .scaled((dim - 3) / (rr * rr));
        return max_abs_diff(lhs, rhs);
    }
    if (name == "vs_a") {
        MvD lhs = apply_laplacian_fd(ctx.sval_field, x, sc);
        MvD g1k(f.n()), g2k(f.n());
        double rr = ctx.r(x);
        f.g_partials(x[0], rr * rr, 1, g1k, g2k);
        return max_abs_diff(lhs, g1k.scaled(2.0 * (dim - 1)));
    }
    if (name == "vs_c") {
        MvD lhs = apply_laplacian_fd(ctx.sval_field, x, sc);
        MvD rhs = fd_partial(ctx.sder_field, x, 0, sc).scaled(1.0 - dim);
        return max_abs_diff(lhs, rhs);
    }
    if (name == "cor2d" || name == "teo12_c") {
        if (name == "cor2d" && f.n() != 3)
            fail(errc::argument, "identity cor2d is specific to n = 3");
        if (!ctx.sder_slice_derivative)
            ctx.sder_slice_derivative = f.spherical_derivative_fn().slice_derivative();
        MvD lhs = apply_laplacian_fd(ctx.field, x, sc);
        MvD rhs = ctx.sder_slice_derivative->eval(xm).scaled(-4.0);
        return max_abs_diff(lhs, rhs);
    }
    fail(errc::unknown_identity, "unknown identity '" + name + "'");
}

const std::vector<std::string> kParavectorNames = {
    "teo1",       "teo2a",      "teo2b", "cor1a", "cor1c", "cor1c_sder",
    "laplacian_a", "laplacian_c", "vs_a",  "vs_c",  "cor2d"};

const std::vector<std::string> kQuaternionNames = {
    "propH_a", "propH_b", "corH_a", "corH_c", "corH_c_sder", "teo12_c"};

IdentityReport run_identity(const std::string& name, const SliceFunction& f, CoordFrame frame,
                            bool quaternion_sampling, int samples, std::uint64_t seed,
                            const FDScheme& scheme, double tol, bool expect_fail) {
    IdentityReport rep;
    rep.identity = name;
    rep.n = f.n();
    rep.seed = seed;
    rep.tol = tol;
    rep.expect_fail = expect_fail;
    IdentityCtx ctx(f, std::move(frame), scheme);
    Rng rng(seed);
    const int n = f.n();
    for (int k = 0; k < samples; ++k) {
        std::vector<double> x = quaternion_sampling ? sample_quaternion_off_axis(rng)
                                                    : sample_paravector_off_axis(rng, n);
        rep.record(x, identity_residual(name, ctx, x));
    }
    rep.finalize();
    return rep;
}

} // namespace

IdentityReport verify_identity(const std::string& name, const SliceFunction& f, int samples,
                               std::uint64_t seed, const FDScheme& scheme, double tol) {
    if (std::find(kParavectorNames.begin(), kParavectorNames.end(), name) ==
        kParavectorNames.end())
        fail(errc::unknown_identity, "unknown identity '" + name + "'");
    return run_identity(name, f, CoordFrame::paravector(f.n()), false, samples, seed, scheme, tol);
}

const std::vector<std::string>& identity_names() { return kParavectorNames; }

IdentityReport verify_identity_quaternion(const std::string& name, const SliceFunction& f,
                                          int samples, std::uint64_t seed, const FDScheme& scheme,
                                          double tol) {
    if (f.n() != 2) fail(errc::argument, "quaternionic identities need functions on R_{0,2}");
    if (std::find(kQuaternionNames.begin(), kQuaternionNames.end(), name) ==
        kQuaternionNames.end())
        fail(errc::unknown_identity, "unknown identity '" + name + "'");
    return run_identity(name, f, CoordFrame::quaternion(), true, samples, seed, scheme, tol);
}

const std::vector<std::string>& identity_names_quaternion() { return kQuaternionNames; }

} // namespace slicecalc
