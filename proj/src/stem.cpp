#include "slicecalc/stem.hpp"

#include <algorithm>
#include <cmath>

namespace slicecalc {

PlanarDomain PlanarDomain::rectangle(double amin, double amax, double bmax) {
    PlanarDomain d;
    d.shape = Shape::rectangle;
    d.alpha_min = amin;
    d.alpha_max = amax;
    d.beta_max = bmax;
    return d;
}

PlanarDomain PlanarDomain::annulus(double r0, double r1, bool open_inner) {
    PlanarDomain d;
    d.shape = Shape::annulus;
    d.r_inner = r0;
    d.r_outer = r1;
    d.inner_open = open_inner;
    return d;
}

bool PlanarDomain::contains(double alpha, double beta) const {
    double b = std::abs(beta);
    if (exclude_real_axis && b == 0.0) return false;
    if (shape == Shape::rectangle)
        return alpha >= alpha_min && alpha <= alpha_max && b <= beta_max;
    double r = std::hypot(alpha, beta);
    if (inner_open ? r <= r_inner : r < r_inner) return false;
    return r <= r_outer;
}

// --- ExactStem ---------------------------------------------------------

namespace {

// Holomorphy of F = F1 + i F2 in profile form:
//   d/da G1 = G2 + 2 s d/ds G2   and   2 d/ds G1 = - d/da G2.
bool profiles_holomorphic(const CoordPoly& g1, const CoordPoly& g2) {
    CoordPoly s_var = CoordPoly::variable(2, g1.sig_n(), 1);
    CoordPoly lhs1 = g1.partial(0);
    CoordPoly rhs1 = g2 + (s_var * g2.partial(1)).scaled(Rat(2));
    if (!(lhs1 == rhs1)) return false;
    CoordPoly lhs2 = g1.partial(1).scaled(Rat(2));
    CoordPoly rhs2 = -g2.partial(0);
    return lhs2 == rhs2;
}

} // namespace

ExactStem::ExactStem(CoordPoly g1, CoordPoly g2, PlanarDomain dom)
    : g1_(std::move(g1)), g2_(std::move(g2)) {
    if (g1_.nvars() != 2 || g2_.nvars() != 2 || g1_.sig_n() != g2_.sig_n())
        fail(errc::argument, "stem profiles must be two-variable polynomials over one algebra");
    dom_ = dom;
    regular_ = profiles_holomorphic(g1_, g2_);
}

MvD ExactStem::f1(double alpha, double beta) const {
    return g1_.evaluate(std::vector<double>{alpha, beta * beta});
}

MvD ExactStem::f2(double alpha, double beta) const {
    return g2_.evaluate(std::vector<double>{alpha, beta * beta}).scaled(beta);
}

void ExactStem::g_partials(double alpha, double s, int k, MvD& g1k, MvD& g2k) const {
    CoordPoly d1 = g1_, d2 = g2_;
    for (int i = 0; i < k; ++i) {
        d1 = d1.partial(1);
        d2 = d2.partial(1);
    }
    std::vector<double> at{alpha, s};
    g1k = d1.evaluate(at);
    g2k = d2.evaluate(at);
}

void ExactStem::g_partials_exact(const Rat& alpha, const Rat& s, int k, MvQ& g1k, MvQ& g2k) const {
    CoordPoly d1 = g1_, d2 = g2_;
    for (int i = 0; i < k; ++i) {
        d1 = d1.partial(1);
        d2 = d2.partial(1);
    }
    std::vector<Rat> at{alpha, s};
    g1k = d1.evaluate(at);
    g2k = d2.evaluate(at);
}

std::shared_ptr<const Stem> ExactStem::derivative_z() const {
    CoordPoly s_var = CoordPoly::variable(2, g1_.sig_n(), 1);
    CoordPoly ng1 = (g1_.partial(0) + g2_ + (s_var * g2_.partial(1)).scaled(Rat(2))).scaled(Rat(1, 2));
    CoordPoly ng2 = (g2_.partial(0) - g1_.partial(1).scaled(Rat(2))).scaled(Rat(1, 2));
    return std::make_shared<ExactStem>(std::move(ng1), std::move(ng2), dom_);
}

std::shared_ptr<const Stem> ExactStem::derivative_zbar() const {
    CoordPoly s_var = CoordPoly::variable(2, g1_.sig_n(), 1);
    CoordPoly ng1 = (g1_.partial(0) - g2_ - (s_var * g2_.partial(1)).scaled(Rat(2))).scaled(Rat(1, 2));
    CoordPoly ng2 = (g2_.partial(0) + g1_.partial(1).scaled(Rat(2))).scaled(Rat(1, 2));
    return std::make_shared<ExactStem>(std::move(ng1), std::move(ng2), dom_);
}

// --- ClosedFormStem -----------------------------------------------------

ClosedFormStem::ClosedFormStem(int n, Parts parts, PlanarDomain dom)
    : n_(n), parts_(std::move(parts)) {
    if (!parts_.f1 || !parts_.f2) fail(errc::argument, "closed-form stem needs both components");
    dom_ = dom;
}

void ClosedFormStem::g_partials(double alpha, double s, int k, MvD& g1k, MvD& g2k) const {
    if (s <= 0.0) fail(errc::argument, "profile partials of a closed-form stem need s > 0");
    auto G1 = [&](double v) { return parts_.f1(alpha, std::sqrt(v)); };
    auto G2 = [&](double v) {
        double b = std::sqrt(v);
        return parts_.f2(alpha, b).scaled(1.0 / b);
    };
    double hs = std::min(1e-3 * (1.0 + s), s / 4.0);
    switch (k) {
        case 0:
            g1k = G1(s);
            g2k = G2(s);
            return;
        case 1:
            g1k = (G1(s + hs) - G1(s - hs)).scaled(1.0 / (2.0 * hs));
            g2k = (G2(s + hs) - G2(s - hs)).scaled(1.0 / (2.0 * hs));
            return;
        case 2:
            g1k = (G1(s + hs) - G1(s).scaled(2.0) + G1(s - hs)).scaled(1.0 / (hs * hs));
            g2k = (G2(s + hs) - G2(s).scaled(2.0) + G2(s - hs)).scaled(1.0 / (hs * hs));
            return;
        default:
            fail(errc::argument, "profile partial order must be 0, 1 or 2");
    }
}

std::shared_ptr<const Stem> ClosedFormStem::derivative_z() const {
    if (!parts_.df1_da || !parts_.df1_db || !parts_.df2_da || !parts_.df2_db)
        fail(errc::non_differentiable, "closed-form stem carries no planar partials");
    Parts p;
    Parts base = parts_;
    p.f1 = [base](double a, double b) { return (base.df1_da(a, b) + base.df2_db(a, b)).scaled(0.5); };
    p.f2 = [base](double a, double b) { return (base.df2_da(a, b) - base.df1_db(a, b)).scaled(0.5); };
    p.regular = parts_.regular;
    return std::make_shared<ClosedFormStem>(n_, std::move(p), dom_);
}

std::shared_ptr<const Stem> ClosedFormStem::derivative_zbar() const {
    if (!parts_.df1_da || !parts_.df1_db || !parts_.df2_da || !parts_.df2_db)
        fail(errc::non_differentiable, "closed-form stem carries no planar partials");
    Parts p;
    Parts base = parts_;
    p.f1 = [base](double a, double b) { return (base.df1_da(a, b) - base.df2_db(a, b)).scaled(0.5); };
    p.f2 = [base](double a, double b) { return (base.df2_da(a, b) + base.df1_db(a, b)).scaled(0.5); };
    p.regular = false;
    return std::make_shared<ClosedFormStem>(n_, std::move(p), dom_);
}

// --- TabulatedStem ------------------------------------------------------

TabulatedStem::TabulatedStem(int n, std::vector<Node> nodes, PlanarDomain dom)
    : n_(n), nodes_(std::move(nodes)) {
    dom_ = dom;
}

const TabulatedStem::Node& TabulatedStem::lookup(double alpha, double beta) const {
    for (const auto& node : nodes_)
        if (std::abs(node.alpha - alpha) <= 1e-12 && std::abs(node.beta - beta) <= 1e-12)
            return node;
    fail(errc::outside_domain, "tabulated stem has no node at the requested point");
}

// --- constructors -------------------------------------------------------

void power_stem_profiles(int m, const MvQ& a, CoordPoly& g1, CoordPoly& g2) {
    const int n = a.n();
    g1 = CoordPoly(2, n);
    g2 = CoordPoly(2, n);
    // Re(z^m) and Im(z^m)/beta, written in (alpha, beta^2)
    Int binom = 1;
    for (int j = 0; j <= m; ++j) {
        if (j > 0) binom = binom * (m - j + 1) / j;
        Rat c(binom);
        if ((j / 2) % 2 == 1) c = -c;
        Expo e(2, 0);
        e[0] = static_cast<std::uint8_t>(m - j);
        if (j % 2 == 0) {
            e[1] = static_cast<std::uint8_t>(j / 2);
            g1.add_term(e, a.scaled(c));
        } else {
            e[1] = static_cast<std::uint8_t>((j - 1) / 2);
            g2.add_term(e, a.scaled(c));
        }
    }
}

std::shared_ptr<const ExactStem> power_series_stem(int n, const std::vector<MvQ>& coeffs) {
    CoordPoly g1(2, n), g2(2, n);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m].n() != n) fail(errc::signature_mismatch, "coefficient from a different algebra");
        if (coeffs[m].is_zero()) continue;
        CoordPoly p1(2, n), p2(2, n);
        power_stem_profiles(static_cast<int>(m), coeffs[m], p1, p2);
        g1 += p1;
        g2 += p2;
    }
    return std::make_shared<ExactStem>(std::move(g1), std::move(g2));
}

std::shared_ptr<const ExactStem> conj_power_stem(int n, int m, const MvQ& a) {
    if (m < 0) fail(errc::argument, "conjugated power needs m >= 0");
    CoordPoly g1(2, n), g2(2, n);
    power_stem_profiles(m, a, g1, g2);
    return std::make_shared<ExactStem>(std::move(g1), -g2);
}

std::shared_ptr<const ClosedFormStem> holomorphic_stem(
    int n, std::function<std::complex<double>(std::complex<double>)> fn,
    std::function<std::complex<double>(std::complex<double>)> dfn, PlanarDomain dom) {
    using C = std::complex<double>;
    ClosedFormStem::Parts p;
    p.f1 = [n, fn](double a, double b) { return MvD::scalar(n, fn(C(a, b)).real()); };
    p.f2 = [n, fn](double a, double b) { return MvD::scalar(n, fn(C(a, b)).imag()); };
    if (dfn) {
        p.df1_da = [n, dfn](double a, double b) { return MvD::scalar(n, dfn(C(a, b)).real()); };
        p.df1_db = [n, dfn](double a, double b) { return MvD::scalar(n, -dfn(C(a, b)).imag()); };
        p.df2_da = [n, dfn](double a, double b) { return MvD::scalar(n, dfn(C(a, b)).imag()); };
        p.df2_db = [n, dfn](double a, double b) { return MvD::scalar(n, dfn(C(a, b)).real()); };
    }
    p.regular = true;
    return std::make_shared<ClosedFormStem>(n, std::move(p), dom);
}

} // namespace slicecalc
