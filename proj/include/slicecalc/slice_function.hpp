#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slicecalc/stem.hpp"

namespace slicecalc {

// Slice function induced by a stem: x = alpha + beta J maps to
// F1(alpha, beta) + J F2(alpha, beta) on the quadratic cone.
class SliceFunction {
public:
    explicit SliceFunction(std::shared_ptr<const Stem> stem);

    // f(x) = sum_m x^m a_m
    static SliceFunction polynomial(int n, std::vector<MvQ> coeffs);
    // f(x) = (x^c)^m a
    static SliceFunction conj_power(int n, int m, MvQ a);

    int n() const { return stem_->n(); }
    StemKind kind() const { return stem_->kind(); }
    bool is_regular() const { return stem_->is_slice_regular(); }
    const Stem& stem() const { return *stem_; }
    std::shared_ptr<const Stem> stem_ptr() const { return stem_; }
    const ExactStem* exact_stem() const { return dynamic_cast<const ExactStem*>(stem_.get()); }
    const std::optional<std::vector<MvQ>>& power_coeffs() const { return power_coeffs_; }

    MvD eval(const MvD& x) const;
    MvQ eval(const MvQ& x) const;

    MvD spherical_value(const MvD& x) const;
    MvQ spherical_value(const MvQ& x) const;
    MvD spherical_derivative(const MvD& x) const;
    MvQ spherical_derivative(const MvQ& x) const;

    // f°s(x) + Im(x) f's(x); equals eval(x)
    MvD representation(const MvD& x) const;
    MvQ representation(const MvQ& x) const;

    SliceFunction slice_derivative() const;      // induced by dF/dz
    SliceFunction slice_derivative_conj() const; // induced by dF/d(conj z)

    SliceFunction spherical_derivative_fn() const; // f's as a slice function
    SliceFunction spherical_value_fn() const;      // f°s as a slice function

    void g_partials(double alpha, double s, int k, MvD& g1k, MvD& g2k) const;
    void g_partials(const Rat& alpha, const Rat& s, int k, MvQ& g1k, MvQ& g2k) const;

private:
    std::shared_ptr<const Stem> stem_;
    std::optional<std::vector<MvQ>> power_coeffs_;
};

// Closed form for the spherical derivative of x^m: the Cauchy-type sum
// sum_{k=0}^{m-1} x^{m-1-k} (x^c)^k for m >= 1, extended to negative m on
// invertible cone elements.
template <class S>
Mv<S> power_spherical_derivative(int m, const Mv<S>& x) {
    if (m == 0) fail(errc::argument, "power spherical derivative needs m != 0");
    if (m < 0) {
        if (!in_quadratic_cone(x)) fail(errc::not_in_cone, "negative power needs a cone element");
        S nx = norm(x).scalar_part();
        if (nx == S{}) fail(errc::zero_norm, "negative power of a null element");
        Mv<S> pos = power_spherical_derivative(-m, x);
        S scale = S(1);
        for (int i = 0; i < -m; ++i) scale *= nx;
        return (-pos).scaled(S(1) / scale);
    }
    const Mv<S> xc = conjugate(x);
    Mv<S> xp = Mv<S>::scalar(x.n(), S(1)); // x^{m-1-k}, built downward
    std::vector<Mv<S>> xcp;                // (x^c)^k
    xcp.reserve(m);
    Mv<S> c = Mv<S>::scalar(x.n(), S(1));
    for (int k = 0; k < m; ++k) {
        xcp.push_back(c);
        if (k + 1 < m) c = product(c, xc);
    }
    Mv<S> acc(x.n());
    for (int k = m - 1; k >= 0; --k) {
        acc += product(xp, xcp[static_cast<std::size_t>(k)]);
        if (k > 0) xp = product(xp, x);
    }
    return acc;
}

// Same value through traces and norms:
// sum_nu t(x^{m-1-2nu}) n(x)^nu, plus n(x)^{(m-1)/2} when m is odd.
template <class S>
Mv<S> power_spherical_derivative_tn(int m, const Mv<S>& x) {
    if (m < 1) fail(errc::argument, "trace-norm form needs m >= 1");
    if (!in_quadratic_cone(x)) fail(errc::not_in_cone, "trace-norm form needs a cone element");
    S nx = norm(x).scalar_part();
    Mv<S> acc(x.n());
    S npow(1);
    for (int nu = 0; 2 * nu <= m - 2; ++nu) {
        acc += trace(power(x, m - 1 - 2 * nu)).scaled(npow);
        npow *= nx;
    }
    if (m % 2 == 1) {
        S half(1);
        for (int i = 0; i < (m - 1) / 2; ++i) half *= nx;
        acc += Mv<S>::scalar(x.n(), half);
    }
    return acc;
}

// JSON form {"n": int, "coeffs": [[[blade, num, den], ...], ...]}, one inner
// list of blade triples per degree.
SliceFunction slice_from_json(const std::string& json_text);
std::string slice_to_json(const SliceFunction& f);

// Coordinate expansion of an exact slice function over a frame.
CoordPoly expand_slice(const SliceFunction& f, const CoordFrame& frame);

} // namespace slicecalc
