#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "slicecalc/errors.hpp"
#include "slicecalc/rational.hpp"

namespace slicecalc {

enum class Regime { exact, floating };

inline constexpr int kMaxGenerators = 8;

namespace blades {

// Reordering sign for the product of basis blades a and b (bitmask encoding,
// bit i-1 set <=> generator e_i present), times one factor -1 per generator
// shared by a and b (e_i^2 = -1). Result blade is a ^ b.
inline int product_sign(unsigned a, unsigned b) {
    int swaps = 0;
    unsigned t = a >> 1;
    while (t != 0) {
        swaps += std::popcount(t & b);
        t >>= 1;
    }
    swaps += std::popcount(a & b); // negative-signature metric factors
    return (swaps & 1) ? -1 : 1;
}

inline int grade(unsigned mask) { return std::popcount(mask); }

// Clifford conjugation sign on a grade-k blade: (-1)^{k(k+1)/2}.
inline int conjugation_sign(unsigned mask) {
    int k = grade(mask);
    return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

inline std::string name(unsigned mask) {
    if (mask == 0) return "1";
    std::string s = "e";
    for (int i = 0; i < kMaxGenerators; ++i)
        if (mask & (1u << i)) s += static_cast<char>('1' + i);
    return s;
}

} // namespace blades

template <class S>
class Mv {
    static_assert(std::is_same_v<S, Rat> || std::is_same_v<S, double>);

public:
    static constexpr Regime regime =
        std::is_same_v<S, Rat> ? Regime::exact : Regime::floating;

    explicit Mv(int n) : n_(n) {
        if (n < 1 || n > kMaxGenerators) fail(errc::argument, "generator count must be in [1,8]");
        c_.assign(std::size_t{1} << n, S{});
    }

    static Mv scalar(int n, S v) {
        Mv m(n);
        m.c_[0] = std::move(v);
        return m;
    }

    static Mv basis(int n, unsigned mask) {
        Mv m(n);
        if (mask >= m.dim()) fail(errc::argument, "blade index out of range");
        m.c_[mask] = S(1);
        return m;
    }

    // x0 + x1 e1 + ... + xn en
    static Mv paravector(int n, const std::vector<S>& coords) {
        if (static_cast<int>(coords.size()) != n + 1)
            fail(errc::argument, "paravector needs n+1 coordinates");
        Mv m(n);
        m.c_[0] = coords[0];
        for (int i = 1; i <= n; ++i) m.c_[std::size_t{1} << (i - 1)] = coords[i];
        return m;
    }

    int n() const { return n_; }
    std::size_t dim() const { return c_.size(); }

    const S& operator[](std::size_t mask) const { return c_[mask]; }
    S& operator[](std::size_t mask) { return c_[mask]; }
    const std::vector<S>& coeffs() const { return c_; }

    bool same_shape(const Mv& o) const { return n_ == o.n_; }

    Mv& operator+=(const Mv& o) {
        check_shape(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Mv& operator-=(const Mv& o) {
        check_shape(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Mv operator+(Mv a, const Mv& b) { return a += b; }
    friend Mv operator-(Mv a, const Mv& b) { return a -= b; }
    Mv operator-() const {
        Mv r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Mv scaled(const S& k) const {
        Mv r(*this);
        for (auto& v : r.c_) v *= k;
        return r;
    }

    bool operator==(const Mv& o) const { return n_ == o.n_ && c_ == o.c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != S{}) return false;
        return true;
    }

    const S& scalar_part() const { return c_[0]; }

    // Largest coefficient magnitude, as a double (used for tolerances and residuals).
    double max_abs() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, std::abs(to_double(v)));
        return m;
    }

    // Euclidean length of the coefficient vector.
    double frobenius() const {
        double s = 0.0;
        for (const auto& v : c_) {
            double d = to_double(v);
            s += d * d;
        }
        return std::sqrt(s);
    }

    void check_shape(const Mv& o) const {
        if (!same_shape(o)) fail(errc::signature_mismatch, "operands from different algebras");
    }

private:
    int n_;
    std::vector<S> c_;
};

using MvQ = Mv<Rat>;
using MvD = Mv<double>;

template <class S>
Mv<S> product(const Mv<S>& a, const Mv<S>& b) {
    a.check_shape(b);
    Mv<S> r(a.n());
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == S{}) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == S{}) continue;
            S term = a[i] * b[j];
            if (blades::product_sign(static_cast<unsigned>(i), static_cast<unsigned>(j)) < 0)
                r[i ^ j] -= term;
            else
                r[i ^ j] += term;
        }
    }
    return r;
}

template <class S>
Mv<S> conjugate(const Mv<S>& x) {
    Mv<S> r(x);
    for (std::size_t i = 0; i < r.dim(); ++i)
        if (blades::conjugation_sign(static_cast<unsigned>(i)) < 0) r[i] = -r[i];
    return r;
}

template <class S>
Mv<S> trace(const Mv<S>& x) {
    return x + conjugate(x);
}

template <class S>
Mv<S> norm(const Mv<S>& x) {
    return product(x, conjugate(x));
}

template <class S>
Mv<S> real_part(const Mv<S>& x) {
    return trace(x).scaled(S(1) / S(2));
}

template <class S>
Mv<S> imaginary_part(const Mv<S>& x) {
    return (x - conjugate(x)).scaled(S(1) / S(2));
}

// True iff trace and norm are real: exact test in the rational regime, absolute
// tolerance scaled by (1 + |x|^2) in the floating regime.
template <class S>
bool in_quadratic_cone(const Mv<S>& x, double tol = 1e-10) {
    const Mv<S> t = trace(x);
    const Mv<S> nx = norm(x);
    if constexpr (Mv<S>::regime == Regime::exact) {
        (void)tol;
        for (std::size_t i = 1; i < x.dim(); ++i)
            if (t[i] != S{} || nx[i] != S{}) return false;
        return true;
    } else {
        double scale = 1.0;
        for (std::size_t i = 0; i < x.dim(); ++i) scale += x[i] * x[i];
        const double bound = tol * scale;
        for (std::size_t i = 1; i < x.dim(); ++i)
            if (std::abs(t[i]) > bound || std::abs(nx[i]) > bound) return false;
        return true;
    }
}

template <class S>
struct ConeDecomposition {
    S alpha{};                          // Re(x)
    S beta{};                           // |Im(x)|, zero at real points
    std::optional<Mv<S>> unit_imaginary; // J with t(J)=0, n(J)=1; unset when beta = 0
};

// Squared imaginary radius |Im(x)|^2 = n(Im(x)), exact in the rational regime.
template <class S>
S imaginary_radius_sq(const Mv<S>& x) {
    Mv<S> im = imaginary_part(x);
    Mv<S> nim = norm(im);
    return nim.scalar_part();
}

template <class S>
ConeDecomposition<S> decompose(const Mv<S>& x, double cone_tol = 1e-10) {
    if (!in_quadratic_cone(x, cone_tol)) fail(errc::not_in_cone, "decompose: element not in the quadratic cone");
    ConeDecomposition<S> d;
    d.alpha = x.scalar_part();
    Mv<S> im = imaginary_part(x);
    S s2 = norm(im).scalar_part();
    if constexpr (Mv<S>::regime == Regime::exact) {
        if (s2 == S{}) return d;
        auto b = exact_sqrt(s2);
        if (!b) fail(errc::not_representable, "decompose: |Im(x)| is irrational in the exact regime");
        d.beta = *b;
        d.unit_imaginary = im.scaled(S(1) / d.beta);
    } else {
        if (s2 < 0) s2 = 0;
        double b = std::sqrt(s2);
        if (b < 1e-12 * (1.0 + x.frobenius())) return d; // treated as a real point
        d.beta = b;
        d.unit_imaginary = im.scaled(1.0 / b);
    }
    return d;
}

// x^c / n(x), defined on cone elements with nonzero norm.
template <class S>
Mv<S> inverse(const Mv<S>& x, double cone_tol = 1e-10) {
    if (!in_quadratic_cone(x, cone_tol)) fail(errc::not_in_cone, "inverse: element not in the quadratic cone");
    S nx = norm(x).scalar_part();
    if constexpr (Mv<S>::regime == Regime::exact) {
        if (nx == S{}) fail(errc::zero_norm, "inverse: zero norm");
    } else {
        if (nx == 0.0) fail(errc::zero_norm, "inverse: zero norm");
    }
    return conjugate(x).scaled(S(1) / nx);
}

template <class S>
Mv<S> power(const Mv<S>& x, int m, double cone_tol = 1e-10) {
    if (m < 0) return power(inverse(x, cone_tol), -m);
    Mv<S> r = Mv<S>::scalar(x.n(), S(1));
    for (int i = 0; i < m; ++i) r = product(r, x);
    return r;
}

inline MvD to_floating(const MvQ& x) {
    MvD r(x.n());
    for (std::size_t i = 0; i < x.dim(); ++i) r[i] = to_double(x[i]);
    return r;
}

template <class S>
double max_abs_diff(const Mv<S>& a, const Mv<S>& b) {
    return (a - b).max_abs();
}

std::string to_string(const MvQ& x);
std::string to_string(const MvD& x);

// Paravector x0 + x1 e1 + ... + xn en as a coordinate tuple.
template <class S>
struct Paravector {
    int n = 0;
    std::vector<S> coords; // n+1 entries

    Paravector() = default;
    Paravector(int n_, std::vector<S> c) : n(n_), coords(std::move(c)) {
        if (static_cast<int>(coords.size()) != n + 1)
            fail(errc::argument, "paravector needs n+1 coordinates");
    }
    Mv<S> to_mv() const { return Mv<S>::paravector(n, coords); }
};

} // namespace slicecalc
