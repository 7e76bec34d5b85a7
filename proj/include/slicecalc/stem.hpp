#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "slicecalc/coord_poly.hpp"

namespace slicecalc {

enum class StemKind { polynomial, closed_form, tabulated };

// Conjugation-symmetric planar domain descriptor: an axis-aligned rectangle
// symmetric in beta, or an annulus around the origin.
struct PlanarDomain {
    enum class Shape { rectangle, annulus };
    Shape shape = Shape::rectangle;
    double alpha_min = -std::numeric_limits<double>::infinity();
    double alpha_max = std::numeric_limits<double>::infinity();
    double beta_max = std::numeric_limits<double>::infinity();
    double r_inner = 0.0;
    double r_outer = std::numeric_limits<double>::infinity();
    bool inner_open = false;
    bool exclude_real_axis = false;

    static PlanarDomain plane() { return PlanarDomain{}; }
    static PlanarDomain rectangle(double amin, double amax, double bmax);
    static PlanarDomain annulus(double r0, double r1, bool open_inner = false);

    bool contains(double alpha, double beta) const;
};

// Stem function F = F1 + i F2 on a conjugation-symmetric planar domain, with
// F1 even and F2 odd in beta. Equivalently F1(a,b) = G1(a, b^2) and
// F2(a,b) = b G2(a, b^2); the profile functions G1, G2 drive the exact
// calculus, so they are part of the interface.
class Stem {
public:
    virtual ~Stem() = default;

    virtual StemKind kind() const = 0;
    virtual int n() const = 0;
    const PlanarDomain& domain() const { return dom_; }
    virtual bool is_slice_regular() const = 0;

    virtual MvD f1(double alpha, double beta) const = 0;
    virtual MvD f2(double alpha, double beta) const = 0;

    // k-th partial of G1 and G2 in the second slot, evaluated at (alpha, s);
    // k = 0 returns the values themselves.
    virtual void g_partials(double alpha, double s, int k, MvD& g1k, MvD& g2k) const = 0;

    virtual std::shared_ptr<const Stem> derivative_z() const = 0;
    virtual std::shared_ptr<const Stem> derivative_zbar() const = 0;

protected:
    PlanarDomain dom_ = PlanarDomain::plane();
};

// Stem with exact rational profile polynomials G1(a, s), G2(a, s); covers
// one-sided polynomials, conjugated powers and their combinations. All
// calculus on it is exact.
class ExactStem final : public Stem {
public:
    ExactStem(CoordPoly g1, CoordPoly g2, PlanarDomain dom = PlanarDomain::plane());

    StemKind kind() const override { return StemKind::polynomial; }
    int n() const override { return g1_.sig_n(); }
    bool is_slice_regular() const override { return regular_; }

    const CoordPoly& g1() const { return g1_; }
    const CoordPoly& g2() const { return g2_; }

    MvQ g1_at(const Rat& alpha, const Rat& s) const { return g1_.evaluate(std::vector<Rat>{alpha, s}); }
    MvQ g2_at(const Rat& alpha, const Rat& s) const { return g2_.evaluate(std::vector<Rat>{alpha, s}); }

    MvD f1(double alpha, double beta) const override;
    MvD f2(double alpha, double beta) const override;

    void g_partials(double alpha, double s, int k, MvD& g1k, MvD& g2k) const override;
    void g_partials_exact(const Rat& alpha, const Rat& s, int k, MvQ& g1k, MvQ& g2k) const;

    std::shared_ptr<const Stem> derivative_z() const override;
    std::shared_ptr<const Stem> derivative_zbar() const override;

private:
    CoordPoly g1_, g2_;
    bool regular_;
};

// Stem given by callables; used for non-polynomial functions. Planar partial
// derivatives are optional: without them the slice derivatives are
// unavailable and g_partials falls back to finite differences in s.
class ClosedFormStem final : public Stem {
public:
    using Field2 = std::function<MvD(double, double)>;

    struct Parts {
        Field2 f1, f2;               // required
        Field2 df1_da, df1_db;       // optional planar partials
        Field2 df2_da, df2_db;
        bool regular = false;        // caller-supplied regularity
    };

    ClosedFormStem(int n, Parts parts, PlanarDomain dom);

    StemKind kind() const override { return StemKind::closed_form; }
    int n() const override { return n_; }
    bool is_slice_regular() const override { return parts_.regular; }

    MvD f1(double alpha, double beta) const override { return parts_.f1(alpha, beta); }
    MvD f2(double alpha, double beta) const override { return parts_.f2(alpha, beta); }

    void g_partials(double alpha, double s, int k, MvD& g1k, MvD& g2k) const override;

    std::shared_ptr<const Stem> derivative_z() const override;
    std::shared_ptr<const Stem> derivative_zbar() const override;

private:
    int n_;
    Parts parts_;
};

// Sampled stem; evaluation only at the stored nodes. Kept outside the
// verification path.
class TabulatedStem final : public Stem {
public:
    struct Node {
        double alpha, beta;
        MvD f1, f2;
    };

    TabulatedStem(int n, std::vector<Node> nodes, PlanarDomain dom);

    StemKind kind() const override { return StemKind::tabulated; }
    int n() const override { return n_; }
    bool is_slice_regular() const override { return false; }

    MvD f1(double alpha, double beta) const override { return lookup(alpha, beta).f1; }
    MvD f2(double alpha, double beta) const override { return lookup(alpha, beta).f2; }

    void g_partials(double, double, int, MvD&, MvD&) const override {
        fail(errc::non_differentiable, "tabulated stem has no derivative data");
    }
    std::shared_ptr<const Stem> derivative_z() const override {
        fail(errc::non_differentiable, "tabulated stem has no derivative data");
    }
    std::shared_ptr<const Stem> derivative_zbar() const override {
        fail(errc::non_differentiable, "tabulated stem has no derivative data");
    }

private:
    const Node& lookup(double alpha, double beta) const;

    int n_;
    std::vector<Node> nodes_;
};

// G-profile of the power z^m with a right coefficient a.
void power_stem_profiles(int m, const MvQ& a, CoordPoly& g1, CoordPoly& g2);

// Stem of the one-sided polynomial sum_m z^m a_m.
std::shared_ptr<const ExactStem> power_series_stem(int n, const std::vector<MvQ>& coeffs);

// Stem of (conj z)^m a.
std::shared_ptr<const ExactStem> conj_power_stem(int n, int m, const MvQ& a);

// Slice-preserving stem of a holomorphic scalar function; the derivative
// callable feeds the planar partials.
std::shared_ptr<const ClosedFormStem> holomorphic_stem(
    int n, std::function<std::complex<double>(std::complex<double>)> fn,
    std::function<std::complex<double>(std::complex<double>)> dfn, PlanarDomain dom);

} // namespace slicecalc
