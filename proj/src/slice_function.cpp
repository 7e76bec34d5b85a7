#include "slicecalc/slice_function.hpp"

#include <cmath>

#include <json.hpp>

namespace slicecalc {

SliceFunction::SliceFunction(std::shared_ptr<const Stem> stem) : stem_(std::move(stem)) {
    if (!stem_) fail(errc::argument, "null stem");
}

SliceFunction SliceFunction::polynomial(int n, std::vector<MvQ> coeffs) {
    SliceFunction f(power_series_stem(n, coeffs));
    f.power_coeffs_ = std::move(coeffs);
    return f;
}

SliceFunction SliceFunction::conj_power(int n, int m, MvQ a) {
    return SliceFunction(conj_power_stem(n, m, a));
}

namespace {

struct ConePointD {
    double alpha, beta;
    MvD im; // beta * J
};

ConePointD classify(const MvD& x) {
    if (!in_quadratic_cone(x)) fail(errc::not_in_cone, "point not in the quadratic cone");
    ConePointD p{x.scalar_part(), 0.0, imaginary_part(x)};
    double s = norm(p.im).scalar_part();
    double b = s > 0 ? std::sqrt(s) : 0.0;
    if (b >= 1e-12 * (1.0 + x.frobenius())) p.beta = b;
    return p;
}

void check_domain(const Stem& stem, double alpha, double beta) {
    if (!stem.domain().contains(alpha, beta))
        fail(errc::outside_domain, "point outside the stem domain");
}

} // namespace

MvD SliceFunction::eval(const MvD& x) const {
    ConePointD p = classify(x);
    check_domain(*stem_, p.alpha, p.beta);
    if (p.beta == 0.0) {
        MvD f2v = stem_->f2(p.alpha, 0.0);
        MvD f1v = stem_->f1(p.alpha, 0.0);
        if (f2v.max_abs() > 1e-9 * (1.0 + f1v.max_abs()))
            fail(errc::argument, "stem component F2 does not vanish on the real axis");
        return f1v;
    }
    MvD j = p.im.scaled(1.0 / p.beta);
    return stem_->f1(p.alpha, p.beta) + product(j, stem_->f2(p.alpha, p.beta));
}

MvQ SliceFunction::eval(const MvQ& x) const {
    const ExactStem* es = exact_stem();
    if (!es) fail(errc::argument, "exact evaluation needs an exact stem");
    if (!in_quadratic_cone(x)) fail(errc::not_in_cone, "point not in the quadratic cone");
    Rat alpha = x.scalar_part();
    MvQ im = imaginary_part(x);
    Rat s = norm(im).scalar_part();
    check_domain(*stem_, to_double(alpha), std::sqrt(std::max(0.0, to_double(s))));
    return es->g1_at(alpha, s) + product(im, es->g2_at(alpha, s));
}

MvD SliceFunction::spherical_value(const MvD& x) const {
    ConePointD p = classify(x);
    check_domain(*stem_, p.alpha, p.beta);
    return stem_->f1(p.alpha, p.beta);
}

MvQ SliceFunction::spherical_value(const MvQ& x) const {
    const ExactStem* es = exact_stem();
    if (!es) fail(errc::argument, "exact evaluation needs an exact stem");
    if (!in_quadratic_cone(x)) fail(errc::not_in_cone, "point not in the quadratic cone");
    Rat s = imaginary_radius_sq(x);
    check_domain(*stem_, to_double(x.scalar_part()), std::sqrt(std::max(0.0, to_double(s))));
    return es->g1_at(x.scalar_part(), s);
}

MvD SliceFunction::spherical_derivative(const MvD& x) const {
    ConePointD p = classify(x);
    check_domain(*stem_, p.alpha, p.beta);
    if (p.beta == 0.0) {
        // On the real axis the spherical derivative continues with the slice
        // derivative, which exists only for slice-regular stems.
        if (!is_regular())
            fail(errc::real_point_derivative, "spherical derivative of a non-regular stem at a real point");
        if (const ExactStem* es = exact_stem()) {
            MvD g1v, g2v;
            es->g_partials(p.alpha, 0.0, 0, g1v, g2v);
            return g2v;
        }
        return stem_->derivative_z()->f1(p.alpha, 0.0);
    }
    return stem_->f2(p.alpha, p.beta).scaled(1.0 / p.beta);
}

MvQ SliceFunction::spherical_derivative(const MvQ& x) const {
    const ExactStem* es = exact_stem();
    if (!es) fail(errc::argument, "exact evaluation needs an exact stem");
    if (!in_quadratic_cone(x)) fail(errc::not_in_cone, "point not in the quadratic cone");
    Rat s = imaginary_radius_sq(x);
    check_domain(*stem_, to_double(x.scalar_part()), std::sqrt(std::max(0.0, to_double(s))));
    if (s == 0 && !is_regular())
        fail(errc::real_point_derivative, "spherical derivative of a non-regular stem at a real point");
    return es->g2_at(x.scalar_part(), s);
}

MvD SliceFunction::representation(const MvD& x) const {
    return spherical_value(x) + product(imaginary_part(x), spherical_derivative(x));
}

MvQ SliceFunction::representation(const MvQ& x) const {
    return spherical_value(x) + product(imaginary_part(x), spherical_derivative(x));
}

SliceFunction SliceFunction::slice_derivative() const {
    if (power_coeffs_) {
        std::vector<MvQ> d;
        for (std::size_t m = 1; m < power_coeffs_->size(); ++m)
            d.push_back((*power_coeffs_)[m].scaled(Rat(static_cast<int>(m))));
        if (d.empty()) d.push_back(MvQ(n()));
        return polynomial(n(), std::move(d));
    }
    return SliceFunction(stem_->derivative_z());
}

SliceFunction SliceFunction::slice_derivative_conj() const {
    return SliceFunction(stem_->derivative_zbar());
}

SliceFunction SliceFunction::spherical_derivative_fn() const {
    if (const ExactStem* es = exact_stem())
        return SliceFunction(std::make_shared<ExactStem>(es->g2(), CoordPoly(2, n()), stem_->domain()));
    auto base = stem_;
    ClosedFormStem::Parts p;
    p.f1 = [base](double a, double b) {
        MvD g1v(base->n()), g2v(base->n());
        base->g_partials(a, b * b, 0, g1v, g2v);
        return g2v;
    };
    p.f2 = [base](double a, double b) {
        (void)a;
        (void)b;
        return MvD(base->n());
    };
    PlanarDomain dom = stem_->domain();
    dom.exclude_real_axis = true; // G2 of a closed-form stem needs beta > 0
    return SliceFunction(std::make_shared<ClosedFormStem>(n(), std::move(p), dom));
}

SliceFunction SliceFunction::spherical_value_fn() const {
    if (const ExactStem* es = exact_stem())
        return SliceFunction(std::make_shared<ExactStem>(es->g1(), CoordPoly(2, n()), stem_->domain()));
    auto base = stem_;
    ClosedFormStem::Parts p;
    p.f1 = [base](double a, double b) { return base->f1(a, b); };
    p.f2 = [base](double a, double b) {
        (void)a;
        (void)b;
        return MvD(base->n());
    };
    return SliceFunction(std::make_shared<ClosedFormStem>(n(), std::move(p), stem_->domain()));
}

void SliceFunction::g_partials(double alpha, double s, int k, MvD& g1k, MvD& g2k) const {
    stem_->g_partials(alpha, s, k, g1k, g2k);
}

void SliceFunction::g_partials(const Rat& alpha, const Rat& s, int k, MvQ& g1k, MvQ& g2k) const {
    const ExactStem* es = exact_stem();
    if (!es) fail(errc::argument, "exact profile partials need an exact stem");
    es->g_partials_exact(alpha, s, k, g1k, g2k);
}

// --- serialization ------------------------------------------------------

namespace {

Int json_int(const nlohmann::json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return Int(v.get<std::string>());
    fail(errc::parse, "expected an integer or integer string");
}

nlohmann::json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

} // namespace

SliceFunction slice_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse, "malformed JSON");
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs"))
        fail(errc::parse, "polynomial JSON needs fields 'n' and 'coeffs'");
    int n = j.at("n").get<int>();
    if (n < 1 || n > kMaxGenerators) fail(errc::parse, "field 'n' out of range");
    if (!j.at("coeffs").is_array()) fail(errc::parse, "'coeffs' must be an array");
    std::vector<MvQ> coeffs;
    for (const auto& degree : j.at("coeffs")) {
        if (!degree.is_array()) fail(errc::parse, "each degree entry must be an array of triples");
        MvQ c(n);
        for (const auto& triple : degree) {
            if (!triple.is_array() || triple.size() != 3)
                fail(errc::parse, "blade entries must be [blade, numerator, denominator]");
            auto blade = triple.at(0).get<long long>();
            if (blade < 0 || blade >= static_cast<long long>(c.dim()))
                fail(errc::parse, "blade index out of range");
            Int num = json_int(triple.at(1));
            Int den = json_int(triple.at(2));
            if (den == 0) fail(errc::parse, "zero denominator");
            c[static_cast<std::size_t>(blade)] += Rat(num, den);
        }
        coeffs.push_back(std::move(c));
    }
    return SliceFunction::polynomial(n, std::move(coeffs));
}

std::string slice_to_json(const SliceFunction& f) {
    if (!f.power_coeffs())
        fail(errc::argument, "only one-sided polynomial slice functions serialize");
    nlohmann::json j;
    j["n"] = f.n();
    j["coeffs"] = nlohmann::json::array();
    for (const auto& c : *f.power_coeffs()) {
        nlohmann::json degree = nlohmann::json::array();
        for (std::size_t b = 0; b < c.dim(); ++b) {
            if (c[b] == 0) continue;
            degree.push_back({static_cast<long long>(b), int_json(numerator(c[b])),
                              int_json(denominator(c[b]))});
        }
        j["coeffs"].push_back(std::move(degree));
    }
    return j.dump();
}

CoordPoly expand_slice(const SliceFunction& f, const CoordFrame& frame) {
    const ExactStem* es = f.exact_stem();
    if (!es) fail(errc::argument, "coordinate expansion needs an exact stem");
    if (frame.sig_n != f.n()) fail(errc::signature_mismatch, "frame algebra mismatch");
    CoordPoly imp(frame.nvars(), frame.sig_n);
    for (int i = 1; i < frame.nvars(); ++i) {
        Expo e(frame.nvars(), 0);
        e[i] = 1;
        imp.add_term(e, frame.basis[i]);
    }
    return expand_radial(es->g1(), frame) + imp * expand_radial(es->g2(), frame);
}

} // namespace slicecalc
