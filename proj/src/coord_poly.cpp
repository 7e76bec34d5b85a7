#include "slicecalc/coord_poly.hpp"

#include <algorithm>
#include <numeric>

namespace slicecalc {

CoordFrame CoordFrame::paravector(int n) {
    CoordFrame f;
    f.sig_n = n;
    f.basis.reserve(n + 1);
    f.basis.push_back(MvQ::scalar(n, Rat(1)));
    for (int i = 1; i <= n; ++i) f.basis.push_back(MvQ::basis(n, 1u << (i - 1)));
    return f;
}

CoordFrame CoordFrame::quaternion() {
    CoordFrame f;
    f.sig_n = 2;
    f.basis = {MvQ::scalar(2, Rat(1)), MvQ::basis(2, 0b01), MvQ::basis(2, 0b10),
               MvQ::basis(2, 0b11)};
    return f;
}

bool TermOrder::operator()(const Expo& a, const Expo& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b; // lexicographically larger exponent first
}

CoordPoly::CoordPoly(int nvars, int sig_n) : nvars_(nvars), sig_n_(sig_n) {
    if (nvars < 1 || nvars > kMaxGenerators + 1) fail(errc::argument, "bad coordinate count");
}

CoordPoly CoordPoly::constant(int nvars, MvQ c) {
    CoordPoly p(nvars, c.n());
    p.add_term(Expo(nvars, 0), c);
    return p;
}

CoordPoly CoordPoly::variable(int nvars, int sig_n, int i) {
    CoordPoly p(nvars, sig_n);
    if (i < 0 || i >= nvars) fail(errc::argument, "variable index out of range");
    Expo e(nvars, 0);
    e[i] = 1;
    p.add_term(e, MvQ::scalar(sig_n, Rat(1)));
    return p;
}

int CoordPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // first key has the maximal total degree under TermOrder
    const Expo& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

void CoordPoly::add_term(const Expo& e, const MvQ& c) {
    if (static_cast<int>(e.size()) != nvars_) fail(errc::argument, "exponent arity mismatch");
    if (c.n() != sig_n_) fail(errc::signature_mismatch, "coefficient from a different algebra");
    if (std::accumulate(e.begin(), e.end(), 0) > kDegreeCap)
        fail(errc::argument, "polynomial degree cap exceeded");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void CoordPoly::check_compat(const CoordPoly& o) const {
    if (nvars_ != o.nvars_ || sig_n_ != o.sig_n_)
        fail(errc::signature_mismatch, "polynomials from different coordinate frames");
}

CoordPoly& CoordPoly::operator+=(const CoordPoly& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CoordPoly CoordPoly::operator-() const {
    CoordPoly r(nvars_, sig_n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CoordPoly CoordPoly::operator*(const CoordPoly& o) const {
    check_compat(o);
    CoordPoly r(nvars_, sig_n_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Expo e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            r.add_term(e, product(ca, cb));
        }
    }
    return r;
}

bool CoordPoly::operator==(const CoordPoly& o) const {
    return nvars_ == o.nvars_ && sig_n_ == o.sig_n_ && terms_ == o.terms_;
}

CoordPoly CoordPoly::scaled(const Rat& k) const {
    CoordPoly r(nvars_, sig_n_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.scaled(k));
    return r;
}

CoordPoly CoordPoly::mul_left(const MvQ& u) const {
    CoordPoly r(nvars_, sig_n_);
    for (const auto& [e, c] : terms_) r.add_term(e, product(u, c));
    return r;
}

CoordPoly CoordPoly::mul_right(const MvQ& u) const {
    CoordPoly r(nvars_, sig_n_);
    for (const auto& [e, c] : terms_) r.add_term(e, product(c, u));
    return r;
}

CoordPoly CoordPoly::partial(int i) const {
    if (i < 0 || i >= nvars_) fail(errc::argument, "partial: coordinate index out of range");
    CoordPoly r(nvars_, sig_n_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Expo d = e;
        d[i] -= 1;
        r.add_term(d, c.scaled(Rat(static_cast<int>(e[i]))));
    }
    return r;
}

CoordPoly CoordPoly::laplacian() const {
    CoordPoly r(nvars_, sig_n_);
    for (int i = 0; i < nvars_; ++i) r += partial(i).partial(i);
    return r;
}

CoordPoly CoordPoly::iterated_laplacian(int k) const {
    CoordPoly r = *this;
    for (int i = 0; i < k; ++i) r = r.laplacian();
    return r;
}

MvQ CoordPoly::evaluate(const std::vector<Rat>& coords) const {
    if (static_cast<int>(coords.size()) != nvars_) fail(errc::argument, "evaluate: coordinate arity mismatch");
    MvQ acc(sig_n_);
    for (const auto& [e, c] : terms_) {
        Rat m(1);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= coords[i];
        acc += c.scaled(m);
    }
    return acc;
}

MvD CoordPoly::evaluate(const std::vector<double>& coords) const {
    if (static_cast<int>(coords.size()) != nvars_) fail(errc::argument, "evaluate: coordinate arity mismatch");
    MvD acc(sig_n_);
    for (const auto& [e, c] : terms_) {
        double m = 1.0;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= coords[i];
        acc += to_floating(c).scaled(m);
    }
    return acc;
}

namespace {

std::string monomial_str(const Expo& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(static_cast<int>(e[i]));
    }
    return s;
}

// single nonzero blade -> its index, else -1
int single_blade(const MvQ& c) {
    int found = -1;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        if (c[i] == 0) continue;
        if (found >= 0) return -1;
        found = static_cast<int>(i);
    }
    return found;
}

int first_nonzero_blade(const MvQ& c) {
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (c[i] != 0) return static_cast<int>(i);
    return -1;
}

// term body without sign: rational magnitude, monomial, blade
std::string term_str(const Expo& e, const MvQ& c, bool& negative) {
    std::string mono = monomial_str(e);
    int blade = single_blade(c);
    if (blade >= 0) {
        Rat r = c[static_cast<std::size_t>(blade)];
        negative = r < 0;
        Rat mag = negative ? Rat(-r) : r;
        std::vector<std::string> parts;
        if (mag != 1 || (mono.empty() && blade == 0)) parts.push_back(rat_to_string(mag));
        if (!mono.empty()) parts.push_back(mono);
        if (blade != 0) parts.push_back(blades::name(static_cast<unsigned>(blade)));
        std::string out;
        for (const auto& p : parts) {
            if (!out.empty()) out += "*";
            out += p;
        }
        return out;
    }
    int lead = first_nonzero_blade(c);
    negative = lead >= 0 && c[static_cast<std::size_t>(lead)] < 0;
    std::string body = "(" + to_string(negative ? -c : c) + ")";
    if (!mono.empty()) body += "*" + mono;
    return body;
}

} // namespace

std::string CoordPoly::render_plain() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        bool neg = false;
        std::string body = term_str(e, c, neg);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += body;
    }
    return out;
}

std::string CoordPoly::render() const {
    if (terms_.size() < 2) return render_plain();
    Int gnum = 0, lden = 1;
    for (const auto& [e, c] : terms_) {
        (void)e;
        for (std::size_t i = 0; i < c.dim(); ++i) {
            if (c[i] == 0) continue;
            gnum = gcd(gnum, Int(abs(numerator(c[i]))));
            lden = lcm(lden, denominator(c[i]));
        }
    }
    Rat content(gnum, lden);
    const auto& [e0, c0] = *terms_.begin();
    (void)e0;
    if (c0[static_cast<std::size_t>(first_nonzero_blade(c0))] < 0) content = -content;
    if (content == 1 || content == -1 || content == 0) return render_plain();
    CoordPoly primitive = scaled(Rat(1) / content);
    return rat_to_string(content) + "*(" + primitive.render_plain() + ")";
}

CoordPoly conjugate_coeffs(const CoordPoly& p) {
    CoordPoly r(p.nvars(), p.sig_n());
    for (const auto& [e, c] : p.terms()) r.add_term(e, conjugate(c));
    return r;
}

namespace {

CoordPoly dirac_like(const CoordPoly& p, const CoordFrame& f, bool conj) {
    if (p.nvars() != f.nvars() || p.sig_n() != f.sig_n)
        fail(errc::signature_mismatch, "polynomial does not match the frame");
    CoordPoly r = p.partial(0);
    for (int i = 1; i < f.nvars(); ++i) {
        CoordPoly term = p.partial(i).mul_left(f.basis[i]);
        if (conj)
            r -= term;
        else
            r += term;
    }
    return r;
}

} // namespace

CoordPoly apply_cauchy_riemann(const CoordPoly& p, const CoordFrame& f) {
    return dirac_like(p, f, false);
}

CoordPoly apply_cauchy_riemann_conj(const CoordPoly& p, const CoordFrame& f) {
    return dirac_like(p, f, true);
}

CoordPoly apply_angular(const CoordPoly& p, int i, int j) {
    if (!(1 <= i && i < j && j < p.nvars())) fail(errc::argument, "angular operator needs 1 <= i < j");
    CoordPoly xi = CoordPoly::variable(p.nvars(), p.sig_n(), i);
    CoordPoly xj = CoordPoly::variable(p.nvars(), p.sig_n(), j);
    return xi * p.partial(j) - xj * p.partial(i);
}

CoordPoly apply_spherical_dirac(const CoordPoly& p, const CoordFrame& f) {
    if (p.nvars() != f.nvars() || p.sig_n() != f.sig_n)
        fail(errc::signature_mismatch, "polynomial does not match the frame");
    CoordPoly r(p.nvars(), p.sig_n());
    for (int i = 1; i < f.nvars(); ++i)
        for (int j = i + 1; j < f.nvars(); ++j)
            r -= apply_angular(p, i, j).mul_left(product(f.basis[i], f.basis[j]));
    return r;
}

CoordPoly apply_laplace_beltrami(const CoordPoly& p) {
    CoordPoly r(p.nvars(), p.sig_n());
    for (int i = 1; i < p.nvars(); ++i)
        for (int j = i + 1; j < p.nvars(); ++j)
            r += apply_angular(apply_angular(p, i, j), i, j);
    return r;
}

namespace {

CoordPoly frame_variable(const CoordFrame& f, bool conj) {
    CoordPoly x(f.nvars(), f.sig_n);
    for (int i = 0; i < f.nvars(); ++i) {
        Expo e(f.nvars(), 0);
        e[i] = 1;
        x.add_term(e, conj ? conjugate(f.basis[i]) : f.basis[i]);
    }
    return x;
}

} // namespace

CoordPoly expand_power(const CoordFrame& f, int m) {
    if (m < 0) fail(errc::argument, "expand_power: negative exponent");
    CoordPoly r = CoordPoly::constant(f.nvars(), MvQ::scalar(f.sig_n, Rat(1)));
    CoordPoly x = frame_variable(f, false);
    for (int i = 0; i < m; ++i) r = r * x;
    return r;
}

CoordPoly expand_power_conj(const CoordFrame& f, int m) {
    if (m < 0) fail(errc::argument, "expand_power_conj: negative exponent");
    CoordPoly r = CoordPoly::constant(f.nvars(), MvQ::scalar(f.sig_n, Rat(1)));
    CoordPoly xc = frame_variable(f, true);
    for (int i = 0; i < m; ++i) r = r * xc;
    return r;
}

CoordPoly spherical_derivative_poly(const CoordFrame& f, int m) {
    if (m < 1) fail(errc::argument, "spherical_derivative_poly: m must be >= 1");
    CoordPoly x = frame_variable(f, false);
    CoordPoly xc = frame_variable(f, true);
    // powers x^{m-1-k} and (x^c)^k, k = 0..m-1
    std::vector<CoordPoly> xp, xcp;
    CoordPoly one = CoordPoly::constant(f.nvars(), MvQ::scalar(f.sig_n, Rat(1)));
    xp.push_back(one);
    xcp.push_back(one);
    for (int i = 1; i < m; ++i) {
        xp.push_back(xp.back() * x);
        xcp.push_back(xcp.back() * xc);
    }
    CoordPoly r(f.nvars(), f.sig_n);
    for (int k = 0; k < m; ++k) r += xp[m - 1 - k] * xcp[k];
    return r;
}

CoordPoly spherical_value_poly(const CoordFrame& f, int m) {
    CoordPoly xm = expand_power(f, m);
    return (xm + conjugate_coeffs(xm)).scaled(Rat(1, 2));
}

CoordPoly expand_radial(const CoordPoly& g, const CoordFrame& f) {
    if (g.nvars() != 2) fail(errc::argument, "expand_radial: expected a two-variable polynomial");
    if (g.sig_n() != f.sig_n) fail(errc::signature_mismatch, "expand_radial: frame mismatch");
    CoordPoly r2(f.nvars(), f.sig_n);
    for (int i = 1; i < f.nvars(); ++i) {
        Expo e(f.nvars(), 0);
        e[i] = 2;
        r2.add_term(e, MvQ::scalar(f.sig_n, Rat(1)));
    }
    int max_k = 0;
    for (const auto& [e, c] : g.terms()) {
        (void)c;
        max_k = std::max(max_k, static_cast<int>(e[1]));
    }
    std::vector<CoordPoly> r2pow;
    r2pow.push_back(CoordPoly::constant(f.nvars(), MvQ::scalar(f.sig_n, Rat(1))));
    for (int k = 1; k <= max_k; ++k) r2pow.push_back(r2pow.back() * r2);

    CoordPoly out(f.nvars(), f.sig_n);
    for (const auto& [e, c] : g.terms()) {
        Expo alpha(f.nvars(), 0);
        alpha[0] = e[0];
        CoordPoly term(f.nvars(), f.sig_n);
        term.add_term(alpha, c);
        out += term * r2pow[e[1]];
    }
    return out;
}

} // namespace slicecalc
