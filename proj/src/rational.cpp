#include "slicecalc/rational.hpp"

#include <cctype>

namespace slicecalc {

const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "ok";
        case errc::argument: return "argument";
        case errc::signature_mismatch: return "signature_mismatch";
        case errc::not_in_cone: return "not_in_cone";
        case errc::zero_norm: return "zero_norm";
        case errc::outside_domain: return "outside_domain";
        case errc::near_real_axis: return "near_real_axis";
        case errc::real_point_derivative: return "real_point_derivative";
        case errc::non_differentiable: return "non_differentiable";
        case errc::not_representable: return "not_representable";
        case errc::parse: return "parse";
        case errc::unknown_identity: return "unknown_identity";
        case errc::pole: return "pole";
        case errc::internal: return "internal";
    }
    return "unknown";
}

Rat rat_from_string(const std::string& s) {
    auto bad = [&] { fail(errc::parse, "bad rational literal: '" + s + "'"); };
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) bad();

    auto parse_int = [&](const std::string& u) -> Int {
        std::size_t i = (u[0] == '+' || u[0] == '-') ? 1 : 0;
        if (i == u.size()) bad();
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) bad();
        return Int(u);
    };

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int(t.substr(0, slash));
        Int den = parse_int(t.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    }
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string head = t.substr(0, dot);
        std::string frac = t.substr(dot + 1);
        if (frac.empty()) return Rat(parse_int(head.empty() ? "0" : head));
        bool neg = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+") head += "0";
        Int ip = parse_int(head);
        for (char ch : frac)
            if (!std::isdigit(static_cast<unsigned char>(ch))) bad();
        Int fp(frac);
        Int den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rat mag = Rat(abs(ip)) + Rat(fp, den);
        return neg ? -mag : mag;
    }
    return Rat(parse_int(t));
}

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::optional<Rat> exact_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    Int num = numerator(r), den = denominator(r);
    Int sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rat(sn, sd);
}

} // namespace slicecalc
