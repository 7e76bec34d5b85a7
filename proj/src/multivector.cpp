#include "slicecalc/multivector.hpp"

#include <sstream>

namespace slicecalc {

namespace {

template <class S, class Fmt>
std::string render(const Mv<S>& x, Fmt fmt) {
    std::string out;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] == S{}) continue;
        std::string coeff = fmt(x[i]);
        bool neg = !coeff.empty() && coeff[0] == '-';
        if (neg) coeff = coeff.substr(1);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0)
            out += coeff;
        else if (coeff == "1")
            out += blades::name(static_cast<unsigned>(i));
        else
            out += coeff + "*" + blades::name(static_cast<unsigned>(i));
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string to_string(const MvQ& x) {
    return render(x, [](const Rat& r) { return rat_to_string(r); });
}

std::string to_string(const MvD& x) {
    return render(x, [](double d) {
        std::ostringstream os;
        os << d;
        return os.str();
    });
}

} // namespace slicecalc
