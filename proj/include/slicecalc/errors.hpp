#pragma once

#include <stdexcept>
#include <string>

namespace slicecalc {

// Error categories, mirrored one-to-one by the C API status codes.
enum class errc {
    ok = 0,
    argument,             // malformed or out-of-range argument
    signature_mismatch,   // operands live in different algebras or regimes
    not_in_cone,          // element has non-real trace or norm
    zero_norm,            // inversion of a null element
    outside_domain,       // evaluation point leaves the stem domain (incl. fd margins)
    near_real_axis,       // operator is singular on the real axis
    real_point_derivative,// spherical derivative of a non-regular stem at a real point
    non_differentiable,   // stem carries no derivative data
    not_representable,    // result leaves the exact-rational field (e.g. irrational beta)
    parse,                // bad serialized input
    unknown_identity,     // no such identity/suite name
    pole,                 // evaluation at a pole of the function
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace slicecalc
