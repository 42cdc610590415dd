#pragma once

#include <stdexcept>
#include <string>

namespace semispec {

// Failure categories; BadInput maps to an input error at the C API / CLI
// boundary, everything else to a computation error.
enum class Errc {
    DimensionMismatch,
    NonFinite,
    Singular,
    NonConvergence,
    ClusterAmbiguity,
    FamilyInvariant,
    GapTooSmall,
    WindowTooShort,
    NodeCap,
    NoEligibleEigenspace,
    BadInput,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace semispec
