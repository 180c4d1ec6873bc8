#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace fracsum {

// Universal scalar of the library.
using Complex = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286061;

// Error classes, used by the CLI to pick a stable exit status.
enum class ErrorKind {
    parse,         // lexical / syntax error
    unsupported,   // expression outside the catalog (or a capability limit)
    pole,          // a bound or argument hits a pole
    non_summable,  // the expression admits no consistent fractional sum
    non_decaying,  // series engine asked to sum a non-decaying function
    no_primitive,  // no antiderivative inside the catalog
    bounds,        // argument outside a table/parameter bound
    io,            // file I/O failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& msg)
        : Error(ErrorKind::parse, msg + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& msg) : Error(ErrorKind::unsupported, msg) {}
};

class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(ErrorKind::pole, msg) {}
};

class NonSummableError : public Error {
public:
    explicit NonSummableError(const std::string& msg) : Error(ErrorKind::non_summable, msg) {}
};

class NonDecayingError : public Error {
public:
    explicit NonDecayingError(const std::string& msg) : Error(ErrorKind::non_decaying, msg) {}
};

class NoPrimitiveError : public Error {
public:
    explicit NoPrimitiveError(const std::string& msg) : Error(ErrorKind::no_primitive, msg) {}
};

class BoundsError : public Error {
public:
    explicit BoundsError(const std::string& msg) : Error(ErrorKind::bounds, msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(ErrorKind::io, msg) {}
};

// z is exactly a real integer <= 0 (the pole lattice of digamma/ln_gamma).
inline bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Integer power by squaring; exact-ish and branch-free compared to exp(a*log(w)).
inline Complex pow_int(Complex w, int n) {
    if (n < 0) return 1.0 / pow_int(w, -n);
    Complex r = 1.0;
    while (n > 0) {
        if (n & 1) r *= w;
        w *= w;
        n >>= 1;
    }
    return r;
}

}  // namespace fracsum
