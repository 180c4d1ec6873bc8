#include "fracsum/format.hpp"

#include <cstdio>

namespace fracsum {

std::string format_real(double v) {
    if (v == 0.0) return "0";  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_complex(Complex v) {
    if (v.imag() == 0.0) return format_real(v.real());
    std::string s = format_real(v.real());
    s += v.imag() < 0.0 ? "-" + format_real(-v.imag()) : "+" + format_real(v.imag());
    return s + "i";
}

}  // namespace fracsum
