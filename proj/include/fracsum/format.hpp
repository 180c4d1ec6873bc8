#pragma once

#include <string>

#include "fracsum/types.hpp"

namespace fracsum {

// Deterministic 12-significant-digit formatting ("." decimal, C locale),
// shared by the CLI and the CSV writer so golden files stay byte-stable.
std::string format_real(double v);
std::string format_complex(Complex v);

}  // namespace fracsum
