#pragma once

#include <string>

namespace mllcd {

// Round to `digits` significant decimal digits. Keeps zero, infinities and
// NaN untouched.
double round_sig(double x, int digits = 12);

// Shortest decimal that round-trips round_sig(x, 12). Reports are compared
// byte for byte, so all user-facing numbers funnel through here.
std::string format_number(double x);

}  // namespace mllcd
