#include "mllcd/format.hpp"

#include <charconv>
#include <cmath>

namespace mllcd {

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    double mag = std::floor(std::log10(std::fabs(x)));
    double scale = std::pow(10.0, static_cast<double>(digits - 1) - mag);
    return std::round(x * scale) / scale;
}

std::string format_number(double x) {
    double r = round_sig(x, 12);
    if (r == 0.0) r = 0.0;  // normalize -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, r);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace mllcd
