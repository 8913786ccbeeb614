#include "oddc/interval.hpp"

#include <cmath>
#include <sstream>

namespace oddc {

namespace {

void append_endpoint(std::ostringstream& out, double x) {
    if (std::isinf(x))
        out << (x > 0 ? "inf" : "-inf");
    else
        out << x;
}

} // namespace

std::string to_string(const Interval& iv) {
    std::ostringstream out;
    out.precision(6);
    out << '[';
    append_endpoint(out, iv.lo);
    out << ", ";
    append_endpoint(out, iv.hi);
    out << ')';
    return out.str();
}

} // namespace oddc
