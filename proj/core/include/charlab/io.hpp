#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace charlab {

// One formatting routine for every floating-point field that reaches an output
// stream, so reruns produce byte-identical files.
inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string fmt_u128(unsigned __int128 v) {
    if (v == 0) return "0";
    char buf[48];
    int i = 48;
    while (v) {
        buf[--i] = char('0' + (unsigned)(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 48);
}

} // namespace charlab
