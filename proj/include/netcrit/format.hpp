#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace netcrit {

// Shortest decimal that round-trips to the same double; locale-free and
// byte-deterministic for identical inputs.
inline std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace netcrit
