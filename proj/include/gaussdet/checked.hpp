#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gaussdet {

// Exponent and index arithmetic is done in machine integers; overflow is a
// hard error.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return out;
}

} // namespace gaussdet
