#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "permgram/core/rational.hpp"

namespace permgram {

// An exponent restricted to Z/2, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t integer) : twice_(2 * integer) {}

    static constexpr HalfInt from_twice(std::int64_t twice)
    {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr std::int64_t twice() const noexcept { return twice_; }
    constexpr bool is_zero() const noexcept { return twice_ == 0; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    constexpr bool is_negative() const noexcept { return twice_ < 0; }

    std::int64_t integer() const
    {
        if (!is_integer())
            throw DomainError("exponent " + to_string() + " is not an integer");
        return twice_ / 2;
    }

    Rational to_rational() const
    {
        Rational r(static_cast<long>(twice_), 2L);
        r.canonicalize();
        return r;
    }

    std::string to_string() const
    {
        if (is_integer())
            return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend HalfInt operator+(HalfInt a, HalfInt b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.twice_, b.twice_, &r))
            throw std::overflow_error("exponent overflow");
        return from_twice(r);
    }
    friend HalfInt operator-(HalfInt a, HalfInt b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.twice_, b.twice_, &r))
            throw std::overflow_error("exponent overflow");
        return from_twice(r);
    }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }

    // Product of two exponents, if it is again a half-integer.
    friend std::optional<HalfInt> product(HalfInt a, HalfInt b)
    {
        std::int64_t p;
        if (__builtin_mul_overflow(a.twice_, b.twice_, &p))
            throw std::overflow_error("exponent overflow");
        if (p % 2 != 0)
            return std::nullopt;
        return from_twice(p / 2);
    }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    std::int64_t twice_ = 0;
};

} // namespace permgram
