#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "tempoflow/error.hpp"

namespace tempoflow {

// Discrete time unit. Valid times are >= 0; T+1 appears only as a sentinel
// inside cut functions and breaktime sets.
using TimeStep = std::int64_t;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::ArithmeticOverflow, "integer addition overflows 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::ArithmeticOverflow, "integer multiplication overflows 64 bits");
    return r;
}

// Exact non-negative integer capacity, or INFINITE. INFINITE is strictly
// larger than every finite value and absorbs addition.
class Capacity {
public:
    constexpr Capacity() = default;

    explicit Capacity(std::int64_t value) : value_(value)
    {
        if (value < 0)
            throw Error(ErrorCode::NegativeValue, "capacity must be non-negative, got " + std::to_string(value));
    }

    static constexpr Capacity infinite()
    {
        Capacity c;
        c.infinite_ = true;
        return c;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    std::int64_t value() const
    {
        if (infinite_)
            throw Error(ErrorCode::InvalidArgument, "value() called on an infinite capacity");
        return value_;
    }

    Capacity& operator+=(Capacity other)
    {
        if (infinite_ || other.infinite_) {
            infinite_ = true;
            value_ = 0;
        } else {
            value_ = checked_add(value_, other.value_);
        }
        return *this;
    }

    friend Capacity operator+(Capacity a, Capacity b) { return a += b; }

    friend constexpr bool operator==(Capacity a, Capacity b)
    {
        return a.infinite_ == b.infinite_ && a.value_ == b.value_;
    }

    friend constexpr std::strong_ordering operator<=>(Capacity a, Capacity b)
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return infinite_ ? std::string("inf") : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, Capacity c) { return os << c.to_string(); }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

// A max-flow value carries the same semantics: exact integer or INFINITE.
using FlowValue = Capacity;

}  // namespace tempoflow
