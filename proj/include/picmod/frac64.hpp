#pragma once

// Small exact fraction on int64, always reduced with positive denominator.
// Intermediates go through __int128 and anything that no longer fits 64 bits
// throws, so results are exact or loudly absent.  Group elements of a finite
// isometry group have uniformly bounded entries, which is what this is for.

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "picmod/rational.hpp"

namespace picmod {

class Frac64 {
public:
    constexpr Frac64() : num_(0), den_(1) {}
    constexpr Frac64(std::int64_t n) : num_(n), den_(1) {}
    Frac64(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Frac64: zero denominator");
        reduce_from(n, d);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Frac64 operator-() const {
        Frac64 r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Frac64 operator+(const Frac64& a, const Frac64& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Frac64 operator-(const Frac64& a, const Frac64& b) { return a + (-b); }
    friend Frac64 operator*(const Frac64& a, const Frac64& b) {
        __int128 n = (__int128)a.num_ * b.num_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Frac64 operator/(const Frac64& a, const Frac64& b) {
        if (b.num_ == 0) throw std::domain_error("Frac64: division by zero");
        __int128 n = (__int128)a.num_ * b.den_;
        __int128 d = (__int128)a.den_ * b.num_;
        return from128(n, d);
    }

    Frac64& operator+=(const Frac64& o) { return *this = *this + o; }
    Frac64& operator-=(const Frac64& o) { return *this = *this - o; }
    Frac64& operator*=(const Frac64& o) { return *this = *this * o; }
    Frac64& operator/=(const Frac64& o) { return *this = *this / o; }

    friend bool operator==(const Frac64& a, const Frac64& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac64& a, const Frac64& b) { return !(a == b); }
    friend bool operator<(const Frac64& a, const Frac64& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    Frac64 inverse() const { return Frac64(1) / *this; }
    Frac64 abs() const { return num_ < 0 ? -*this : *this; }

    Rational to_rational() const { return Rational(Int((long)num_), Int((long)den_)); }
    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    std::uint64_t hash() const {
        std::uint64_t h = (std::uint64_t)num_ * 0x9E3779B97F4A7C15ull;
        h ^= (std::uint64_t)den_ + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    static Frac64 from128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Frac64: value out of 64-bit range");
        Frac64 r;
        r.num_ = (std::int64_t)n;
        r.den_ = (std::int64_t)d;
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void reduce_from(std::int64_t n, std::int64_t d) {
        Frac64 r = from128(n, d);
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_;
    std::int64_t den_;  // > 0
};

inline std::string to_string(const Frac64& f) { return f.str(); }

}  // namespace picmod

template <>
struct std::hash<picmod::Frac64> {
    std::size_t operator()(const picmod::Frac64& f) const { return f.hash(); }
};
