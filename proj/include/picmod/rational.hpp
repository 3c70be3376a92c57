#pragma once

// Arbitrary-precision integers and rationals on top of GMP, with a canonical
// (always reduced, positive denominator) representation and hashing.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace picmod {

using Int = mpz_class;

inline std::uint64_t hash_int(const Int& z) {
    // residue mod a large prime, sign folded in
    std::uint64_t h = mpz_fdiv_ui(z.get_mpz_t(), 0xFFFFFFFFFFFFFFC5ull);
    return h ^ (sgn(z) < 0 ? 0x9E3779B97F4A7C15ull : 0);
}

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    Int numerator() const { return Int(v_.get_num()); }
    Int denominator() const { return Int(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned k) const {
        Rational r(1), base = *this;
        for (; k; k >>= 1) {
            if (k & 1) r *= base;
            if (k > 1) base *= base;
        }
        return r;
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const { return v_.get_str(); }

    std::uint64_t hash() const {
        std::uint64_t h = hash_int(Int(v_.get_num()));
        std::uint64_t k = hash_int(Int(v_.get_den()));
        return h ^ (k * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull);
    }

private:
    mpq_class v_;  // invariant: canonical (reduced, den > 0)
};

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace picmod

template <>
struct std::hash<picmod::Rational> {
    std::size_t operator()(const picmod::Rational& r) const { return r.hash(); }
};
