#pragma once

// The quadratic cyclotomic field Q(w), w^2 + w + 1 = 0, in the basis {1, w}.
// Reduction rule everywhere: w^2 = -1 - w.  conj(a + b w) = (a - b) - b w.

#include "picmod/rational.hpp"

namespace picmod {

class Cyclotomic {
public:
    Cyclotomic() : a_(0), b_(0) {}
    Cyclotomic(long n) : a_(n), b_(0) {}
    Cyclotomic(const Rational& a) : a_(a), b_(0) {}
    Cyclotomic(const Rational& a, const Rational& b) : a_(a), b_(b) {}

    static Cyclotomic omega() { return Cyclotomic(Rational(0), Rational(1)); }
    // w-bar = w^2 = -1 - w, the complex conjugate root
    static Cyclotomic omega_bar() { return Cyclotomic(Rational(-1), Rational(-1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& omega_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    Cyclotomic conj() const { return Cyclotomic(a_ - b_, -b_); }

    // x * conj(x) = a^2 - a b + b^2, always rational and >= 0
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    Cyclotomic operator-() const { return Cyclotomic(-a_, -b_); }
    Cyclotomic& operator+=(const Cyclotomic& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) {
        // (a1 + b1 w)(a2 + b2 w) = a1 a2 - b1 b2 + (a1 b2 + b1 a2 - b1 b2) w
        Rational a = a_ * o.a_ - b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_ - b_ * o.b_;
        a_ = a;
        b_ = b;
        return *this;
    }
    Cyclotomic& operator/=(const Cyclotomic& o) {
        if (o.is_zero()) throw std::domain_error("Cyclotomic: division by zero");
        Rational n = o.norm();
        Cyclotomic t = *this * o.conj();
        a_ = t.a_ / n;
        b_ = t.b_ / n;
        return *this;
    }

    Cyclotomic inverse() const {
        Cyclotomic one(1);
        one /= *this;
        return one;
    }

    friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
    friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
    friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }
    friend Cyclotomic operator/(Cyclotomic x, const Cyclotomic& y) { return x /= y; }

    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "");
        if (b_.is_one())
            s += "w";
        else if (b_ == Rational(-1))
            s += "-w";
        else
            s += b_.str() + "*w";
        return s;
    }

    std::uint64_t hash() const {
        return a_.hash() ^ (b_.hash() * 0xD6E8FEB86659FD93ull + 0xA0761D6478BD642Full);
    }

private:
    Rational a_, b_;  // value a + b w
};

inline std::string to_string(const Cyclotomic& x) { return x.str(); }

}  // namespace picmod

template <>
struct std::hash<picmod::Cyclotomic> {
    std::size_t operator()(const picmod::Cyclotomic& x) const { return x.hash(); }
};
