#pragma once

// The four-element field {0, 1, w, w^2} with w^2 = w + 1, encoded in two bits
// (bit0 = 1-component, bit1 = w-component, addition = xor), and 4x4 matrices
// over it packed into a single uint32 for cheap group closure.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace picmod {

struct GF4 {
    std::uint8_t v = 0;  // 0, 1, 2 (= w), 3 (= w^2)

    static constexpr std::uint8_t mul_table[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

    friend GF4 operator+(GF4 a, GF4 b) { return {(std::uint8_t)(a.v ^ b.v)}; }
    friend GF4 operator*(GF4 a, GF4 b) { return {mul_table[a.v][b.v]}; }
    friend bool operator==(GF4 a, GF4 b) { return a.v == b.v; }
    GF4 conj() const { return *this * *this; }  // Frobenius x -> x^2
};

class UnitaryF4Matrix {
public:
    UnitaryF4Matrix() : bits_(0) {}
    explicit UnitaryF4Matrix(std::uint32_t bits) : bits_(bits) {}

    static UnitaryF4Matrix identity() {
        UnitaryF4Matrix m;
        for (int i = 0; i < 4; ++i) m.set(i, i, {1});
        return m;
    }
    static UnitaryF4Matrix scalar(GF4 s) {
        UnitaryF4Matrix m;
        for (int i = 0; i < 4; ++i) m.set(i, i, s);
        return m;
    }

    GF4 get(int i, int j) const { return {(std::uint8_t)((bits_ >> (2 * (4 * i + j))) & 3u)}; }
    void set(int i, int j, GF4 x) {
        int s = 2 * (4 * i + j);
        bits_ = (bits_ & ~(3u << s)) | (std::uint32_t(x.v) << s);
    }
    std::uint32_t bits() const { return bits_; }

    friend UnitaryF4Matrix operator*(const UnitaryF4Matrix& a, const UnitaryF4Matrix& b) {
        UnitaryF4Matrix r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                GF4 acc{0};
                for (int k = 0; k < 4; ++k) acc = acc + a.get(i, k) * b.get(k, j);
                r.set(i, j, acc);
            }
        return r;
    }
    friend bool operator==(const UnitaryF4Matrix& a, const UnitaryF4Matrix& b) {
        return a.bits_ == b.bits_;
    }

    UnitaryF4Matrix conj_transpose() const {
        UnitaryF4Matrix r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.set(j, i, get(i, j).conj());
        return r;
    }

    // preserves the reduction of the Gram matrix diag(1,1,-1,-1) = I mod 2
    bool is_unitary() const { return (*this) * conj_transpose() == identity(); }

private:
    std::uint32_t bits_;
};

// Breadth-first closure under multiplication; returns the full element list
// in deterministic discovery order.
inline std::vector<UnitaryF4Matrix> unitary_closure(const std::vector<UnitaryF4Matrix>& gens) {
    std::vector<UnitaryF4Matrix> elems{UnitaryF4Matrix::identity()};
    std::unordered_set<std::uint32_t> set{elems[0].bits()};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        UnitaryF4Matrix cur = elems[head];
        for (const auto& g : gens) {
            UnitaryF4Matrix next = cur * g;
            if (set.insert(next.bits()).second) elems.push_back(next);
        }
    }
    return elems;
}

}  // namespace picmod

template <>
struct std::hash<picmod::UnitaryF4Matrix> {
    std::size_t operator()(const picmod::UnitaryF4Matrix& m) const { return m.bits(); }
};
