#pragma once

// Versioned on-disk cache for the generated group table: magic + counts,
// generators and elements as little-endian num/den pairs in discovery order,
// and a trailing FNV-1a checksum over everything before it.

#include <cstring>
#include <fstream>
#include <string>

#include "picmod/weyl.hpp"

namespace picmod {

namespace group_io_detail {

constexpr char kMagic[8] = {'P', 'M', 'W', 'G', '0', '0', '0', '1'};

inline void fnv(std::uint64_t& h, const void* data, std::size_t n) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) h = (h ^ p[i]) * 0x100000001B3ull;
}

struct Writer {
    std::ofstream out;
    std::uint64_t hash = 0xCBF29CE484222325ull;
    void write(const void* data, std::size_t n) {
        out.write(static_cast<const char*>(data), (std::streamsize)n);
        fnv(hash, data, n);
    }
    void write_u64(std::uint64_t v) { write(&v, 8); }
    void write_i64(std::int64_t v) { write(&v, 8); }
    void write_element(const WeylElement& g) {
        for (const auto& x : g.a) {
            write_i64(x.num());
            write_i64(x.den());
        }
    }
};

struct Reader {
    std::ifstream in;
    std::uint64_t hash = 0xCBF29CE484222325ull;
    bool read(void* data, std::size_t n) {
        in.read(static_cast<char*>(data), (std::streamsize)n);
        if (!in) return false;
        fnv(hash, data, n);
        return true;
    }
    bool read_u64(std::uint64_t& v) { return read(&v, 8); }
    bool read_raw_element(std::array<std::int64_t, 72>& raw) {
        return read(raw.data(), sizeof(raw));
    }
};

inline WeylElement element_from_raw(const std::array<std::int64_t, 72>& raw) {
    WeylElement g;
    for (int k = 0; k < 36; ++k) g.a[k] = Frac64(raw[2 * k], raw[2 * k + 1]);
    return g;
}

}  // namespace group_io_detail

inline void cache_group(const GroupTable& table, const std::string& path) {
    using namespace group_io_detail;
    Writer w;
    w.out.open(path, std::ios::binary | std::ios::trunc);
    if (!w.out) throw std::runtime_error("cache_group: cannot open " + path);
    w.write(kMagic, 8);
    w.write_u64(table.generators().size());
    w.write_u64(table.order());
    for (const auto& g : table.generators()) w.write_element(g);
    for (const auto& g : table.elements()) w.write_element(g);
    std::uint64_t h = w.hash;
    w.out.write(reinterpret_cast<const char*>(&h), 8);
    if (!w.out) throw std::runtime_error("cache_group: write failed for " + path);
}

inline GroupTable load_group(const std::string& path) {
    using namespace group_io_detail;
    Reader r;
    r.in.open(path, std::ios::binary);
    if (!r.in) throw std::runtime_error("load_group: cannot open " + path);
    char magic[8];
    if (!r.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("load_group: version mismatch");
    std::uint64_t ngens = 0, nelems = 0;
    if (!r.read_u64(ngens) || !r.read_u64(nelems) || ngens > 64 || nelems > (1u << 24))
        throw std::runtime_error("load_group: corrupt header");
    std::vector<std::array<std::int64_t, 72>> raw_gens(ngens), raw_elems(nelems);
    for (auto& g : raw_gens)
        if (!r.read_raw_element(g)) throw std::runtime_error("load_group: truncated file");
    for (auto& g : raw_elems)
        if (!r.read_raw_element(g)) throw std::runtime_error("load_group: truncated file");
    std::uint64_t expect = r.hash;
    std::uint64_t stored = 0;
    r.in.read(reinterpret_cast<char*>(&stored), 8);
    if (!r.in || stored != expect) throw std::runtime_error("load_group: checksum mismatch");

    // checksum verified; parse (reduction or range failures mean the writer
    // and reader disagree, which the version magic should have caught)
    std::vector<WeylElement> gens, elems;
    gens.reserve(ngens);
    elems.reserve(nelems);
    try {
        for (auto& g : raw_gens) gens.push_back(element_from_raw(g));
        for (auto& g : raw_elems) elems.push_back(element_from_raw(g));
    } catch (const std::exception&) {
        throw std::runtime_error("load_group: corrupt payload");
    }
    GroupTable t = GroupTable::from_elements(std::move(elems), std::move(gens));
    // structural sanity: the table must still be a b-isometry set containing
    // the generators and the identity
    if (!t.contains(WeylElement::identity()))
        throw std::runtime_error("load_group: identity missing");
    for (const auto& g : t.generators()) {
        if (!preserves_b(g) || !t.contains(g))
            throw std::runtime_error("load_group: generator set corrupt");
    }
    return t;
}

}  // namespace picmod
