#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace peterson {

/// Largest rank supported by the bitmask representation below.
inline constexpr int kMaxRank = 16;

/// A set of simple-root indices, 1-based, stored as a bitmask (bit i-1 <-> index i).
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

    static Subset of(const std::vector<int>& indices) {
        Subset s;
        for (int i : indices) s.insert(i);
        return s;
    }
    static constexpr Subset full(int rank) { return Subset(rank >= 32 ? ~0u : ((1u << rank) - 1u)); }
    static constexpr Subset single(int i) { return Subset(1u << (i - 1)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool contains(int i) const { return i >= 1 && i <= 32 && ((bits_ >> (i - 1)) & 1u); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

    void insert(int i) {
        if (i < 1 || i > kMaxRank) throw std::out_of_range("simple-root index " + std::to_string(i) + " out of range");
        bits_ |= 1u << (i - 1);
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Subset, Subset) = default;

    /// Cardinality first, then lexicographic on the ascending index lists.
    friend std::strong_ordering operator<=>(Subset a, Subset b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        auto ia = a.indices(), ib = b.indices();
        return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
    }

private:
    std::uint32_t bits_{0};
};

/// All subsets of {1..rank} in (cardinality, lexicographic) order.
inline std::vector<Subset> ordered_subsets(int rank) {
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << rank);
    for (std::uint32_t b = 0; b < (1u << rank); ++b) out.emplace_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.indices()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

}  // namespace peterson
