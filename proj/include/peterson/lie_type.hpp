#pragma once

#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace peterson {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
    Family family{Family::A};
    int rank{1};

    friend bool operator==(const LieType&, const LieType&) = default;
    friend auto operator<=>(const LieType&, const LieType&) = default;

    [[nodiscard]] std::string name() const {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }
};

/// Empty string when (family, rank) names a finite crystallographic type,
/// otherwise a message explaining the constraint.
inline std::string rank_violation(Family f, int n) {
    switch (f) {
        case Family::A: return n >= 1 ? "" : "type A requires rank >= 1";
        case Family::B: return n >= 2 ? "" : "type B requires rank >= 2";
        case Family::C: return n >= 2 ? "" : "type C requires rank >= 2";
        case Family::D: return n >= 4 ? "" : "type D requires rank >= 4";
        case Family::E: return (n >= 6 && n <= 8) ? "" : "type E requires rank 6, 7 or 8";
        case Family::F: return n == 4 ? "" : "type F requires rank 4";
        case Family::G: return n == 2 ? "" : "type G requires rank 2";
    }
    return "unknown family";
}

inline LieType make_lie_type(Family f, int n) {
    if (auto msg = rank_violation(f, n); !msg.empty())
        throw std::invalid_argument(msg + " (got " + std::string(1, static_cast<char>(f)) +
                                    std::to_string(n) + ")");
    return LieType{f, n};
}

/// Parses compact names such as "A3", "E8", "g2".
inline LieType parse_lie_type(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("malformed Lie type '" + std::string(text) + "'");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
    if (c < 'A' || c > 'G') throw std::invalid_argument("unknown Lie family '" + std::string(1, text.front()) + "'");
    int n = 0;
    for (char d : text.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(d)))
            throw std::invalid_argument("malformed Lie type '" + std::string(text) + "'");
        n = n * 10 + (d - '0');
        if (n > 64) throw std::invalid_argument("rank too large in '" + std::string(text) + "'");
    }
    return make_lie_type(static_cast<Family>(c), n);
}

}  // namespace peterson
