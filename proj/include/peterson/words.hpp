#pragma once

// Reduced words of w_Delta in the shapes used for hand and golden checks.
//
// The classical families follow row-by-row templates; the exceptional types
// are read from bundled comma-separated files named after the type ("E8.txt").

#include "lie_type.hpp"
#include "weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace peterson {

/// "1,3,4" -> {1,3,4}. Whitespace around letters is ignored; empty text is the empty word.
inline Word parse_word(std::string_view text) {
    Word out;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty()) return out;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view tok = trim(text.substr(pos, comma - pos));
        int value = 0;
        const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || value < 1)
            throw std::invalid_argument("malformed index list '" + std::string(text) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

namespace detail {

inline void append_range(Word& w, int from, int to) {
    for (int k = from; k <= to; ++k) w.push_back(k);
}

}  // namespace detail

/// Rows s_1..s_n, s_1..s_{n-1}, ..., s_1.
inline Word template_word_a(int n) {
    Word w;
    for (int top = n; top >= 1; --top) detail::append_range(w, 1, top);
    return w;
}

/// Rows s_n; s_{n-1}s_n; ...; s_1..s_n; then s_1..s_{n-1}; ...; s_1. Shared by B_n and C_n.
inline Word template_word_bc(int n) {
    Word w;
    for (int k = n; k >= 1; --k) detail::append_range(w, k, n);
    for (int top = n - 1; top >= 1; --top) detail::append_range(w, 1, top);
    return w;
}

/// Rows s_k..s_{n-2} followed by a fork tip, for k = n-1 down to 1, the tip
/// alternating so the first row ends on the tip of matching parity; then the
/// type A staircase on s_1..s_{n-1}.
inline Word template_word_d(int n) {
    Word w;
    const int top = (n % 2 == 1) ? n - 1 : n;
    const int other = (top == n) ? n - 1 : n;
    for (int k = n - 1; k >= 1; --k) {
        detail::append_range(w, k, n - 2);
        w.push_back(((n - 1 - k) % 2 == 0) ? top : other);
    }
    for (int t = n - 1; t >= 1; --t) detail::append_range(w, 1, t);
    return w;
}

inline Word read_word_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open word file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_word(buf.str());
}

/// Reduced word of w_Delta for the standard diagram of `t`: template for
/// A-D, bundled file `<data_dir>/<type>.txt` for E, F, G.
inline Word bundled_longest_word(LieType t, const std::filesystem::path& data_dir) {
    switch (t.family) {
        case Family::A: return template_word_a(t.rank);
        case Family::B:
        case Family::C: return template_word_bc(t.rank);
        case Family::D: return template_word_d(t.rank);
        default: return read_word_file(data_dir / (t.name() + ".txt"));
    }
}

#ifdef PETERSON_DATA_DIR
inline std::filesystem::path default_data_dir() { return std::filesystem::path(PETERSON_DATA_DIR) / "words"; }
#else
inline std::filesystem::path default_data_dir() { return std::filesystem::path("data") / "words"; }
#endif

}  // namespace peterson
