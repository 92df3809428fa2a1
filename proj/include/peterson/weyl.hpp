#pragma once

// Weyl group elements as integer matrices acting on simple-root coordinates.
// Column j of the matrix is w(alpha_j). Element identity is matrix equality.

#include "errors.hpp"
#include "root_system.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace peterson {

using Word = std::vector<int>;

inline constexpr std::size_t kDefaultReducedWordCap = 1'000'000;

class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(IntMatrix m) : m_(std::move(m)) {}

    static WeylElement identity(int rank) { return WeylElement(IntMatrix::identity(rank)); }

    int rank() const { return m_.size(); }
    const IntMatrix& matrix() const { return m_; }
    bool is_identity() const { return m_ == IntMatrix::identity(m_.size()); }

    /// Sign of w(alpha_i); +1 means i is not a right descent.
    bool maps_simple_positive(int i) const {
        int s = 0;
        for (int r = 0; r < rank(); ++r) s += m_(r, i - 1);
        return s > 0;
    }
    bool is_right_descent(int i) const { return !maps_simple_positive(i); }

    Root apply(const Root& r) const {
        Root out{std::vector<int>(rank(), 0)};
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) out.coeffs[i] += m_(i, j) * r.coeffs[j];
        return out;
    }

    /// w * s_i as a column operation.
    WeylElement times_simple(const RootSystem& rs, int i) const {
        rs.check_index(i);
        IntMatrix m = m_;
        const int c = i - 1;
        for (int j = 0; j < rank(); ++j) {
            const int a = rs.cartan(i, j + 1);
            if (j == c || a == 0) continue;
            for (int r = 0; r < rank(); ++r) m(r, j) -= a * m_(r, c);
        }
        for (int r = 0; r < rank(); ++r) m(r, c) = -m_(r, c);
        return WeylElement(std::move(m));
    }

    /// s_i * w as a row operation.
    WeylElement simple_times(const RootSystem& rs, int i) const {
        rs.check_index(i);
        IntMatrix m = m_;
        for (int col = 0; col < rank(); ++col) {
            int p = 0;
            for (int j = 0; j < rank(); ++j) p += rs.cartan(i, j + 1) * m_(j, col);
            m(i - 1, col) -= p;
        }
        return WeylElement(std::move(m));
    }

    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) { return WeylElement(a.m_ * b.m_); }
    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.m_ <=> b.m_; }

private:
    IntMatrix m_;
};

inline void check_word(const RootSystem& rs, const Word& word) {
    for (int b : word) rs.check_index(b);
}

inline WeylElement simple_reflection(const RootSystem& rs, int i) {
    return WeylElement::identity(rs.rank()).times_simple(rs, i);
}

inline WeylElement element_of(const RootSystem& rs, const Word& word) {
    check_word(rs, word);
    WeylElement w = WeylElement::identity(rs.rank());
    for (int b : word) w = w.times_simple(rs, b);
    return w;
}

/// Number of positive roots sent to negative roots.
inline int length(const RootSystem& rs, const WeylElement& w) {
    const int n = rs.rank();
    std::vector<int> colsum(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) colsum[j] += w.matrix()(i, j);
    int count = 0;
    for (const Root& beta : rs.positive_roots()) {
        int h = 0;
        for (int j = 0; j < n; ++j) h += colsum[j] * beta.coeffs[j];
        if (h < 0) ++count;
    }
    return count;
}

/// A reduced word obtained by stripping the smallest right descent each time.
inline Word right_peeled_word(const RootSystem& rs, WeylElement w) {
    Word rev;
    for (;;) {
        int d = 0;
        for (int i = 1; i <= rs.rank() && d == 0; ++i)
            if (w.is_right_descent(i)) d = i;
        if (d == 0) break;
        rev.push_back(d);
        w = w.times_simple(rs, d);
    }
    return Word(rev.rbegin(), rev.rend());
}

inline WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
    const Word word = right_peeled_word(rs, w);
    return element_of(rs, Word(word.rbegin(), word.rend()));
}

/// Canonical reduced word: repeatedly strip the smallest-index left descent.
inline Word canonical_word(const RootSystem& rs, const WeylElement& w) {
    // Left descents of w are right descents of w^{-1}.
    WeylElement u = inverse(rs, w);
    Word out;
    for (;;) {
        int d = 0;
        for (int i = 1; i <= rs.rank() && d == 0; ++i)
            if (u.is_right_descent(i)) d = i;
        if (d == 0) break;
        out.push_back(d);
        u = u.times_simple(rs, d);
    }
    return out;
}

inline bool is_reduced(const RootSystem& rs, const Word& word) {
    check_word(rs, word);
    WeylElement w = WeylElement::identity(rs.rank());
    for (int b : word) {
        if (w.is_right_descent(b)) return false;
        w = w.times_simple(rs, b);
    }
    return true;
}

namespace detail {

inline void collect_reduced_words(const RootSystem& rs, const WeylElement& v, Word& suffix, std::vector<Word>& out,
                                  std::size_t cap) {
    bool any = false;
    for (int i = 1; i <= rs.rank(); ++i) {
        if (!v.is_right_descent(i)) continue;
        any = true;
        suffix.push_back(i);
        collect_reduced_words(rs, v.times_simple(rs, i), suffix, out, cap);
        suffix.pop_back();
    }
    if (!any) {
        if (out.size() >= cap)
            throw LimitExceeded("reduced-word enumeration exceeded cap of " + std::to_string(cap) + " words");
        out.emplace_back(suffix.rbegin(), suffix.rend());
    }
}

}  // namespace detail

/// Every reduced word of v. Exponential in general; guarded by `cap`.
inline std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElement& v,
                                           std::size_t cap = kDefaultReducedWordCap) {
    std::vector<Word> out;
    Word suffix;
    detail::collect_reduced_words(rs, v, suffix, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

/// A reduced word chosen by stripping uniformly random right descents.
template <class URBG>
Word random_reduced_word(const RootSystem& rs, WeylElement w, URBG& rng) {
    Word rev;
    for (;;) {
        std::vector<int> desc;
        for (int i = 1; i <= rs.rank(); ++i)
            if (w.is_right_descent(i)) desc.push_back(i);
        if (desc.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, desc.size() - 1);
        const int d = desc[pick(rng)];
        rev.push_back(d);
        w = w.times_simple(rs, d);
    }
    return Word(rev.rbegin(), rev.rend());
}

/// Bruhat order by the left-descent recursion along a reduced word of w:
/// with s a left descent of w, v <= w iff (sv < v ? sv : v) <= sw.
inline bool bruhat_leq(const RootSystem& rs, const WeylElement& v, const WeylElement& w) {
    if (v.is_identity()) return true;
    // Track u = v^{-1}: s is a left descent of v iff u(alpha_s) < 0, and sv corresponds to u s.
    WeylElement u = inverse(rs, v);
    for (int s : canonical_word(rs, w)) {
        if (u.is_right_descent(s)) u = u.times_simple(rs, s);
    }
    return u.is_identity();
}

/// Longest element of the parabolic subgroup generated by K.
inline WeylElement longest_element(const RootSystem& rs, Subset k) {
    if (!k.is_subset_of(Subset::full(rs.rank())))
        throw std::out_of_range("subset " + to_string(k) + " outside the diagram");
    WeylElement w = WeylElement::identity(rs.rank());
    const auto gens = k.indices();
    for (;;) {
        int step = 0;
        for (int i : gens)
            if (w.maps_simple_positive(i)) {
                step = i;
                break;
            }
        if (step == 0) return w;
        w = w.times_simple(rs, step);
    }
}

inline std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(w[k]);
    }
    return out;
}

}  // namespace peterson
