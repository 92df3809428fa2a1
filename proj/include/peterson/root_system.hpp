#pragma once

// Finite crystallographic root systems in the simple-root basis.
//
// Node labels follow the usual chains: A_n, B_n, C_n are paths 1-2-...-n with the
// double bond between n-1 and n (alpha_n short in B_n, long in C_n); D_n is the
// path 1-...-(n-1) with n attached to n-2; E_n is the path 1-3-4-...-n with 2
// attached to 4; F_4 is 1-2=>3-4 (alpha_1, alpha_2 long); G_2 has alpha_1 short.

#include "errors.hpp"
#include "lie_type.hpp"
#include "subset.hpp"

#include <algorithm>
#include <compare>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace peterson {

/// Square integer matrix, row-major, indices 0-based internally.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int size() const { return n_; }
    int& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    int operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const std::vector<int>& data() const { return a_; }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        IntMatrix z(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const int v = x(i, k);
                if (v == 0) continue;
                for (int j = 0; j < x.n_; ++j) z(i, j) += v * y(k, j);
            }
        return z;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix& x, const IntMatrix& y) {
        if (auto c = x.n_ <=> y.n_; c != 0) return c;
        return x.a_ <=> y.a_;
    }

private:
    int n_{0};
    std::vector<int> a_;
};

/// Integer coordinates in the simple-root basis.
struct Root {
    std::vector<int> coeffs;

    int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }
    bool is_positive() const {
        bool any = false;
        for (int c : coeffs) {
            if (c < 0) return false;
            any = any || c > 0;
        }
        return any;
    }
    bool is_negative() const {
        bool any = false;
        for (int c : coeffs) {
            if (c > 0) return false;
            any = any || c < 0;
        }
        return any;
    }
    Root operator-() const {
        Root r = *this;
        for (int& c : r.coeffs) c = -c;
        return r;
    }
    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

/// Cartan matrix with entry (i, j) = <alpha_j, alpha_i^vee>, 0-based.
inline IntMatrix cartan_matrix(LieType t) {
    t = make_lie_type(t.family, t.rank);
    const int n = t.rank;
    if (n > kMaxRank) throw std::invalid_argument("rank " + std::to_string(n) + " exceeds supported maximum");
    IntMatrix a = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i) a(i, i) = 2;
    auto bond = [&](int i, int j) { a(i - 1, j - 1) = -1; a(j - 1, i - 1) = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            break;
        case Family::B:
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            a(n - 1, n - 2) = -2;  // alpha_n short
            break;
        case Family::C:
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            a(n - 2, n - 1) = -2;  // alpha_n long
            break;
        case Family::D:
            for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
            bond(n - 2, n);
            break;
        case Family::E:
            bond(1, 3);
            bond(2, 4);
            for (int i = 3; i < n; ++i) bond(i, i + 1);
            break;
        case Family::F:
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
            a(2, 1) = -2;  // alpha_3 short
            break;
        case Family::G:
            bond(1, 2);
            a(0, 1) = -3;  // alpha_1 short
            break;
    }
    return a;
}

class RootSystem {
public:
    explicit RootSystem(LieType t) : type_(t), cartan_(peterson::cartan_matrix(t)) { close_positive_roots(); }

    const LieType& lie_type() const { return type_; }
    int rank() const { return type_.rank; }
    /// <alpha_j, alpha_i^vee>, 1-based.
    int cartan(int i, int j) const { return cartan_(i - 1, j - 1); }
    const IntMatrix& cartan_matrix() const { return cartan_; }

    bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }

    Root simple_root(int i) const {
        check_index(i);
        Root r{std::vector<int>(rank(), 0)};
        r.coeffs[i - 1] = 1;
        return r;
    }

    /// <r, alpha_i^vee>
    int pairing(const Root& r, int i) const {
        check_index(i);
        int s = 0;
        for (int j = 0; j < rank(); ++j) s += r.coeffs[j] * cartan_(i - 1, j);
        return s;
    }

    Root reflect(int i, Root r) const {
        if (static_cast<int>(r.coeffs.size()) != rank()) throw std::invalid_argument("root has wrong dimension");
        const int p = pairing(r, i);
        r.coeffs[i - 1] -= p;
        return r;
    }

    /// Sorted by height, then coefficient vector.
    const std::vector<Root>& positive_roots() const { return positive_; }

    int coxeter_number() const { return static_cast<int>(2 * positive_.size() / rank()); }

    void check_index(int i) const {
        if (i < 1 || i > rank())
            throw std::out_of_range("simple index " + std::to_string(i) + " outside 1.." + std::to_string(rank()));
    }

private:
    void close_positive_roots() {
        std::set<Root> seen;
        std::deque<Root> queue;
        for (int i = 1; i <= rank(); ++i) {
            seen.insert(simple_root(i));
            queue.push_back(simple_root(i));
        }
        while (!queue.empty()) {
            Root r = std::move(queue.front());
            queue.pop_front();
            for (int i = 1; i <= rank(); ++i) {
                Root s = reflect(i, r);
                if (s.is_positive() && seen.insert(s).second) queue.push_back(std::move(s));
            }
        }
        positive_.assign(seen.begin(), seen.end());
        std::stable_sort(positive_.begin(), positive_.end(),
                         [](const Root& a, const Root& b) { return a.height() < b.height(); });
    }

    LieType type_;
    IntMatrix cartan_;
    std::vector<Root> positive_;
};

inline RootSystem build_root_system(LieType t) { return RootSystem(t); }

inline Root reflect(const RootSystem& rs, int i, const Root& r) { return rs.reflect(i, r); }

// ---------------------------------------------------------------------------
// Sub-diagram classification

/// One maximal connected piece of a subset, identified with a standard diagram.
struct Component {
    Subset indices;
    LieType type;
    /// ambient_of[k-1] is the ambient index carrying standard label k.
    std::vector<int> ambient_of;

    int standard_index(int ambient) const {
        auto it = std::find(ambient_of.begin(), ambient_of.end(), ambient);
        if (it == ambient_of.end()) throw std::out_of_range("index not in component");
        return static_cast<int>(it - ambient_of.begin()) + 1;
    }
};

struct SimpleSubset {
    Subset indices;
    /// Ordered by smallest ambient index.
    std::vector<Component> components;

    bool connected() const { return components.size() <= 1; }
};

namespace detail {

inline std::vector<Subset> connected_pieces(const RootSystem& rs, Subset s) {
    std::vector<Subset> out;
    Subset left = s;
    while (!left.empty()) {
        const int seed = left.indices().front();
        Subset piece = Subset::single(seed);
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : left.indices())
                if (!piece.contains(u) && rs.adjacent(u, v)) {
                    piece.insert(u);
                    stack.push_back(u);
                }
        }
        out.push_back(piece);
        left = left - piece;
    }
    return out;
}

/// Visits bijections standard -> ambient preserving the Cartan entries, in
/// lexicographic order of (ambient_of[0], ambient_of[1], ...). The visitor
/// returns false to stop.
inline void visit_isomorphisms(const RootSystem& rs, const std::vector<int>& ambient,
                               const IntMatrix& standard,
                               const std::function<bool(const std::vector<int>&)>& visit) {
    const int m = standard.size();
    if (static_cast<int>(ambient.size()) != m) return;
    std::vector<int> image(m, 0);
    std::vector<bool> used(ambient.size(), false);
    bool stop = false;
    std::function<void(int)> extend = [&](int k) {
        if (stop) return;
        if (k == m) {
            stop = !visit(image);
            return;
        }
        for (std::size_t c = 0; c < ambient.size() && !stop; ++c) {
            if (used[c]) continue;
            const int a = ambient[c];
            bool ok = true;
            for (int p = 0; p < k && ok; ++p)
                ok = rs.cartan(image[p], a) == standard(p, k) && rs.cartan(a, image[p]) == standard(k, p);
            if (!ok) continue;
            used[c] = true;
            image[k] = a;
            extend(k + 1);
            used[c] = false;
        }
    };
    extend(0);
}

inline std::vector<LieType> candidate_types(int m) {
    std::vector<LieType> out;
    for (char f : std::string("ABCDEFG")) {
        const auto fam = static_cast<Family>(f);
        if (rank_violation(fam, m).empty()) out.push_back({fam, m});
    }
    return out;
}

}  // namespace detail

/// Every diagram isomorphism from the standard diagram of `type` onto the
/// ambient nodes of `piece`, lexicographically ordered.
inline std::vector<std::vector<int>> component_isomorphisms(const RootSystem& rs, Subset piece, LieType type) {
    std::vector<std::vector<int>> out;
    detail::visit_isomorphisms(rs, piece.indices(), cartan_matrix(type), [&](const std::vector<int>& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

inline SimpleSubset classify_subset(const RootSystem& rs, Subset indices) {
    if (!indices.is_subset_of(Subset::full(rs.rank())))
        throw std::out_of_range("subset " + to_string(indices) + " not contained in 1.." + std::to_string(rs.rank()));
    SimpleSubset out{indices, {}};
    // pieces come out seeded by their smallest index, hence already ordered
    for (Subset piece : detail::connected_pieces(rs, indices)) {
        const auto nodes = piece.indices();
        std::optional<Component> best;
        for (LieType t : detail::candidate_types(static_cast<int>(nodes.size()))) {
            detail::visit_isomorphisms(rs, nodes, cartan_matrix(t), [&](const std::vector<int>& m) {
                if (!best || m < best->ambient_of) best = Component{piece, t, m};
                return false;  // first hit is the lexicographic minimum for this type
            });
        }
        if (!best) throw std::logic_error("unclassifiable component " + to_string(piece));
        out.components.push_back(std::move(*best));
    }
    return out;
}

inline SimpleSubset classify_subset(const RootSystem& rs, const std::vector<int>& indices) {
    return classify_subset(rs, Subset::of(indices));
}

}  // namespace peterson
