#pragma once

// Schubert calculus on the Peterson variety through its S^1-fixed points.
//
// Fixed points and basis classes are both indexed by subsets K of the simple
// roots: the fixed point is the longest element w_K of W_K, the class is p_{v_K}
// where v_K multiplies the generators of each connected piece of K in the order
// of their standard labels. A class is recorded by its values p_{v_J}(w_K),
// each a monomial c * t^{|J|}.

#include "billey.hpp"
#include "bigint.hpp"
#include "errors.hpp"
#include "root_system.hpp"
#include "subset.hpp"
#include "weyl.hpp"

#include <algorithm>
#include <concepts>
#include <functional>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace peterson {

inline constexpr int kMaxPetersonRank = 8;

/// Word of v_K: each component's letters in ascending standard label,
/// components in ascending order of their smallest index.
inline Word v_word(const SimpleSubset& k) {
    Word out;
    for (const Component& c : k.components) out.insert(out.end(), c.ambient_of.begin(), c.ambient_of.end());
    return out;
}

inline WeylElement v_of(const RootSystem& rs, Subset k) { return element_of(rs, v_word(classify_subset(rs, k))); }

/// Supplies a reduced word of the longest element of a standard diagram.
using LongestWordProvider = std::function<Word(LieType)>;

/// w_K word assembled from per-component standard words relabelled into the
/// ambient diagram; checked against the longest element.
inline Word longest_word_from_components(const RootSystem& rs, const SimpleSubset& k,
                                         const LongestWordProvider& provider) {
    Word out;
    for (const Component& c : k.components)
        for (int letter : provider(c.type)) {
            if (letter < 1 || letter > static_cast<int>(c.ambient_of.size()))
                throw std::invalid_argument("supplied word for " + c.type.name() + " has out-of-range letter");
            out.push_back(c.ambient_of[letter - 1]);
        }
    if (!is_reduced(rs, out) || element_of(rs, out) != longest_element(rs, k.indices))
        throw std::invalid_argument("supplied words do not give a reduced word of w_K for K = " +
                                    to_string(k.indices));
    return out;
}

/// All fixed points w_K with the canonical reduced word of each.
inline std::vector<std::pair<Subset, Word>> fixed_points(const RootSystem& rs) {
    if (rs.rank() > kMaxPetersonRank) throw std::invalid_argument("fixed-point enumeration needs rank <= 8");
    std::vector<std::pair<Subset, Word>> out;
    for (Subset k : ordered_subsets(rs.rank())) out.emplace_back(k, canonical_word(rs, longest_element(rs, k)));
    return out;
}

/// p_{v_J}(w_K) computed from scratch.
inline TMonomial localization(const RootSystem& rs, Subset j, Subset k) {
    if (!j.is_subset_of(k)) return TMonomial::zero(j.size());
    return billey_specialized(rs, v_of(rs, j), canonical_word(rs, longest_element(rs, k)));
}

/// Precomputed per-subset data for one root system: classifications, v_K and
/// its subword automaton, and a reduced word of w_K with its heights.
/// Immutable after construction.
class PetersonSystem {
public:
    explicit PetersonSystem(LieType t, LongestWordProvider provider = {}) : rs_(t) {
        if (rs_.rank() > kMaxPetersonRank)
            throw std::invalid_argument("Peterson computations need rank <= 8 (got " + t.name() + ")");
        order_ = ordered_subsets(rs_.rank());
        const std::size_t n = std::size_t{1} << rs_.rank();
        entries_.resize(n);
        for (Subset k : order_) {
            Entry& e = entries_[k.bits()];
            e.classification = classify_subset(rs_, k);
            e.v_word = peterson::v_word(e.classification);
            e.v = element_of(rs_, e.v_word);
            e.automaton = std::make_unique<SubwordAutomaton>(rs_, e.v);
            e.w_word = provider ? longest_word_from_components(rs_, e.classification, provider)
                                : canonical_word(rs_, longest_element(rs_, k));
            e.heights.clear();
            for (int h : heights_list(rs_, e.w_word).heights) e.heights.emplace_back(h);
        }
    }

    PetersonSystem(const PetersonSystem&) = delete;
    PetersonSystem& operator=(const PetersonSystem&) = delete;
    PetersonSystem(PetersonSystem&&) noexcept = default;
    PetersonSystem& operator=(PetersonSystem&&) noexcept = default;

    const PetersonSystem& system() const { return *this; }
    const RootSystem& root_system() const { return rs_; }
    int rank() const { return rs_.rank(); }
    /// Subsets in (cardinality, lexicographic) order.
    const std::vector<Subset>& subsets() const { return order_; }

    const SimpleSubset& classification(Subset k) const { return at(k).classification; }
    const WeylElement& v(Subset k) const { return at(k).v; }
    const Word& v_word(Subset k) const { return at(k).v_word; }
    const Word& fixed_point_word(Subset k) const { return at(k).w_word; }

    /// p_{v_J}(w_K).
    TMonomial localization(Subset j, Subset k) const {
        if (!j.is_subset_of(k)) return TMonomial::zero(j.size());
        const Entry& point = at(k);
        return {Rational(at(j).automaton->embedding_sum(point.w_word, point.heights)), j.size()};
    }

private:
    struct Entry {
        SimpleSubset classification;
        Word v_word;
        WeylElement v;
        std::unique_ptr<SubwordAutomaton> automaton;
        Word w_word;
        std::vector<BigInt> heights;
    };

    const Entry& at(Subset k) const {
        if (k.bits() >= entries_.size()) throw std::out_of_range("subset " + to_string(k) + " outside the diagram");
        return entries_[k.bits()];
    }

    RootSystem rs_;
    std::vector<Subset> order_;
    std::vector<Entry> entries_;
};

/// Every localization p_{v_J}(w_K), computed once. Cells are independent, so
/// they may be filled by several threads; the result does not depend on the
/// thread count.
class LocalizationTable {
public:
    explicit LocalizationTable(std::shared_ptr<const PetersonSystem> sys, unsigned threads = 1)
        : sys_(std::move(sys)) {
        const std::size_t n = std::size_t{1} << sys_->rank();
        cells_.assign(n * n, TMonomial{});
        std::vector<std::pair<Subset, Subset>> work;
        for (std::uint32_t k = 0; k < n; ++k)
            for (std::uint32_t j = 0; j < n; ++j) {
                if ((j & ~k) == 0)
                    work.emplace_back(Subset(j), Subset(k));
                else
                    cells_[k * n + j] = TMonomial::zero(Subset(j).size());
            }
        auto run = [&](std::size_t begin, std::size_t stride) {
            for (std::size_t w = begin; w < work.size(); w += stride) {
                const auto [j, k] = work[w];
                cells_[k.bits() * n + j.bits()] = sys_->localization(j, k);
            }
        };
        threads = std::max(1u, threads);
        if (threads == 1) {
            run(0, 1);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
        }
    }

    const PetersonSystem& system() const { return *sys_; }
    int rank() const { return sys_->rank(); }

    const TMonomial& localization(Subset j, Subset k) const {
        const std::size_t n = std::size_t{1} << sys_->rank();
        return cells_[k.bits() * n + j.bits()];
    }

private:
    std::shared_ptr<const PetersonSystem> sys_;
    std::vector<TMonomial> cells_;
};

template <class S>
concept LocalizationSource = requires(const S& s, Subset j, Subset k) {
    { s.system() } -> std::convertible_to<const PetersonSystem&>;
    { s.localization(j, k) } -> std::convertible_to<TMonomial>;
};

/// Square matrix of localizations: rows are fixed points, columns classes,
/// both in (cardinality, lexicographic) order.
struct BasisTable {
    LieType type;
    std::vector<Subset> order;
    std::vector<std::vector<TMonomial>> matrix;  // matrix[row][col] = p_{v_col}(w_row)
};

template <LocalizationSource S>
BasisTable basis_table(const S& src) {
    const auto& order = src.system().subsets();
    BasisTable out{src.system().root_system().lie_type(), order, {}};
    for (Subset row : order) {
        std::vector<TMonomial> r;
        r.reserve(order.size());
        for (Subset col : order) r.push_back(src.localization(col, row));
        out.matrix.push_back(std::move(r));
    }
    return out;
}

inline BasisTable basis_table(LieType t, unsigned threads = 1) {
    return basis_table(LocalizationTable(std::make_shared<const PetersonSystem>(t), threads));
}

// ---------------------------------------------------------------------------
// Monk's rule

struct MonkTerm {
    Subset j;
    Rational coeff;
};

/// p_{s_i} * p_{v_K} = diagonal * p_{v_K} + sum_J coeff_J * p_{v_J}, over J = K + one index.
struct MonkExpansion {
    int i{0};
    Subset k;
    TMonomial diagonal;
    std::vector<MonkTerm> terms;  // every codimension-one superset, in subset order
};

/// Expands both sides of the expansion at the fixed point w_L.
template <LocalizationSource S>
std::pair<TMonomial, TMonomial> monk_sides_at(const S& src, const MonkExpansion& m, Subset l) {
    const TMonomial pk = src.localization(m.k, l);
    const TMonomial lhs = src.localization(Subset::single(m.i), l) * pk;
    TMonomial rhs = m.diagonal * pk;
    for (const MonkTerm& term : m.terms) rhs = rhs + TMonomial{term.coeff, 0} * src.localization(term.j, l);
    return {lhs, rhs};
}

/// Coefficients from c_{i,K}^J = (p_{s_i}(w_J) - p_{s_i}(w_K)) p_{v_K}(w_J) / p_{v_J}(w_J);
/// the expansion is then checked at every fixed point.
template <LocalizationSource S>
MonkExpansion monk(const S& src, int i, Subset k) {
    const PetersonSystem& sys = src.system();
    sys.root_system().check_index(i);
    if (!k.is_subset_of(Subset::full(sys.rank()))) throw std::out_of_range("subset outside the diagram");
    const Subset si = Subset::single(i);
    MonkExpansion out{i, k, src.localization(si, k), {}};
    for (Subset j : sys.subsets()) {
        if (j.size() != k.size() + 1 || !k.is_subset_of(j)) continue;
        const TMonomial c =
            (src.localization(si, j) - src.localization(si, k)) * src.localization(k, j) / src.localization(j, j);
        if (!c.is_zero() && c.degree != 0)
            throw VerificationFailure("Monk coefficient has nonzero degree");
        out.terms.push_back({j, c.coeff});
    }
    for (Subset l : sys.subsets()) {
        const auto [lhs, rhs] = monk_sides_at(src, out, l);
        if (!(lhs == rhs))
            throw VerificationFailure("Monk expansion for i=" + std::to_string(i) + ", K=" + to_string(k) +
                                      " fails at w_L, L=" + to_string(l) + ": " + to_string(lhs) + " vs " +
                                      to_string(rhs));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Giambelli

struct ComponentCount {
    Component component;
    std::size_t reduced_words{0};
};

/// C_K with C_K * p_{v_K} = prod_{i in K} p_{s_i}.
struct GiambelliCertificate {
    Subset k;
    Rational constant;
    std::vector<ComponentCount> components;
    int verified_points{0};
};

template <LocalizationSource S>
GiambelliCertificate giambelli(const S& src, Subset k) {
    const PetersonSystem& sys = src.system();
    const RootSystem& rs = sys.root_system();
    GiambelliCertificate out{k, Rational(1), {}, 0};
    for (const Component& c : sys.classification(k).components) {
        const std::size_t words = all_reduced_words(rs, element_of(rs, c.ambient_of)).size();
        out.constant *= Rational(factorial(static_cast<unsigned>(c.ambient_of.size()))) / Rational(words);
        out.components.push_back({c, words});
    }
    for (Subset l : sys.subsets()) {
        TMonomial product = TMonomial::one();
        for (int i : k.indices()) product = product * src.localization(Subset::single(i), l);
        const TMonomial lhs = TMonomial{out.constant, 0} * src.localization(k, l);
        if (!(lhs == product))
            throw VerificationFailure("Giambelli identity for K=" + to_string(k) + " fails at w_L, L=" +
                                      to_string(l) + ": " + to_string(lhs) + " vs " + to_string(product));
        ++out.verified_points;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Non-integral Monk coefficients

struct NonIntegralCoefficient {
    int i{0};
    Subset k;
    Subset j;
    Rational coeff;
};

/// Every non-integral Monk coefficient over all generators and basis classes.
template <LocalizationSource S>
std::vector<NonIntegralCoefficient> scan_nonintegral(const S& src) {
    std::vector<NonIntegralCoefficient> out;
    const PetersonSystem& sys = src.system();
    for (int i = 1; i <= sys.rank(); ++i)
        for (Subset k : sys.subsets())
            for (const MonkTerm& t : monk(src, i, k).terms)
                if (!is_integer(t.coeff)) out.push_back({i, k, t.j, t.coeff});
    return out;
}

}  // namespace peterson
