#pragma once

// Localization of equivariant Schubert classes at torus-fixed points.
//
// For a reduced word b_1...b_m of w, r(j) = s_{b_1}...s_{b_{j-1}}(alpha_{b_j}).
// sigma_v(w) sums, over position sets j_1 < ... < j_l whose letters spell a
// reduced word of v, the product r(j_1)...r(j_l). Sending every simple root to t
// turns each r(j) into height(r(j)) * t.

#include "bigint.hpp"
#include "errors.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace peterson {

inline constexpr std::size_t kDefaultPolynomialTermCap = 1'000'000;

/// c * t^degree with exact rational c.
struct TMonomial {
    Rational coeff{0};
    int degree{0};

    static TMonomial zero(int degree = 0) { return {Rational(0), degree}; }
    static TMonomial one() { return {Rational(1), 0}; }

    bool is_zero() const { return coeff == 0; }

    friend TMonomial operator*(const TMonomial& a, const TMonomial& b) {
        return {a.coeff * b.coeff, a.degree + b.degree};
    }
    friend TMonomial operator/(const TMonomial& a, const TMonomial& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero monomial");
        return {a.coeff / b.coeff, a.degree - b.degree};
    }
    friend TMonomial operator+(const TMonomial& a, const TMonomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree != b.degree) throw std::domain_error("adding monomials of different degree");
        return {a.coeff + b.coeff, a.degree};
    }
    friend TMonomial operator-(const TMonomial& a, const TMonomial& b) {
        return a + TMonomial{-b.coeff, b.degree};
    }
    /// Zero compares equal to zero in any degree.
    friend bool operator==(const TMonomial& a, const TMonomial& b) {
        return a.coeff == b.coeff && (a.is_zero() || a.degree == b.degree);
    }
};

/// Polynomial in the simple roots: exponent vector -> integer coefficient.
struct RootPolynomial {
    std::map<std::vector<int>, BigInt> terms;

    static RootPolynomial constant(int rank, BigInt c) {
        RootPolynomial p;
        if (c != 0) p.terms.emplace(std::vector<int>(rank, 0), std::move(c));
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    /// Common total degree; -1 for the zero polynomial; throws if not homogeneous.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int x : e) s += x;
            if (d >= 0 && s != d) throw std::domain_error("polynomial is not homogeneous");
            d = s;
        }
        return d;
    }

    void add(const RootPolynomial& other) {
        for (const auto& [e, c] : other.terms) {
            auto& slot = terms[e];
            slot += c;
            if (slot == 0) terms.erase(e);
        }
    }

    /// Multiplies by the linear form sum_i r_i alpha_i.
    RootPolynomial times(const Root& r) const {
        RootPolynomial out;
        for (const auto& [e, c] : terms)
            for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
                if (r.coeffs[i] == 0) continue;
                auto f = e;
                ++f[i];
                auto& slot = out.terms[f];
                slot += c * r.coeffs[i];
                if (slot == 0) out.terms.erase(f);
            }
        return out;
    }

    friend bool operator==(const RootPolynomial&, const RootPolynomial&) = default;
};

/// Sum of coefficients times t^degree.
inline TMonomial specialize(const RootPolynomial& p) {
    const int d = p.degree();
    BigInt s = 0;
    for (const auto& [e, c] : p.terms) s += c;
    return {Rational(s), d < 0 ? 0 : d};
}

struct HeightList {
    Word word;
    std::vector<int> heights;
};

/// The roots r(1..m) of a reduced word; throws if the word is not reduced.
inline std::vector<Root> word_roots(const RootSystem& rs, const Word& word) {
    check_word(rs, word);
    std::vector<Root> out;
    out.reserve(word.size());
    WeylElement prefix = WeylElement::identity(rs.rank());
    for (std::size_t j = 0; j < word.size(); ++j) {
        Root r = prefix.apply(rs.simple_root(word[j]));
        if (!r.is_positive())
            throw std::invalid_argument("word " + to_string(word) + " is not reduced (fails at position " +
                                        std::to_string(j + 1) + ")");
        out.push_back(std::move(r));
        prefix = prefix.times_simple(rs, word[j]);
    }
    return out;
}

/// r(j, word), 1-based position.
inline Root root_at(const RootSystem& rs, const Word& word, int j) {
    if (j < 1 || j > static_cast<int>(word.size()))
        throw std::out_of_range("position " + std::to_string(j) + " outside word of length " +
                                std::to_string(word.size()));
    return word_roots(rs, word)[j - 1];
}

inline HeightList heights_list(const RootSystem& rs, const Word& word) {
    HeightList out{word, {}};
    for (const Root& r : word_roots(rs, word)) out.heights.push_back(r.height());
    return out;
}

namespace detail {

inline void enumerate_embeddings(const std::vector<Root>& roots, const Word& word, const Word& target,
                                 std::size_t matched, std::size_t from, const RootPolynomial& partial,
                                 RootPolynomial& total, std::size_t cap) {
    if (matched == target.size()) {
        total.add(partial);
        if (total.terms.size() > cap)
            throw LimitExceeded("Billey polynomial exceeded cap of " + std::to_string(cap) + " terms");
        return;
    }
    const std::size_t remaining = target.size() - matched;
    for (std::size_t p = from; p + remaining <= word.size(); ++p)
        if (word[p] == target[matched])
            enumerate_embeddings(roots, word, target, matched + 1, p + 1, partial.times(roots[p]), total, cap);
}

}  // namespace detail

/// sigma_v(w) by explicit enumeration of every embedding of every reduced word
/// of v. Intended for small cases: the number of terms grows quickly with rank
/// and length, so enumeration stops with LimitExceeded past `term_cap` terms.
inline RootPolynomial billey_polynomial(const RootSystem& rs, const WeylElement& v, const Word& w_word,
                                        std::size_t term_cap = kDefaultPolynomialTermCap,
                                        std::size_t word_cap = kDefaultReducedWordCap) {
    const auto roots = word_roots(rs, w_word);
    RootPolynomial total;
    const auto unit = RootPolynomial::constant(rs.rank(), 1);
    for (const Word& vw : all_reduced_words(rs, v, word_cap))
        detail::enumerate_embeddings(roots, w_word, vw, 0, 0, unit, total, term_cap);
    return total;
}

/// Prefixes of reduced words of v, as a layered automaton. A state is the
/// element u reached so far, stored as q = v^{-1} u; letter i extends the
/// prefix exactly when q(alpha_i) < 0. The accepting state is q = e.
class SubwordAutomaton {
public:
    SubwordAutomaton(const RootSystem& rs, const WeylElement& v) : rank_(rs.rank()) {
        std::map<WeylElement, int> index;
        states_.push_back(inverse(rs, v));
        index.emplace(states_.front(), 0);
        for (std::size_t s = 0; s < states_.size(); ++s) {
            std::vector<int> row(rank_ + 1, -1);
            for (int i = 1; i <= rank_; ++i) {
                if (!states_[s].is_right_descent(i)) continue;
                WeylElement nxt = states_[s].times_simple(rs, i);
                auto [it, fresh] = index.emplace(nxt, static_cast<int>(states_.size()));
                if (fresh) states_.push_back(std::move(nxt));
                row[i] = it->second;
            }
            next_.push_back(std::move(row));
        }
        accept_ = index.at(WeylElement::identity(rank_));
        length_ = 0;
        for (int s = 0; s != accept_;) {
            int i = 1;
            while (next_[s][i] < 0) ++i;
            s = next_[s][i];
            ++length_;
        }
    }

    int state_count() const { return static_cast<int>(states_.size()); }
    int accepting_state() const { return accept_; }
    /// Length of v.
    int target_length() const { return length_; }
    int next(int state, int letter) const { return next_[state][letter]; }

    /// Sum over embeddings of reduced words of v into `word` of the product of
    /// the weights at the chosen positions. States are in BFS order, so a
    /// descending sweep never reuses a position within one step.
    template <class Value>
    Value embedding_sum(const Word& word, const std::vector<Value>& weights) const {
        std::vector<Value> acc(states_.size(), Value(0));
        acc[0] = Value(1);
        for (std::size_t p = 0; p < word.size(); ++p) {
            const int b = word[p];
            for (int s = static_cast<int>(states_.size()) - 1; s >= 0; --s) {
                const int t = next_[s][b];
                if (t < 0 || acc[s] == 0) continue;
                acc[t] += acc[s] * weights[p];
            }
        }
        return acc[accept_];
    }

private:
    int rank_;
    std::vector<WeylElement> states_;
    std::vector<std::vector<int>> next_;
    int accept_{0};
    int length_{0};
};

/// p_v(w) = (sum over embeddings of the product of heights) * t^{l(v)}.
inline TMonomial billey_specialized(const RootSystem& rs, const WeylElement& v, const Word& w_word) {
    const HeightList h = heights_list(rs, w_word);
    const SubwordAutomaton automaton(rs, v);
    std::vector<BigInt> weights(h.heights.begin(), h.heights.end());
    return {Rational(automaton.embedding_sum(w_word, weights)), automaton.target_length()};
}

inline std::string to_string(const TMonomial& m) {
    if (m.is_zero()) return "0";
    std::string c = to_string(m.coeff);
    if (m.degree == 0) return c;
    const bool frac = !is_integer(m.coeff);
    std::string out = (m.coeff == 1) ? "" : (m.coeff == -1) ? "-" : frac ? "(" + c + ")" : c;
    out += "t";
    if (m.degree != 1) out += "^" + std::to_string(m.degree);
    return out;
}

}  // namespace peterson
