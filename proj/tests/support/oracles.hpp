// Brute-force reference computations for the unit tests. Everything here works from
// first principles (explicit permutations, explicit subspaces) and shares no code
// with the library beyond the basic value types.
#pragma once

#include "repstab/partitions.hpp"
#include "repstab/symchar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace testoracle {

using repstab::BigInt;
using repstab::Partition;
using repstab::Rational;
using Perm = std::vector<int>;

// ---- partitions -------------------------------------------------------------

/// All compositions of n, keeping the weakly decreasing ones.
inline std::vector<std::vector<int>> partitions_by_compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) return {{}};
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        if (std::is_sorted(parts.rbegin(), parts.rend())) out.push_back(parts);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Standard Young tableaux by removing the largest entry from a corner.
inline BigInt syt_count(std::vector<int> shape) {
    static std::map<std::vector<int>, BigInt> memo;
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    BigInt total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
        if (!corner) continue;
        auto smaller = shape;
        --smaller[i];
        total += syt_count(smaller);
    }
    memo[shape] = total;
    return total;
}

// ---- permutations -----------------------------------------------------------

inline std::vector<Perm> all_permutations(int n) {
    std::vector<Perm> out;
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline Partition cycle_type(const Perm& p) {
    std::vector<int> seen(p.size(), 0), lengths;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(lengths);
}

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

/// Class function from a trace computed on one explicit permutation per class.
inline repstab::CharacterVector character_from(int n, const std::function<Rational(const Perm&)>& trace) {
    const auto& classes = repstab::conjugacy_classes(n);
    repstab::CharacterVector chi = repstab::CharacterVector::zero(n);
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        const auto& mu = classes.classes[c].cycle_type;
        Perm p(static_cast<std::size_t>(n));
        int start = 0;
        for (int part : mu.parts()) {
            for (int i = 0; i < part; ++i) p[static_cast<std::size_t>(start + i)] = start + (i + 1) % part;
            start += part;
        }
        chi.values[c] = trace(p);
    }
    return chi;
}

// ---- characters via the Frobenius formula ----------------------------------

/// chi^lambda(mu) as the coefficient of x^(lambda + delta) in a_delta * p_mu.
inline BigInt frobenius_character_uncached(const Partition& lambda, const Partition& mu) {
    const int n = lambda.size();
    const int vars = std::max(1, lambda.length());
    using Mono = std::vector<int>;
    std::map<Mono, BigInt> poly;
    // a_delta = sum over permutations of sign * x^(sigma(delta))
    Perm idx(static_cast<std::size_t>(vars));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        Mono m(static_cast<std::size_t>(vars));
        for (int i = 0; i < vars; ++i) m[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = vars - 1 - i;
        int inversions = 0;
        for (int i = 0; i < vars; ++i)
            for (int j = i + 1; j < vars; ++j) inversions += idx[static_cast<std::size_t>(i)] > idx[static_cast<std::size_t>(j)];
        poly[m] += (inversions % 2 ? -1 : 1);
    } while (std::next_permutation(idx.begin(), idx.end()));
    for (int part : mu.parts()) {
        std::map<Mono, BigInt> next;
        for (const auto& [m, c] : poly)
            for (int v = 0; v < vars; ++v) {
                Mono m2 = m;
                m2[static_cast<std::size_t>(v)] += part;
                next[m2] += c;
            }
        poly = std::move(next);
    }
    Mono target(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) target[static_cast<std::size_t>(i)] = (i < lambda.length() ? lambda[i] : 0) + vars - 1 - i;
    (void)n;
    auto it = poly.find(target);
    return it == poly.end() ? BigInt(0) : it->second;
}

inline BigInt frobenius_character(const Partition& lambda, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, BigInt> memo;
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, frobenius_character_uncached(lambda, mu)).first;
    return it->second;
}

/// Multiplicities by explicit averaging over all of S_n.
inline std::map<Partition, BigInt> decompose_by_brute_force(int n, const std::function<Rational(const Perm&)>& trace) {
    std::map<Partition, BigInt> out;
    const auto perms = all_permutations(n);
    std::vector<Rational> traces;
    for (const auto& p : perms) traces.push_back(trace(p));
    for (const auto& parts : partitions_by_compositions(n)) {
        const Partition lambda(parts);
        Rational s = 0;
        for (std::size_t i = 0; i < perms.size(); ++i) s += traces[i] * Rational(frobenius_character(lambda, cycle_type(perms[i])));
        s /= Rational(static_cast<long>(perms.size()));
        if (s != 0) out[lambda] = s.get_num();
    }
    return out;
}

/// Ind_{S_m x S_{n-m}}^{S_n}(V_lambda x trivial) at g: sum over g-stable m-subsets A of chi_lambda(g|A).
inline Rational induced_trace(const Partition& lambda, const Perm& g) {
    const int n = static_cast<int>(g.size());
    const int m = lambda.size();
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        bool stable = true;
        for (int i = 0; i < n && stable; ++i)
            if ((mask >> i) & 1u) stable = (mask >> g[static_cast<std::size_t>(i)]) & 1u;
        if (!stable) continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) members.push_back(i);
        Perm restricted(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            restricted[i] = static_cast<int>(std::find(members.begin(), members.end(), g[static_cast<std::size_t>(members[i])]) - members.begin());
        total += Rational(frobenius_character(lambda, cycle_type(restricted)));
    }
    return total;
}

inline int fixed_points(const Perm& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) c += p[i] == static_cast<int>(i);
    return c;
}

inline Perm power(const Perm& p, int e) {
    Perm out(p.size());
    std::iota(out.begin(), out.end(), 0);
    for (int i = 0; i < e; ++i) out = compose(p, out);
    return out;
}

inline int moebius(int n) {
    int r = 1;
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
    }
    return r;
}

/// Character of the weight-w free Lie (super)algebra on letters permuted by g:
/// (1/w) sum_{e | w} mu(e) s(e) fix(g^e)^{w/e}, s(e) = (-1)^{w + w/e} for odd letters.
inline Rational lie_trace(const Perm& g, int w, bool odd_letters) {
    Rational total = 0;
    for (int e = 1; e <= w; ++e) {
        if (w % e) continue;
        int mu = moebius(e);
        if (!mu) continue;
        if (odd_letters && (w + w / e) % 2) mu = -mu;
        BigInt f = 1;
        for (int i = 0; i < w / e; ++i) f *= fixed_points(power(g, e));
        total += Rational(mu) * Rational(f);
    }
    return total / w;
}

// ---- dense exact linear algebra ---------------------------------------------

using Row = std::vector<Rational>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<Row>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline std::size_t rank_of(std::vector<Row> rows) { return rref(rows).size(); }

/// Invariant subspace U (spanned by `rows`) and a linear map given on vectors:
/// trace of the map restricted to U.
inline Rational restricted_trace(std::vector<Row> rows, const std::function<Row(const Row&)>& act) {
    const auto pivots = rref(rows);
    Rational t = 0;
    // in reduced form, the coordinate of v along basis row i is v[pivot_i]
    for (std::size_t i = 0; i < rows.size(); ++i) t += act(rows[i])[pivots[i]];
    return t;
}

// ---- tensor algebra brute force for DK quotients -----------------------------

using Word = std::vector<int>;

struct WordSpace {
    int letters = 0;
    int length = 0;
    std::size_t size() const {
        std::size_t s = 1;
        for (int i = 0; i < length; ++i) s *= static_cast<std::size_t>(letters);
        return s;
    }
    std::size_t index(const Word& w) const {
        std::size_t i = 0;
        for (int x : w) i = i * static_cast<std::size_t>(letters) + static_cast<std::size_t>(x);
        return i;
    }
    Word word(std::size_t i) const {
        Word w(static_cast<std::size_t>(length));
        for (int k = length - 1; k >= 0; --k) {
            w[static_cast<std::size_t>(k)] = static_cast<int>(i % static_cast<std::size_t>(letters));
            i /= static_cast<std::size_t>(letters);
        }
        return w;
    }
};

using Poly = std::map<Word, Rational>;

inline Poly super_bracket(const Poly& a, int wa, const Poly& b, int wb, bool odd) {
    const Rational s = (odd && (wa % 2) && (wb % 2)) ? Rational(1) : Rational(-1);
    Poly out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            Word uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            out[uv] += x * y;
            out[vu] += s * x * y;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// Drinfeld-Kohno data on k points: letter index of (i<j) in lex order and the
/// oriented letter for any ordered pair.
struct DKLetters {
    int k;
    bool odd;
    int count() const { return k * (k - 1) / 2; }
    int index(int i, int j) const {  // i < j
        int idx = 0;
        for (int a = 0; a < i; ++a) idx += k - 1 - a;
        return idx + (j - i - 1);
    }
    std::pair<int, Rational> oriented(int i, int j) const {
        if (i < j) return {index(i, j), Rational(1)};
        return {index(j, i), odd ? Rational(-1) : Rational(1)};
    }
};

/// Weight-w slices of the free Lie algebra on the B_ij and of the braid ideal, as
/// explicit spanning sets of vectors in the tensor space.
struct DKBruteForce {
    DKLetters letters;
    int weight;
    std::vector<Row> lie_rows, ideal_rows;
    WordSpace space;

    DKBruteForce(int k, bool odd, int w) : letters{k, odd}, weight(w), space{k * (k - 1) / 2, w} {
        const int L = letters.count();
        std::vector<std::vector<Poly>> trees(static_cast<std::size_t>(w) + 1);
        for (int x = 0; x < L; ++x) trees[1].push_back(Poly{{Word{x}, Rational(1)}});
        for (int s = 2; s <= w; ++s)
            for (int a = 1; a < s; ++a)
                for (const auto& l : trees[static_cast<std::size_t>(a)])
                    for (const auto& r : trees[static_cast<std::size_t>(s - a)]) {
                        auto p = super_bracket(l, a, r, s - a, odd);
                        if (!p.empty()) trees[static_cast<std::size_t>(s)].push_back(std::move(p));
                    }
        for (const auto& p : trees[static_cast<std::size_t>(w)]) lie_rows.push_back(to_row(p));
        if (w < 2) return;
        // relators
        std::vector<Poly> rel;
        auto letter = [&](int i, int j) {
            auto [idx, sign] = letters.oriented(i, j);
            return Poly{{Word{idx}, sign}};
        };
        auto add = [](Poly a, const Poly& b) {
            for (const auto& [w2, c] : b) a[w2] += c;
            std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
            return a;
        };
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int s = 0; s < k; ++s)
                    for (int t = s + 1; t < k; ++t)
                        if (s != i && s != j && t != i && t != j) rel.push_back(super_bracket(letter(i, j), 1, letter(s, t), 1, odd));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int s = 0; s < k; ++s)
                    if (s != i && s != j) rel.push_back(super_bracket(letter(i, j), 1, add(letter(i, s), letter(j, s)), 1, odd));
        std::vector<Poly> chains = rel;
        for (int s = 3; s <= w; ++s) {
            std::vector<Poly> next;
            for (const auto& c : chains)
                for (int x = 0; x < L; ++x) {
                    auto p = super_bracket(c, s - 1, Poly{{Word{x}, Rational(1)}}, 1, odd);
                    if (!p.empty()) next.push_back(std::move(p));
                }
            chains = std::move(next);
        }
        for (const auto& p : chains)
            if (!p.empty()) ideal_rows.push_back(to_row(p));
    }

    Row to_row(const Poly& p) const {
        Row r(space.size(), Rational(0));
        for (const auto& [w2, c] : p) r[space.index(w2)] = c;
        return r;
    }

    std::size_t dimension() const { return rank_of(lie_rows) - rank_of(ideal_rows); }

    /// Trace of sigma on the quotient: trace on the Lie slice minus trace on the ideal slice.
    Rational trace(const Perm& sigma) const {
        const int L = letters.count();
        std::vector<int> image(static_cast<std::size_t>(L));
        std::vector<Rational> sign(static_cast<std::size_t>(L));
        for (int i = 0; i < letters.k; ++i)
            for (int j = i + 1; j < letters.k; ++j) {
                auto [idx, s] = letters.oriented(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
                image[static_cast<std::size_t>(letters.index(i, j))] = idx;
                sign[static_cast<std::size_t>(letters.index(i, j))] = s;
            }
        auto act = [&](const Row& v) {
            Row out(v.size(), Rational(0));
            for (std::size_t c = 0; c < v.size(); ++c) {
                if (v[c] == 0) continue;
                Word w2 = space.word(c);
                Rational s = 1;
                for (auto& x : w2) {
                    s *= sign[static_cast<std::size_t>(x)];
                    x = image[static_cast<std::size_t>(x)];
                }
                out[space.index(w2)] += s * v[c];
            }
            return out;
        };
        Rational t = restricted_trace(lie_rows, act);
        if (!ideal_rows.empty()) t -= restricted_trace(ideal_rows, act);
        return t;
    }
};

}  // namespace testoracle
