#include "repstab/oracles.hpp"

#include "repstab/linalg.hpp"

#include <map>

namespace repstab::oracle {

namespace {

using Word = std::vector<int>;
using Poly = std::map<Word, BigInt>;

struct Tree {
    Poly poly;
    int weight = 0;
};

Poly bracket(const Poly& a, int wa, const Poly& b, int wb, Parity parity) {
    // [a,b] = ab - (-1)^{p wa wb} ba
    const bool swap_negates = !(parity == Parity::odd && wa % 2 == 1 && wb % 2 == 1);
    Poly out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            Word vu = v;
            vu.insert(vu.end(), u.begin(), u.end());
            out[uv] += x * y;
            if (swap_negates) out[vu] -= x * y;
            else out[vu] += x * y;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

BigInt super_witt_dimension(int generators, int weight, Parity parity) {
    if (weight <= 0 || generators <= 0) return 0;
    BigInt total = 0;
    for (int e = 1; e <= weight; ++e) {
        if (weight % e != 0) continue;
        const int mu = moebius(e);
        if (mu == 0) continue;
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(generators), static_cast<unsigned long>(weight / e));
        int sign = mu;
        if (parity == Parity::odd && (weight + weight / e) % 2 == 1) sign = -sign;
        total += sign * power;
    }
    if (total % weight != 0) throw Error(ErrorCode::InvariantViolation, "Witt sum not divisible by the weight");
    return total / weight;
}

BigInt magma_quotient_dimension(int generators, int weight, Parity parity) {
    if (weight <= 0 || generators <= 0) return 0;
    // all bracket trees by weight, built bottom up
    std::vector<std::vector<Poly>> trees(static_cast<std::size_t>(weight) + 1);
    for (int g = 0; g < generators; ++g) trees[1].push_back(Poly{{Word{g}, BigInt(1)}});
    for (int w = 2; w <= weight; ++w)
        for (int a = 1; a < w; ++a)
            for (const auto& left : trees[static_cast<std::size_t>(a)])
                for (const auto& right : trees[static_cast<std::size_t>(w - a)]) {
                    Poly p = bracket(left, a, right, w - a, parity);
                    if (!p.empty()) trees[static_cast<std::size_t>(w)].push_back(std::move(p));
                }
    std::map<Word, int> column;
    linalg::EchelonBasis span;
    for (const auto& p : trees[static_cast<std::size_t>(weight)]) {
        std::map<int, Rational> entries;
        for (const auto& [word, c] : p) {
            auto [it, fresh] = column.try_emplace(word, static_cast<int>(column.size()));
            entries[it->second] = Rational(c);
        }
        span.insert(linalg::from_map(entries));
    }
    return BigInt(static_cast<unsigned long>(span.rank()));
}

BigInt dk_semidirect_dimension(int k, Parity parity, int weight) {
    BigInt total = 0;
    for (int j = 1; j < k; ++j) total += super_witt_dimension(j, weight, parity);
    return total;
}

}  // namespace repstab::oracle
