#include "repstab/reps.hpp"

#include <functional>

namespace repstab {

template <bool Signed>
BasicRep<Signed>::BasicRep(int n, std::initializer_list<std::pair<Partition, long>> entries) : n_(n) {
    for (const auto& [lambda, count] : entries) add(lambda, BigInt(count));
}

template <bool Signed>
BigInt BasicRep<Signed>::multiplicity(const Partition& lambda) const {
    auto it = mults_.find(lambda);
    return it == mults_.end() ? BigInt(0) : it->second;
}

template <bool Signed>
void BasicRep<Signed>::add(const Partition& lambda, const BigInt& count) {
    if (lambda.size() != n_) {
        throw Error(ErrorCode::RankMismatch, lambda.to_string() + " is not a partition of " + std::to_string(n_));
    }
    if (count == 0) return;
    BigInt& slot = mults_[lambda];
    slot += count;
    if constexpr (!Signed) {
        if (slot < 0) throw Error(ErrorCode::InvariantViolation, "negative multiplicity for " + lambda.to_string());
    }
    if (slot == 0) mults_.erase(lambda);
}

template <bool Signed>
BigInt BasicRep<Signed>::dimension() const {
    BigInt dim = 0;
    for (const auto& [lambda, count] : mults_) dim += count * hook_dimension(lambda);
    return dim;
}

template <bool Signed>
CharacterVector BasicRep<Signed>::character() const {
    CharacterVector chi = CharacterVector::zero(n_);
    if (mults_.empty()) return chi;
    auto table = character_table(n_);
    for (const auto& [lambda, count] : mults_) {
        const auto& row = table->row(lambda);
        for (std::size_t i = 0; i < chi.values.size(); ++i) chi.values[i] += Rational(count) * row.values[i];
    }
    return chi;
}

template class BasicRep<false>;
template class BasicRep<true>;

SymRep operator+(const SymRep& a, const SymRep& b) {
    if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "cannot add representations of different ranks");
    SymRep out = a;
    for (const auto& [lambda, count] : b.multiplicities()) out.add(lambda, count);
    return out;
}

SymRep scaled(const SymRep& a, const BigInt& factor) {
    SymRep out(a.rank());
    for (const auto& [lambda, count] : a.multiplicities()) out.add(lambda, count * factor);
    return out;
}

std::string to_string(const SymRep& rep) {
    if (rep.empty()) return "0";
    std::string out;
    for (const auto& [lambda, count] : rep.multiplicities()) {
        if (!out.empty()) out += " + ";
        if (count != 1) out += count.get_str() + "*";
        out += "V" + lambda.to_string();
    }
    return out;
}

SymRep trivial_rep(int n) {
    SymRep r(n);
    r.add(n == 0 ? Partition{} : Partition{n}, 1);
    return r;
}

SymRep sign_rep(int n) { return sign_twist(trivial_rep(n)); }

SymRep permutation_rep(int n) {
    SymRep r(n);
    if (n == 0) return r;
    r.add(Partition{n}, 1);
    if (n >= 2) r.add(Partition{n - 1, 1}, 1);
    return r;
}

SymRep regular_rep(int n) {
    SymRep r(n);
    for (const auto& lambda : enumerate_partitions(n)) r.add(lambda, hook_dimension(lambda));
    return r;
}

namespace {

template <bool Signed>
BasicRep<Signed> decompose_impl(const CharacterVector& chi) {
    auto table = character_table(chi.n);
    BasicRep<Signed> out(chi.n);
    for (std::size_t i = 0; i < table->labels.size(); ++i) {
        const Rational mult = inner_product(chi, table->rows[i]);
        if (mult.get_den() != 1) {
            throw Error(ErrorCode::NotACharacter, "non-integral multiplicity " + mult.get_str() + " of V" +
                                                      table->labels[i].to_string());
        }
        if constexpr (!Signed) {
            if (mult < 0) {
                throw Error(ErrorCode::NotACharacter, "negative multiplicity " + mult.get_str() + " of V" +
                                                          table->labels[i].to_string());
            }
        }
        out.add(table->labels[i], mult.get_num());
    }
    return out;
}

}  // namespace

SymRep decompose_character(const CharacterVector& chi) { return decompose_impl<false>(chi); }
VirtualRep decompose_virtual(const CharacterVector& chi) { return decompose_impl<true>(chi); }

SymRep kronecker(const SymRep& a, const SymRep& b) {
    if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "kronecker product needs equal ranks");
    return decompose_character(a.character() * b.character());
}

SymRep sign_twist(const SymRep& a) {
    SymRep out(a.rank());
    for (const auto& [lambda, count] : a.multiplicities()) out.add(lambda.conjugate(), count);
    return out;
}

namespace {

std::vector<Partition> remove_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i + 1 < lambda.length() && lambda[i + 1] == lambda[i]) continue;
        std::vector<int> parts = lambda.parts();
        parts[static_cast<std::size_t>(i)] -= 1;
        if (parts[static_cast<std::size_t>(i)] == 0) parts.pop_back();
        out.emplace_back(std::move(parts));
    }
    return out;
}

}  // namespace

SymRep restrict_to(const SymRep& a, int m) {
    if (m < 0 || m > a.rank()) {
        throw Error(ErrorCode::RankMismatch,
                    "cannot restrict from S_" + std::to_string(a.rank()) + " to S_" + std::to_string(m));
    }
    SymRep current = a;
    for (int n = a.rank(); n > m; --n) {
        SymRep next(n - 1);
        for (const auto& [lambda, count] : current.multiplicities()) {
            for (const auto& mu : remove_one_box(lambda)) next.add(mu, count);
        }
        current = std::move(next);
    }
    return current;
}

namespace {

// Ind_{S_m x S_{n-m}}^{S_n}(chi (x) 1) at cycle type mu: sum over ways to pick
// cycles of total length m forming nu, weighted by prod_i C(m_i(mu), m_i(nu)).
CharacterVector induced_character(const CharacterVector& chi, int n) {
    const int m = chi.n;
    const auto& small = conjugacy_classes(m);
    const auto& big = conjugacy_classes(n);
    CharacterVector out = CharacterVector::zero(n);
    for (std::size_t c = 0; c < big.classes.size(); ++c) {
        const Partition& mu = big.classes[c].cycle_type;
        std::vector<std::pair<int, int>> lengths;  // (cycle length, multiplicity)
        for (int i = 0; i < mu.length();) {
            int j = i;
            while (j < mu.length() && mu[j] == mu[i]) ++j;
            lengths.emplace_back(mu[i], j - i);
            i = j;
        }
        Rational total = 0;
        std::vector<int> chosen(lengths.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int remaining) {
            if (idx == lengths.size()) {
                if (remaining != 0) return;
                std::vector<int> parts;
                BigInt weight = 1;
                for (std::size_t t = 0; t < lengths.size(); ++t) {
                    for (int r = 0; r < chosen[t]; ++r) parts.push_back(lengths[t].first);
                    weight *= binomial(lengths[t].second, chosen[t]);
                }
                const Partition nu(std::move(parts));
                total += Rational(weight) * chi.values[small.index_of(nu)];
                return;
            }
            for (int take = 0; take <= lengths[idx].second && take * lengths[idx].first <= remaining; ++take) {
                chosen[idx] = take;
                rec(idx + 1, remaining - take * lengths[idx].first);
            }
            chosen[idx] = 0;
        };
        rec(0, m);
        out.values[c] = total;
    }
    return out;
}

}  // namespace

SymRep induce_with_trivial(const SymRep& a, int n) {
    if (n < a.rank()) {
        throw Error(ErrorCode::RankMismatch,
                    "cannot induce from S_" + std::to_string(a.rank()) + " to S_" + std::to_string(n));
    }
    if (a.empty()) return SymRep(n);
    return decompose_character(induced_character(a.character(), n));
}

SymRep induce_with_trivial(const Partition& lambda, int n) {
    SymRep a(lambda.size());
    a.add(lambda, 1);
    return induce_with_trivial(a, n);
}

CharacterVector adams_operation(const CharacterVector& chi, int p) {
    const auto& data = conjugacy_classes(chi.n);
    CharacterVector out = chi;
    for (std::size_t c = 0; c < data.classes.size(); ++c) {
        out.values[c] = chi.values[data.index_of(power_map(data.classes[c].cycle_type, p))];
    }
    return out;
}

CharacterVector graded_power_character(const CharacterVector& chi, int j, Parity parity) {
    if (j < 0) throw Error(ErrorCode::InvalidArgument, "power degree must be non-negative");
    CharacterVector out = CharacterVector::zero(chi.n);
    std::vector<CharacterVector> adams(static_cast<std::size_t>(j) + 1);
    for (int p = 1; p <= j; ++p) adams[static_cast<std::size_t>(p)] = adams_operation(chi, p);
    for (const auto& rho : enumerate_partitions(j)) {
        Rational coeff(1, 1);
        coeff /= Rational(centralizer_order(rho));
        if (parity == Parity::odd) coeff *= cycle_sign(rho);
        CharacterVector term = CharacterVector{chi.n, std::vector<Rational>(out.values.size(), Rational(1))};
        for (int part : rho.parts()) term = term * adams[static_cast<std::size_t>(part)];
        out = out + coeff * term;
    }
    return out;
}

SymRep graded_power(const SymRep& a, int j, Parity parity) {
    return decompose_character(graded_power_character(a.character(), j, parity));
}

}  // namespace repstab
