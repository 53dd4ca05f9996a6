#include "repstab/symchar.hpp"

#include "repstab/store.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>

namespace repstab {

namespace {

std::atomic<int> g_max_rank{14};

void check_rank(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "rank must be non-negative");
    if (n > max_rank()) {
        throw Error(ErrorCode::RankTooLarge,
                    "rank " + std::to_string(n) + " exceeds configured maximum " + std::to_string(max_rank()));
    }
}

// Beta-set (first-column hook lengths) of lambda padded to `len` rows.
std::vector<int> beta_set(const Partition& lambda, int len) {
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        const int part = i < lambda.length() ? lambda[i] : 0;
        beta[static_cast<std::size_t>(i)] = part + (len - 1 - i);
    }
    return beta;
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

struct MemoTable {
    std::mutex mutex;
    std::map<std::pair<Partition, Partition>, BigInt> values;
};

MemoTable& memo() {
    static MemoTable table;
    return table;
}

BigInt murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return 1;
    {
        std::lock_guard lock(memo().mutex);
        auto it = memo().values.find({lambda, mu});
        if (it != memo().values.end()) return it->second;
    }
    const int hook = mu[0];
    const Partition rest = mu.unpadded();
    const int len = lambda.length();
    std::vector<int> beta = beta_set(lambda, len);
    BigInt total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - hook;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> removed = beta;
        removed[i] = target;
        const BigInt sub = murnaghan_nakayama(from_beta_set(std::move(removed)), rest);
        if (between % 2 == 0) total += sub;
        else total -= sub;
    }
    std::lock_guard lock(memo().mutex);
    memo().values.emplace(std::make_pair(lambda, mu), total);
    return total;
}

struct TableCache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const CharacterTable>> tables;
    std::map<int, std::unique_ptr<ClassData>> classes;
};

TableCache& table_cache() {
    static TableCache cache;
    return cache;
}

}  // namespace

int max_rank() { return g_max_rank.load(); }
void set_max_rank(int n) { g_max_rank.store(n); }

std::size_t ClassData::index_of(const Partition& cycle_type) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), cycle_type,
                               [](const ConjugacyClass& c, const Partition& p) { return c.cycle_type < p; });
    if (it == classes.end() || it->cycle_type != cycle_type) {
        throw Error(ErrorCode::ShapeMismatch, cycle_type.to_string() + " is not a class of S_" + std::to_string(n));
    }
    return static_cast<std::size_t>(it - classes.begin());
}

CharacterVector CharacterVector::zero(int n) {
    return CharacterVector{n, std::vector<Rational>(conjugacy_classes(n).classes.size(), Rational(0))};
}

bool CharacterVector::is_integral() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.get_den() == 1; });
}

namespace {
void require_same_rank(const CharacterVector& a, const CharacterVector& b) {
    if (a.n != b.n || a.values.size() != b.values.size()) {
        throw Error(ErrorCode::RankMismatch,
                    "class functions on S_" + std::to_string(a.n) + " and S_" + std::to_string(b.n));
    }
}
}  // namespace

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b) {
    require_same_rank(a, b);
    CharacterVector out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

CharacterVector operator*(const CharacterVector& a, const CharacterVector& b) {
    require_same_rank(a, b);
    CharacterVector out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
}

CharacterVector operator*(const Rational& s, const CharacterVector& a) {
    CharacterVector out = a;
    for (auto& v : out.values) v *= s;
    return out;
}

const CharacterVector& CharacterTable::row(const Partition& lambda) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), lambda, CanonicalOrder{});
    if (it == labels.end() || *it != lambda) {
        throw Error(ErrorCode::ShapeMismatch, lambda.to_string() + " is not a partition of " + std::to_string(n));
    }
    return rows[static_cast<std::size_t>(it - labels.begin())];
}

const ClassData& conjugacy_classes(int n) {
    check_rank(n);
    auto& cache = table_cache();
    std::lock_guard lock(cache.mutex);
    auto& slot = cache.classes[n];
    if (!slot) {
        auto data = std::make_unique<ClassData>();
        data->n = n;
        const BigInt order = factorial(n);
        auto parts = enumerate_partitions(n);
        std::reverse(parts.begin(), parts.end());
        for (auto& mu : parts) {
            BigInt size = order / centralizer_order(mu);
            data->classes.push_back({std::move(mu), std::move(size)});
        }
        slot = std::move(data);
    }
    return *slot;
}

BigInt character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw Error(ErrorCode::ShapeMismatch,
                    "|" + lambda.to_string() + "| != |" + mu.to_string() + "|");
    }
    return murnaghan_nakayama(lambda, mu);
}

Rational inner_product(const CharacterVector& chi, const CharacterVector& psi) {
    require_same_rank(chi, psi);
    const auto& data = conjugacy_classes(chi.n);
    Rational sum = 0;
    for (std::size_t i = 0; i < data.classes.size(); ++i) {
        sum += Rational(data.classes[i].size) * chi.values[i] * psi.values[i];
    }
    sum /= Rational(factorial(chi.n));
    return sum;
}

std::vector<int> permutation_of_type(int n, const Partition& cycle_type) {
    if (cycle_type.size() != n) throw Error(ErrorCode::ShapeMismatch, "cycle type " + cycle_type.to_string() + " is not of size " + std::to_string(n));
    std::vector<int> sigma(static_cast<std::size_t>(n));
    int start = 0;
    for (int c : cycle_type.parts()) {
        for (int i = 0; i < c; ++i) sigma[static_cast<std::size_t>(start + i)] = start + (i + 1) % c;
        start += c;
    }
    return sigma;
}

Partition power_map(const Partition& mu, int p) {
    if (p < 1) throw Error(ErrorCode::InvalidArgument, "power must be positive");
    std::vector<int> parts;
    for (int c : mu.parts()) {
        const int g = std::gcd(c, p);
        for (int i = 0; i < g; ++i) parts.push_back(c / g);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

CharacterTable compute_character_table(int n) {
    const auto& data = conjugacy_classes(n);
    CharacterTable table;
    table.n = n;
    table.labels = enumerate_partitions(n);
    for (const auto& lambda : table.labels) {
        CharacterVector row{n, {}};
        row.values.reserve(data.classes.size());
        for (const auto& cls : data.classes) row.values.emplace_back(character_value(lambda, cls.cycle_type));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::shared_ptr<const CharacterTable> character_table(int n) {
    check_rank(n);
    auto& cache = table_cache();
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.tables.find(n);
        if (it != cache.tables.end()) return it->second;
    }
    std::shared_ptr<const CharacterTable> table;
    if (auto dir = store::cache_directory()) {
        try {
            if (auto loaded = store::load_cached_table(*dir, n)) {
                table = std::make_shared<const CharacterTable>(std::move(*loaded));
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::CacheCorrupt) throw;
        }
        if (!table) {
            table = std::make_shared<const CharacterTable>(compute_character_table(n));
            store::save_cached_table(*dir, *table);
        }
    } else {
        table = std::make_shared<const CharacterTable>(compute_character_table(n));
    }
    std::lock_guard lock(cache.mutex);
    return cache.tables.emplace(n, std::move(table)).first->second;
}

}  // namespace repstab
