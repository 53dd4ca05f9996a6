#include "repstab/fimod.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace repstab {

FIModuleTable::FIModuleTable(std::string name, bool fi_sharp, std::vector<SymRep> levels, TableMetadata metadata)
    : name_(std::move(name)), fi_sharp_(fi_sharp), levels_(std::move(levels)), metadata_(std::move(metadata)) {
    for (std::size_t n = 0; n < levels_.size(); ++n) {
        if (levels_[n].rank() != static_cast<int>(n)) {
            throw Error(ErrorCode::InvariantViolation, "level " + std::to_string(n) + " holds a representation of S_" +
                                                           std::to_string(levels_[n].rank()));
        }
    }
}

const SymRep& FIModuleTable::level(int n) const {
    if (n < 0 || n > max_n()) {
        throw Error(ErrorCode::OutOfRange, "level " + std::to_string(n) + " outside 0.." + std::to_string(max_n()));
    }
    return levels_[static_cast<std::size_t>(n)];
}

FIModuleTable FIModuleTable::with_metadata(TableMetadata metadata) const {
    FIModuleTable copy = *this;
    copy.metadata_ = std::move(metadata);
    return copy;
}

FIModuleTable FIModuleTable::renamed(std::string name) const {
    FIModuleTable copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

BigInt FIModuleTable::padded_multiplicity(int n, const Partition& lambda) const {
    if (!padding_defined(lambda, n)) return 0;
    return level(n).multiplicity(pad_label(lambda, n));
}

FIModuleTable free_module_table(const GeneratorMultiset& generators, int max_n, std::string name) {
    if (max_n < 0) throw Error(ErrorCode::InvalidArgument, "max_n must be non-negative");
    std::vector<SymRep> levels;
    for (int n = 0; n <= max_n; ++n) {
        SymRep level(n);
        for (const auto& [lambda, count] : generators) {
            if (lambda.size() > n) continue;
            level = level + scaled(induce_with_trivial(lambda, n), count);
        }
        levels.push_back(std::move(level));
    }
    if (name.empty()) {
        name = "M(";
        bool first = true;
        for (const auto& [lambda, count] : generators) {
            if (!first) name += "+";
            first = false;
            if (count != 1) name += count.get_str() + "*";
            name += lambda.to_string();
        }
        name += ")";
    }
    return FIModuleTable(std::move(name), true, std::move(levels));
}

FIModuleTable free_module_table(const Partition& lambda, int max_n) {
    return free_module_table(GeneratorMultiset{{lambda, 1}}, max_n);
}

WeightReport weight_of(const FIModuleTable& table) {
    if (table.levels().empty()) throw Error(ErrorCode::EmptyTable, "table has no levels");
    WeightReport report;
    for (int n = 0; n <= table.max_n(); ++n) {
        for (const auto& [mu, count] : table.level(n).multiplicities()) {
            const int w = mu.unpadded().size();
            if (!report.level || w > report.weight) {
                report.weight = w;
                report.level = n;
            }
        }
    }
    return report;
}

std::vector<BigInt> phi_dims(const FIModuleTable& table, int q) {
    if (q < 0 || q > table.max_n()) {
        throw Error(ErrorCode::OutOfRange, "q = " + std::to_string(q) + " outside 0.." + std::to_string(table.max_n()));
    }
    std::vector<BigInt> dims;
    for (int k = 0; k + q <= table.max_n(); ++k) {
        const SymRep restricted = restrict_to(table.level(k + q), k);
        dims.push_back(restricted.multiplicity(k == 0 ? Partition{} : Partition{k}));
    }
    return dims;
}

GeneratorMultiset h0_decompose(const FIModuleTable& table) {
    if (!table.fi_sharp()) throw Error(ErrorCode::NotFISharp, "table '" + table.name() + "' is not marked FI#");
    GeneratorMultiset generators;
    for (int n = 0; n <= table.max_n(); ++n) {
        SymRep expected(n);
        for (const auto& [lambda, count] : generators) expected = expected + scaled(induce_with_trivial(lambda, n), count);
        const SymRep& actual = table.level(n);
        for (const auto& [mu, count] : expected.multiplicities()) {
            if (actual.multiplicity(mu) < count) {
                throw Error(ErrorCode::InconsistentTable, "level " + std::to_string(n) + ": V" + mu.to_string() +
                                                              " occurs " + actual.multiplicity(mu).get_str() +
                                                              " times but lower generators force " + count.get_str());
            }
        }
        for (const auto& [mu, count] : actual.multiplicities()) {
            const BigInt fresh = count - expected.multiplicity(mu);
            if (fresh > 0) generators[mu] += fresh;
        }
    }
    return generators;
}

int generation_degree(const FIModuleTable& table) {
    int degree = 0;
    for (const auto& [lambda, count] : h0_decompose(table)) degree = std::max(degree, lambda.size());
    return degree;
}

StabilityBounds stability_degree_bounds(const FIModuleTable& table, std::optional<int> q_max) {
    StabilityBounds bounds;
    bounds.q_max = q_max.value_or(weight_of(table).weight + 2);
    for (int q = 0; q <= bounds.q_max; ++q) {
        if (q > table.max_n() - 2) {
            throw Error(ErrorCode::TableTooShallow, "Phi_" + std::to_string(q) + " has fewer than three levels up to n = " +
                                                        std::to_string(table.max_n()));
        }
        const auto dims = phi_dims(table, q);
        const std::size_t last = dims.size() - 1;
        if (dims[last] != dims[last - 1] || dims[last - 1] != dims[last - 2]) {
            throw Error(ErrorCode::TableTooShallow,
                        "dim Phi_" + std::to_string(q) + " has not visibly stabilized by n = " + std::to_string(table.max_n()));
        }
        std::size_t start = last;
        while (start > 0 && dims[start - 1] == dims[last]) --start;
        bounds.lower = std::max(bounds.lower, static_cast<int>(start));
    }
    if (table.fi_sharp()) {
        int upper = 0;
        for (const auto& [lambda, count] : h0_decompose(table)) upper = std::max(upper, lambda.first());
        bounds.upper = upper;
    }
    return bounds;
}

FIModuleTable tensor_fimod(const FIModuleTable& f, const FIModuleTable& g) {
    if (f.max_n() != g.max_n()) {
        throw Error(ErrorCode::RankMismatch, "tensor product needs tables of equal depth (" + std::to_string(f.max_n()) +
                                                 " vs " + std::to_string(g.max_n()) + ")");
    }
    std::vector<SymRep> levels;
    for (int n = 0; n <= f.max_n(); ++n) levels.push_back(kronecker(f.level(n), g.level(n)));

    TableMetadata meta;
    const int s1 = weight_of(f).weight;
    const int s2 = weight_of(g).weight;
    meta.weight_bound = s1 + s2;
    if (f.fi_sharp() && g.fi_sharp()) {
        meta.generation_bound = generation_degree(f) + generation_degree(g);
        int r1 = 0, r2 = 0;
        for (const auto& [lambda, c] : h0_decompose(f)) r1 = std::max(r1, lambda.first());
        for (const auto& [lambda, c] : h0_decompose(g)) r2 = std::max(r2, lambda.first());
        meta.stability_bound = std::max({r1 + s1, r2 + s2, s1 + s2});
    }
    meta.notes["factors"] = f.name() + " ; " + g.name();
    return FIModuleTable(f.name() + "⊗" + g.name(), f.fi_sharp() && g.fi_sharp(), std::move(levels), std::move(meta));
}

Rational DimensionPolynomial::evaluate(long n) const {
    Rational value = 0;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (coefficients[j] == 0) continue;
        // binom(n, j) as a polynomial in n, valid for negative n too.
        Rational b = 1;
        for (std::size_t i = 0; i < j; ++i) b *= Rational(n - static_cast<long>(i));
        b /= Rational(factorial(static_cast<int>(j)));
        value += coefficients[j] * b;
    }
    return value;
}

int DimensionPolynomial::degree() const {
    for (int j = static_cast<int>(coefficients.size()) - 1; j >= 0; --j)
        if (coefficients[static_cast<std::size_t>(j)] != 0) return j;
    return -1;
}

std::string DimensionPolynomial::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (coefficients[j] == 0) continue;
        if (!out.empty()) out += " + ";
        if (coefficients[j] != 1 || j == 0) out += coefficients[j].get_str() + (j ? "*" : "");
        if (j) out += "C(n," + std::to_string(j) + ")";
    }
    return out.empty() ? "0" : out;
}

std::vector<Rational> DimensionPolynomial::power_coefficients() const {
    std::vector<Rational> out(coefficients.size(), Rational(0));
    std::vector<Rational> falling{Rational(1)};  // n(n-1)...(n-j+1) / j!
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (j > 0) {
            std::vector<Rational> next(falling.size() + 1, Rational(0));
            for (std::size_t i = 0; i < falling.size(); ++i) {
                next[i + 1] += falling[i];
                next[i] -= falling[i] * static_cast<long>(j - 1);
            }
            for (auto& c : next) c /= static_cast<long>(j);
            falling = std::move(next);
        }
        for (std::size_t i = 0; i < falling.size(); ++i) out[i] += coefficients[j] * falling[i];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string DimensionPolynomial::to_power_string(const std::string& variable) const {
    const auto a = power_coefficients();
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        Rational c = a[i];
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        c = abs(c);
        if (i == 0 || c != 1) out += c.get_str() + (i ? "*" : "");
        if (i >= 1) out += variable;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

// Coefficients in the binomial basis from values at 0..d (forward differences).
std::vector<Rational> binomial_coefficients_from_values(std::vector<Rational> values) {
    std::vector<Rational> coeffs;
    while (!values.empty()) {
        coeffs.push_back(values.front());
        for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return coeffs;
}

}  // namespace

DimensionPolynomial dimension_polynomial(const FIModuleTable& table) {
    DimensionPolynomial poly;
    if (table.fi_sharp()) {
        // dim M(lambda)_n = binom(n, |lambda|) * dim V_lambda for every n.
        for (const auto& [lambda, count] : h0_decompose(table)) {
            const auto d = static_cast<std::size_t>(lambda.size());
            if (poly.coefficients.size() <= d) poly.coefficients.resize(d + 1, Rational(0));
            poly.coefficients[d] += Rational(count * hook_dimension(lambda));
        }
        poly.onset = 0;
        return poly;
    }
    const int degree = weight_of(table).weight;
    const int needed = degree + 1 + 2;
    if (table.max_n() + 1 < needed) {
        throw Error(ErrorCode::TableTooShallow, "need " + std::to_string(needed) + " levels to fit and cross-validate a "
                                                    "degree-" + std::to_string(degree) + " polynomial");
    }
    // Newton interpolation through the top degree+1 levels, re-expressed at n = 0..degree.
    const int base = table.max_n() - degree;
    std::vector<Rational> top;
    for (int n = base; n <= table.max_n(); ++n) top.emplace_back(table.level(n).dimension());
    const auto newton = binomial_coefficients_from_values(top);  // in binom(n - base, j)
    auto shifted = [&](long n) {
        Rational value = 0;
        for (std::size_t j = 0; j < newton.size(); ++j) {
            Rational b = 1;
            for (std::size_t i = 0; i < j; ++i) b *= Rational(n - base - static_cast<long>(i));
            b /= Rational(factorial(static_cast<int>(j)));
            value += newton[j] * b;
        }
        return value;
    };
    std::vector<Rational> at_origin;
    for (int n = 0; n <= degree; ++n) at_origin.push_back(shifted(n));
    poly.coefficients = binomial_coefficients_from_values(at_origin);
    int onset = base;
    while (onset > 0 && poly.evaluate(onset - 1) == Rational(table.level(onset - 1).dimension())) --onset;
    if (base - onset < 2) {
        throw Error(ErrorCode::TableTooShallow, "polynomial fit could not be cross-validated on two further levels");
    }
    poly.onset = onset;
    return poly;
}

namespace {

using LabelMap = std::map<Partition, BigInt, CanonicalOrder>;

LabelMap unpadded_multiplicities(const SymRep& level) {
    LabelMap out;
    for (const auto& [mu, count] : level.multiplicities()) out[mu.unpadded()] = count;
    return out;
}

BigInt lookup(const LabelMap& m, const Partition& lambda) {
    auto it = m.find(lambda);
    return it == m.end() ? BigInt(0) : it->second;
}

void fill_onsets(const std::vector<SymRep>& levels, RepStabReport& report) {
    const int top = static_cast<int>(levels.size()) - 1;
    std::vector<LabelMap> unpadded;
    std::set<Partition> labels;
    for (const auto& level : levels) {
        unpadded.push_back(unpadded_multiplicities(level));
        for (const auto& [lambda, c] : unpadded.back()) labels.insert(lambda);
    }
    const LabelMap& stable = unpadded.back();
    int strict = top;
    while (strict > 0 && unpadded[static_cast<std::size_t>(strict) - 1] == stable) --strict;
    int lenient = top;
    while (lenient > 0) {
        const int n = lenient - 1;
        bool agrees = true;
        for (const auto& lambda : labels) {
            if (!padding_defined(lambda, n)) continue;
            if (lookup(unpadded[static_cast<std::size_t>(n)], lambda) != lookup(stable, lambda)) {
                agrees = false;
                break;
            }
        }
        if (!agrees) break;
        --lenient;
    }
    report.onset = strict;
    report.onset_defined_labels = lenient;
    report.observed_max_n = top;
    report.stable_multiplicities = GeneratorMultiset(stable.begin(), stable.end());
}

}  // namespace

RepStabReport check_uniform_repstab(const FIModuleTable& table, int range) {
    if (range < 0) throw Error(ErrorCode::InvalidArgument, "range must be non-negative");
    RepStabReport report;
    report.claimed_range = range;
    std::vector<SymRep> levels = table.levels();
    if (table.max_n() < range + 2) {
        if (!table.fi_sharp()) {
            throw Error(ErrorCode::TableTooShallow, "table reaches n = " + std::to_string(table.max_n()) +
                                                        ", range " + std::to_string(range) + " needs n = " +
                                                        std::to_string(range + 2));
        }
    }
    if (table.fi_sharp()) {
        // Multiplicities of M(lambda) are constant once n >= |lambda| + lambda_1, so two
        // levels past that point certify every larger n as well.
        const auto generators = h0_decompose(table);
        int target = table.max_n();
        for (const auto& [lambda, c] : generators) target = std::max(target, lambda.size() + lambda.first() + 2);
        if (target > table.max_n()) {
            levels = free_module_table(generators, target).levels();
            report.extended_by_classification = true;
        }
    }
    fill_onsets(levels, report);
    report.passed = report.onset <= range;
    if (!report.passed) {
        report.failures.push_back("multiplicities change at n = " + std::to_string(report.onset - 1) +
                                  " >= claimed range " + std::to_string(range));
    }
    return report;
}

linalg::Matrix ConsistentSequence::class_representative(int n, const Partition& cycle_type) const {
    const auto& level = levels.at(static_cast<std::size_t>(n));
    linalg::Matrix result = linalg::Matrix::identity(level.dimension);
    int start = 1;
    for (int c : cycle_type.parts()) {
        for (int i = start; i < start + c - 1; ++i) result = result * level.generators.at(static_cast<std::size_t>(i) - 1);
        start += c;
    }
    return result;
}

CharacterVector ConsistentSequence::character(int n) const {
    const auto& data = conjugacy_classes(n);
    CharacterVector chi{n, {}};
    for (const auto& cls : data.classes) chi.values.push_back(class_representative(n, cls.cycle_type).trace());
    return chi;
}

ConsistentSequence subset_sequence(int r, Parity parity, int max_n) {
    ConsistentSequence seq;
    seq.name = std::string(parity == Parity::even ? "subsets" : "oriented-subsets") + "(" + std::to_string(r) + ")";
    std::vector<std::vector<std::vector<int>>> bases;
    for (int n = 0; n <= max_n + 1; ++n) {
        std::vector<std::vector<int>> subsets;
        std::vector<int> current;
        std::function<void(int)> rec = [&](int next) {
            if (static_cast<int>(current.size()) == r) {
                subsets.push_back(current);
                return;
            }
            for (int p = next; p < n; ++p) {
                current.push_back(p);
                rec(p + 1);
                current.pop_back();
            }
        };
        rec(0);
        bases.push_back(std::move(subsets));
    }
    auto index_of = [&](int n, const std::vector<int>& s) {
        const auto& b = bases[static_cast<std::size_t>(n)];
        return static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), s) - b.begin());
    };
    for (int n = 0; n <= max_n; ++n) {
        ConsistentSequence::Level level;
        const auto& basis = bases[static_cast<std::size_t>(n)];
        level.dimension = basis.size();
        for (int i = 1; i < n; ++i) {
            linalg::Matrix s(basis.size(), basis.size());
            for (std::size_t col = 0; col < basis.size(); ++col) {
                std::vector<int> image = basis[col];
                int hits = 0;
                for (int& p : image) {
                    if (p == i - 1) { p = i; ++hits; }
                    else if (p == i) { p = i - 1; ++hits; }
                }
                std::sort(image.begin(), image.end());
                const int sign = (parity == Parity::odd && hits == 2) ? -1 : 1;
                s(index_of(n, image), col) = sign;
            }
            level.generators.push_back(std::move(s));
        }
        if (n < max_n) {
            const auto& next = bases[static_cast<std::size_t>(n) + 1];
            linalg::Matrix phi(next.size(), basis.size());
            for (std::size_t col = 0; col < basis.size(); ++col) phi(index_of(n + 1, basis[col]), col) = 1;
            level.phi = std::move(phi);
        }
        seq.levels.push_back(std::move(level));
    }
    return seq;
}

namespace {

bool coxeter_relations(const ConsistentSequence::Level& level) {
    const auto id = linalg::Matrix::identity(level.dimension);
    const auto& g = level.generators;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] * g[i] != id) return false;
        if (i + 1 < g.size()) {
            const auto braid = g[i] * g[i + 1];
            if (braid * braid * braid != id) return false;
        }
        for (std::size_t j = i + 2; j < g.size(); ++j)
            if (g[i] * g[j] != g[j] * g[i]) return false;
    }
    return true;
}

// Dimension of the S_{n+1}-submodule generated by the columns of phi.
std::size_t orbit_span_rank(const linalg::Matrix& phi, const std::vector<linalg::Matrix>& generators) {
    linalg::EchelonBasis span;
    std::vector<std::vector<Rational>> frontier;
    auto column_vector = [](const linalg::Matrix& m, std::size_t c) {
        std::vector<Rational> v(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
        return v;
    };
    auto to_sparse = [](const std::vector<Rational>& v) {
        linalg::SparseVector s;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) s.emplace_back(static_cast<int>(i), v[i]);
        return s;
    };
    for (std::size_t c = 0; c < phi.cols(); ++c) {
        auto v = column_vector(phi, c);
        if (span.insert(to_sparse(v))) frontier.push_back(std::move(v));
    }
    while (!frontier.empty()) {
        auto v = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : generators) {
            std::vector<Rational> w(g.rows(), Rational(0));
            for (std::size_t r = 0; r < g.rows(); ++r)
                for (std::size_t c = 0; c < g.cols(); ++c)
                    if (g(r, c) != 0 && v[c] != 0) w[r] += g(r, c) * v[c];
            if (span.insert(to_sparse(w))) frontier.push_back(std::move(w));
        }
    }
    return span.rank();
}

}  // namespace

RepStabReport check_uniform_repstab(const ConsistentSequence& sequence, int range) {
    if (sequence.max_n() < range + 2) {
        throw Error(ErrorCode::TableTooShallow, "sequence reaches n = " + std::to_string(sequence.max_n()) +
                                                    ", range " + std::to_string(range) + " needs n = " +
                                                    std::to_string(range + 2));
    }
    RepStabReport report;
    report.claimed_range = range;
    std::vector<SymRep> levels;
    for (int n = 0; n <= sequence.max_n(); ++n) {
        const auto& level = sequence.levels[static_cast<std::size_t>(n)];
        if (!coxeter_relations(level)) {
            report.coxeter_relations_hold = false;
            report.failures.push_back("Coxeter relations fail at n = " + std::to_string(n));
        }
        levels.push_back(decompose_character(sequence.character(n)));
    }
    int injective_from = sequence.max_n();
    int spanning_from = sequence.max_n();
    bool injective_tail = true, spanning_tail = true;
    for (int n = sequence.max_n() - 1; n >= 0; --n) {
        const auto& level = sequence.levels[static_cast<std::size_t>(n)];
        const auto& next = sequence.levels[static_cast<std::size_t>(n) + 1];
        for (std::size_t i = 0; i < level.generators.size(); ++i) {
            if (level.phi * level.generators[i] != next.generators[i] * level.phi) {
                report.equivariant = false;
                report.failures.push_back("phi_" + std::to_string(n) + " is not equivariant for s_" + std::to_string(i + 1));
            }
        }
        injective_tail = injective_tail && level.phi.rank() == level.dimension;
        if (injective_tail) injective_from = n;
        spanning_tail = spanning_tail && orbit_span_rank(level.phi, next.generators) == next.dimension;
        if (spanning_tail) spanning_from = n;
    }
    report.injective_from = injective_from;
    report.spanning_from = spanning_from;
    fill_onsets(levels, report);
    report.passed = report.onset <= range && injective_from <= range && spanning_from <= range &&
                    report.coxeter_relations_hold && report.equivariant;
    if (report.onset > range) report.failures.push_back("multiplicities not constant from n = " + std::to_string(range));
    if (injective_from > range) report.failures.push_back("phi_n not injective for some n >= " + std::to_string(range));
    if (spanning_from > range) report.failures.push_back("image of phi_n does not span for some n >= " + std::to_string(range));
    return report;
}

int predicted_range(int stability_degree, int weight) {
    if (stability_degree < 0 || weight < 0) throw Error(ErrorCode::InvalidArgument, "r and s must be non-negative");
    return stability_degree + weight;
}

}  // namespace repstab
