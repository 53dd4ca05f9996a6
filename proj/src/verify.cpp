#include "repstab/verify.hpp"

#include "repstab/dkconfig.hpp"
#include "repstab/fimod.hpp"
#include "repstab/liecalc.hpp"
#include "repstab/oracles.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace repstab::verify {

namespace {

// Collects failed assertions; the first few go into the detail line.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_.push_back(what);
    }
    void note(const std::string& text) { summary_.push_back(text); }

    bool passed() const { return failures_ == 0 && checks_ > 0; }
    std::string detail() const {
        std::ostringstream out;
        out << checks_ - failures_ << "/" << checks_ << " checks";
        for (const auto& s : summary_) out << "; " << s;
        for (const auto& s : notes_) out << "; FAILED " << s;
        if (failures_ > static_cast<long>(notes_.size())) out << "; ...";
        return out.str();
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::vector<std::string> notes_;
    std::vector<std::string> summary_;
};

struct Spec {
    const char* title;
    double budget;
};

const Spec specs[criterion_count] = {
    {"worked example rows for k = 4..7", 5},
    {"m = 1 dimension polynomial k(k-1)/2 with onset 0", 1},
    {"homotopy weight and onset ranges, odd n, m <= 3", 120},
    {"Arnold cohomology weight <= i, n = 3, j <= 3", 60},
    {"tensor coinvariant formula and weight additivity", 30},
    {"repstab onset within r + s, H_0 round trip", 30},
    {"character table identities, n <= 10", 120},
    {"Lie/Gerstenhaber weight <= (m+2)/(m+d) l", 180},
    {"DK and super-Witt cross-oracle dimensions", 180},
    {"loop homology weight and PBW primitives", 120},
};

SymRep padded_sum(int k, const std::vector<Partition>& labels) {
    SymRep out(k);
    for (const auto& lambda : labels) out.add(pad_label(lambda, k), 1);
    return out;
}

void criterion_1(Tally& t) {
    const auto even = homotopy_fi_module(Parity::even, 1, 7);
    const auto odd = homotopy_fi_module(Parity::odd, 1, 7);
    for (int k = 4; k <= 7; ++k) {
        const auto want_even = padded_sum(k, {Partition{}, Partition{1}, Partition{2}});
        const auto want_odd = padded_sum(k, {Partition{1}, Partition{1, 1}});
        t.check(even.level(k) == want_even, "even k=" + std::to_string(k) + ": " + to_string(even.level(k)));
        t.check(odd.level(k) == want_odd, "odd k=" + std::to_string(k) + ": " + to_string(odd.level(k)));
    }
}

void criterion_2(Tally& t) {
    for (auto parity : {Parity::even, Parity::odd}) {
        const auto table = homotopy_fi_module(parity, 1, 7);
        const auto poly = dimension_polynomial(table);
        const bool shape = poly.degree() == 2 && poly.evaluate(0) == 0 && poly.evaluate(1) == 0 && poly.evaluate(2) == 1;
        t.check(shape && poly.onset == 0, std::string(to_string(parity)) + ": " + poly.to_string() + " onset " +
                                               std::to_string(poly.onset));
        for (int k = 0; k <= 7; ++k)
            t.check(poly.evaluate(k) == Rational(k * (k - 1) / 2), std::string(to_string(parity)) + " k=" + std::to_string(k));
    }
}

void criterion_3_4(Tally& t, const std::string& side) {
    const auto report = verify_config_ranges(Parity::odd, 3, 6);
    for (const auto& c : report.checks) {
        if (c.side != side) continue;
        const std::string label = side + " " + std::to_string(c.degree_index) + " (i=" + std::to_string(c.i) + "): ";
        t.check(c.passed, label + c.detail);
        if (c.passed) t.note(label + c.detail);
    }
}

GeneratorMultiset random_generators(std::mt19937_64& rng, int max_weight) {
    std::vector<Partition> pool;
    for (int s = 0; s <= max_weight; ++s)
        for (auto& p : enumerate_partitions(s)) pool.push_back(p);
    std::uniform_int_distribution<int> count_dist(1, 3), pick(0, static_cast<int>(pool.size()) - 1), mult(1, 2);
    GeneratorMultiset gens;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) gens[pool[static_cast<std::size_t>(pick(rng))]] += mult(rng);
    return gens;
}

std::vector<std::pair<FIModuleTable, FIModuleTable>> random_pairs() {
    std::mt19937_64 rng(20240611);
    std::vector<std::pair<FIModuleTable, FIModuleTable>> out;
    for (int i = 0; i < 20; ++i) {
        auto f = free_module_table(random_generators(rng, 3), 8);
        auto g = free_module_table(random_generators(rng, 3), 8);
        out.emplace_back(std::move(f), std::move(g));
    }
    return out;
}

void criterion_5(Tally& t) {
    for (const auto& [f, g] : random_pairs()) {
        const auto fg = tensor_fimod(f, g);
        const auto phi = phi_dims(fg, 0);
        for (int n = 0; n <= 8; ++n) {
            BigInt formula = 0;
            for (const auto& [lambda, c] : f.level(n).multiplicities()) formula += c * g.level(n).multiplicity(lambda);
            t.check(phi[static_cast<std::size_t>(n)] == formula, fg.name() + " n=" + std::to_string(n));
        }
        const int s = weight_of(fg).weight;
        t.check(s <= weight_of(f).weight + weight_of(g).weight, fg.name() + " weight " + std::to_string(s));
        t.check(fg.metadata().weight_bound && s <= *fg.metadata().weight_bound, fg.name() + " metadata bound");
    }
}

void criterion_6(Tally& t) {
    for (const auto& [f, g] : random_pairs()) {
        for (const auto* table : {&f, &g}) {
            const int s = weight_of(*table).weight;
            const auto bounds = stability_degree_bounds(*table, s);
            t.check(bounds.upper.has_value() && bounds.lower <= *bounds.upper, table->name() + " stability bounds");
            if (!bounds.upper) continue;
            const int range = predicted_range(*bounds.upper, s);
            const auto report = check_uniform_repstab(*table, range);
            t.check(report.passed && report.onset <= range,
                    table->name() + " onset " + std::to_string(report.onset) + " > " + std::to_string(range));
            const auto gens = h0_decompose(*table);
            t.check(free_module_table(gens, table->max_n()).levels() == table->levels(), table->name() + " H0 round trip");
        }
    }
}

void criterion_7(Tally& t) {
    for (int n = 0; n <= 10; ++n) {
        const auto table = character_table(n);
        const auto& classes = conjugacy_classes(n);
        const BigInt order = factorial(n);
        BigInt dims = 0;
        for (std::size_t a = 0; a < table->rows.size(); ++a) {
            const BigInt d = table->rows[a].values[0].get_num();
            dims += d * d;
            for (std::size_t b = a; b < table->rows.size(); ++b) {
                Rational s = 0;
                for (std::size_t c = 0; c < classes.classes.size(); ++c)
                    s += Rational(classes.classes[c].size) * table->rows[a].values[c] * table->rows[b].values[c];
                t.check(s == (a == b ? Rational(order) : Rational(0)), "row orthogonality n=" + std::to_string(n));
            }
        }
        t.check(dims == order, "sum of squared dimensions n=" + std::to_string(n));
        for (std::size_t c = 0; c < classes.classes.size(); ++c)
            for (std::size_t e = c; e < classes.classes.size(); ++e) {
                Rational s = 0;
                for (const auto& row : table->rows) s += row.values[c] * row.values[e];
                const Rational want = c == e ? Rational(centralizer_order(classes.classes[c].cycle_type)) : Rational(0);
                t.check(s == want, "column orthogonality n=" + std::to_string(n));
            }
        for (int size = 0; size <= std::min(5, n); ++size)
            for (const auto& lambda : enumerate_partitions(size)) {
                SymRep pieri(n);
                for (const auto& mu : horizontal_strips(lambda, n - size)) pieri.add(mu, 1);
                t.check(pieri == induce_with_trivial(lambda, n), "Pieri " + lambda.to_string() + " n=" + std::to_string(n));
            }
    }
}

void criterion_8(Tally& t) {
    int worst_lie = 0, worst_g = 0;
    for (int d : {2, 3})
        for (int m : {1, 2})
            for (int l = 1; l <= 8; ++l) {
                const auto r = verify_algebra_weight_bound(d, m, l, 6);
                const std::string label = "d=" + std::to_string(d) + " m=" + std::to_string(m) + " l=" + std::to_string(l);
                t.check(r.lie_ok, label + " Lie weight " + std::to_string(r.lie_weight));
                t.check(r.gerstenhaber_ok, label + " Gerstenhaber weight " + std::to_string(r.gerstenhaber_weight));
                worst_lie = std::max(worst_lie, r.lie_weight);
                worst_g = std::max(worst_g, r.gerstenhaber_weight);
            }
    t.note("max Lie weight " + std::to_string(worst_lie) + ", max Gerstenhaber weight " + std::to_string(worst_g));
}

void criterion_9(Tally& t) {
    for (auto parity : {Parity::even, Parity::odd})
        for (int m = 1; m <= 4; ++m)
            for (int k = 0; k <= 6; ++k) {
                const auto a = dk_dimension(k, parity, m);
                const auto b = oracle::dk_semidirect_dimension(k, parity, m);
                t.check(a == b, std::string(to_string(parity)) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " +
                                    a.get_str() + " vs " + b.get_str());
            }
    for (auto parity : {Parity::even, Parity::odd})
        for (int g = 1; g <= 3; ++g)
            for (int l = 1; l <= 5; ++l) {
                const auto witt = oracle::super_witt_dimension(g, l, parity);
                const auto brute = oracle::magma_quotient_dimension(g, l, parity);
                // d + m - 1 picks the parity: d = 2, m = 1 is even, d = 2, m = 2 is odd
                const GeneratorSet gens{g, 2, parity == Parity::even ? 1 : 2};
                const auto basis = static_cast<long>(lie_basis(gens, l).size());
                const std::string label = std::string(to_string(parity)) + " g=" + std::to_string(g) + " l=" + std::to_string(l);
                t.check(witt == brute, label + " Witt " + witt.get_str() + " vs brute force " + brute.get_str());
                t.check(witt == basis, label + " basis size " + std::to_string(basis));
            }
}

void criterion_10(Tally& t) {
    for (auto parity : {Parity::even, Parity::odd}) {
        const int n = minimal_dimension(parity);
        for (int tw = 1; tw <= 3; ++tw) {
            const auto table = loop_fi_module(parity, tw, 5);
            const int s = weight_of(table).weight;
            const int bound = 2 * tw * (n - 2);
            t.check(s <= bound, std::string(to_string(parity)) + " t=" + std::to_string(tw) + " weight " + std::to_string(s) +
                                    " > " + std::to_string(bound));
        }
        for (int k = 0; k <= 5; ++k) {
            std::vector<BigInt> series;
            for (int tw = 0; tw <= 3; ++tw) {
                series.push_back(loop_homology_piece(k, parity, tw).dimension());
                t.check(series.back() == loop_series_coefficient(k, tw), "loop dimension k=" + std::to_string(k));
            }
            const auto primitives = pbw_primitives(series, parity);
            for (int tw = 1; tw <= 3; ++tw)
                t.check(primitives[static_cast<std::size_t>(tw)] == dk_dimension(k, parity, tw),
                        std::string(to_string(parity)) + " primitives k=" + std::to_string(k) + " t=" + std::to_string(tw));
        }
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"paper-example", "ranges", "algebra", "all"};
    return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "paper-example") return {1, 2};
    if (suite == "ranges") return {3, 4, 10};
    if (suite == "algebra") return {5, 6, 7, 8, 9};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
}

std::string criterion_title(int id) {
    if (id < 1 || id > criterion_count) throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
    return specs[id - 1].title;
}

CriterionResult run_criterion(int id) {
    CriterionResult result;
    result.id = id;
    result.title = criterion_title(id);
    result.budget_seconds = specs[id - 1].budget;
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    try {
        switch (id) {
            case 1: criterion_1(tally); break;
            case 2: criterion_2(tally); break;
            case 3: criterion_3_4(tally, "homotopy"); break;
            case 4: criterion_3_4(tally, "cohomology"); break;
            case 5: criterion_5(tally); break;
            case 6: criterion_6(tally); break;
            case 7: criterion_7(tally); break;
            case 8: criterion_8(tally); break;
            case 9: criterion_9(tally); break;
            case 10: criterion_10(tally); break;
        }
        result.passed = tally.passed();
        result.detail = tally.detail();
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("error: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.seconds > result.budget_seconds) {
        result.passed = false;
        result.detail += "; over time budget";
    }
    return result;
}

std::vector<CriterionResult> run_suite(const std::string& suite) {
    std::vector<CriterionResult> out;
    for (int id : suite_criteria(suite)) out.push_back(run_criterion(id));
    return out;
}

}  // namespace repstab::verify
