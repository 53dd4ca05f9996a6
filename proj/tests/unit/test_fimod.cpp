#include "oracles.hpp"
#include "repstab/dkconfig.hpp"
#include "repstab/fimod.hpp"

#include "printing.hpp"

#include <doctest.h>

#include <random>

using namespace repstab;

namespace {

FIModuleTable pairs_table(Parity parity, int max_n) {
    // action of S_n on 2-subsets (even) or oriented 2-subsets (odd), from explicit traces
    std::vector<SymRep> levels;
    for (int n = 0; n <= max_n; ++n) {
        const auto chi = testoracle::character_from(n, [&](const testoracle::Perm& g) -> Rational {
            Rational t = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const int a = g[static_cast<std::size_t>(i)], b = g[static_cast<std::size_t>(j)];
                    if (std::min(a, b) != i || std::max(a, b) != j) continue;
                    t += (parity == Parity::odd && a > b) ? -1 : 1;
                }
            return t;
        });
        levels.push_back(decompose_character(chi));
    }
    return FIModuleTable("pairs", true, levels);
}

// dim of S_k-invariants of F_{k+q}, averaging the level character over S_k x 1.
BigInt phi_oracle(const FIModuleTable& t, int q, int k) {
    const auto& classes = conjugacy_classes(k);
    const auto chi = t.level(k + q).character();
    const auto& big = conjugacy_classes(k + q);
    Rational s = 0;
    for (const auto& c : classes.classes) {
        auto parts = c.cycle_type.parts();
        for (int i = 0; i < q; ++i) parts.push_back(1);
        s += Rational(c.size) * chi.values[big.index_of(Partition(parts))];
    }
    s /= Rational(factorial(k));
    return s.get_num();
}

GeneratorMultiset random_generators(std::mt19937& rng, int max_size) {
    std::vector<Partition> pool;
    for (int s = 0; s <= max_size; ++s)
        for (const auto& p : enumerate_partitions(s)) pool.push_back(p);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1), count(1, 3);
    GeneratorMultiset g;
    for (int i = count(rng); i > 0; --i) g[pool[static_cast<std::size_t>(pick(rng))]] += 1;
    return g;
}

}  // namespace

TEST_SUITE("fimod") {

TEST_CASE("weight") {
    CHECK(weight_of(free_module_table(Partition{}, 6)).weight == 0);
    CHECK(weight_of(pairs_table(Parity::even, 6)).weight == 2);
    for (int s = 0; s <= 4; ++s)
        for (const auto& lambda : enumerate_partitions(s)) CHECK(weight_of(free_module_table(lambda, 10)).weight == s);
    CHECK_FALSE(weight_of(FIModuleTable("zero", true, {SymRep(0), SymRep(1), SymRep(2)})).level.has_value());
}

TEST_CASE("free modules agree with explicit induction") {
    const auto t = free_module_table(Partition({1, 1}), 6);
    CHECK(t == pairs_table(Parity::odd, 6).renamed(t.name()));
    CHECK(free_module_table(Partition{2}, 6).levels() == pairs_table(Parity::even, 6).levels());
}

TEST_CASE("phi dimensions") {
    const auto m0 = free_module_table(Partition{}, 6);
    for (const auto& d : phi_dims(m0, 0)) CHECK(d == 1);
    const auto m1 = free_module_table(Partition{1}, 6);
    const auto p0 = phi_dims(m1, 0);
    CHECK(p0[0] == 0);
    for (std::size_t k = 1; k < p0.size(); ++k) CHECK(p0[k] == 1);
    const auto p1 = phi_dims(m1, 1);
    for (std::size_t k = 1; k < p1.size(); ++k) CHECK(p1[k] == 2);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = free_module_table(random_generators(rng, 3), 7);
        for (int q = 0; q <= 3; ++q) {
            const auto dims = phi_dims(t, q);
            for (int k = 0; k + q <= 7; ++k) CHECK(dims[static_cast<std::size_t>(k)] == phi_oracle(t, q, k));
        }
    }
}

TEST_CASE("stability degree bounds") {
    const auto m0 = stability_degree_bounds(free_module_table(Partition{}, 6), 2);
    CHECK(m0.lower == 0);
    CHECK(m0.upper == 0);
    const auto m2 = stability_degree_bounds(free_module_table(Partition{2}, 10));
    CHECK(m2.lower <= 2);
    CHECK(m2.upper == 2);
    CHECK(stability_degree_bounds(pairs_table(Parity::odd, 8), 2).upper == 1);
    CHECK_THROWS_AS(stability_degree_bounds(free_module_table(Partition{2}, 3), 4), Error);
}

TEST_CASE("H0 classification round trips") {
    CHECK(h0_decompose(free_module_table(Partition{2}, 6)) == GeneratorMultiset{{Partition{2}, 1}});
    CHECK(h0_decompose(pairs_table(Parity::even, 6)) == GeneratorMultiset{{Partition{2}, 1}});
    CHECK(h0_decompose(pairs_table(Parity::odd, 6)) == GeneratorMultiset{{Partition({1, 1}), 1}});
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_generators(rng, 4);
        CHECK(h0_decompose(free_module_table(g, 8)) == g);
    }
    // a level that cannot come from a free module
    FIModuleTable bad("bad", true, {SymRep(0), SymRep(1, {{Partition{1}, 1}}), SymRep(2)});
    CHECK_THROWS_AS(h0_decompose(bad), Error);
}

TEST_CASE("generation degree") {
    CHECK(generation_degree(free_module_table(Partition{}, 5)) == 0);
    CHECK(generation_degree(pairs_table(Parity::even, 6)) == 2);
    CHECK(generation_degree(free_module_table(GeneratorMultiset{{Partition{1}, 1}, {Partition{3}, 1}}, 7)) == 3);
}

TEST_CASE("tensor products") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        const auto f = free_module_table(random_generators(rng, 2), 6);
        const auto g = free_module_table(random_generators(rng, 2), 6);
        const auto fg = tensor_fimod(f, g);
        const auto phi = phi_dims(fg, 0);
        for (int n = 0; n <= 6; ++n) {
            BigInt s = 0;
            for (const auto& [l, c] : f.level(n).multiplicities()) s += c * g.level(n).multiplicity(l);
            CHECK(phi[static_cast<std::size_t>(n)] == s);
            CHECK(fg.level(n).dimension() == f.level(n).dimension() * g.level(n).dimension());
        }
        CHECK(weight_of(fg).weight <= weight_of(f).weight + weight_of(g).weight);
        CHECK(fg.metadata().weight_bound == weight_of(f).weight + weight_of(g).weight);
        CHECK(fg.metadata().generation_bound == generation_degree(f) + generation_degree(g));
    }
    CHECK_THROWS_AS(tensor_fimod(free_module_table(Partition{}, 3), free_module_table(Partition{}, 4)), Error);
}

TEST_CASE("dimension polynomials") {
    const auto p0 = dimension_polynomial(free_module_table(Partition{}, 5));
    CHECK(p0.onset == 0);
    CHECK(p0.degree() == 0);
    CHECK(p0.evaluate(17) == 1);
    const auto p1 = dimension_polynomial(free_module_table(Partition{1}, 5));
    CHECK(p1.evaluate(9) == 9);
    const auto pp = dimension_polynomial(pairs_table(Parity::even, 7));
    for (int k = 0; k <= 20; ++k) CHECK(pp.evaluate(k) == Rational(k * (k - 1) / 2));
    CHECK(pp.to_power_string("k") == "1/2*k^2 - 1/2*k");
    // a non-FI# table: the polynomial is fitted through the top levels
    std::vector<SymRep> levels;
    for (int n = 0; n <= 8; ++n) levels.push_back(n < 2 ? SymRep(n) : induce_with_trivial(Partition{1}, n));
    const auto fitted = dimension_polynomial(FIModuleTable("shifted", false, levels));
    CHECK(fitted.degree() == 1);
    CHECK(fitted.onset == 2);
    CHECK(fitted.evaluate(30) == 30);
}

TEST_CASE("uniform representation stability of tables") {
    const auto pairs = check_uniform_repstab(pairs_table(Parity::even, 7), 4);
    CHECK(pairs.passed);
    CHECK(pairs.onset == 4);
    CHECK(check_uniform_repstab(FIModuleTable("zero", true, {SymRep(0), SymRep(1), SymRep(2)}), 0).passed);
    const auto m1 = check_uniform_repstab(free_module_table(Partition{1}, 6), 2);
    CHECK(m1.passed);
    CHECK(m1.stable_multiplicities == GeneratorMultiset{{Partition{}, 1}, {Partition{1}, 1}});
    const auto odd = check_uniform_repstab(pairs_table(Parity::odd, 7), predicted_range(1, 2));
    CHECK(odd.passed);
    CHECK(odd.onset <= 3);
    CHECK_FALSE(check_uniform_repstab(pairs_table(Parity::even, 7), 3).passed);
    // non-FI# tables need two levels past the claimed range
    std::vector<SymRep> levels;
    levels.push_back(SymRep(0));
    for (int n = 1; n <= 5; ++n) levels.push_back(induce_with_trivial(Partition{1}, n));
    CHECK_THROWS_AS(check_uniform_repstab(FIModuleTable("t", false, levels), 4), Error);
}

TEST_CASE("predicted range") {
    CHECK(predicted_range(0, 0) == 0);
    CHECK(predicted_range(2, 2) == 4);
    CHECK(predicted_range(1, 2) == 3);
}

TEST_CASE("consistent sequences of subsets") {
    for (auto parity : {Parity::even, Parity::odd}) {
        const auto seq = subset_sequence(2, parity, 7);
        const auto table = pairs_table(parity, 7);
        for (int n = 0; n <= 7; ++n) CHECK(decompose_character(seq.character(n)) == table.level(n));
        const auto r = check_uniform_repstab(seq, 4);
        CHECK(r.passed);
        CHECK(r.coxeter_relations_hold);
        CHECK(r.equivariant);
        REQUIRE(r.injective_from.has_value());
        CHECK(*r.injective_from <= 2);
    }
}

TEST_CASE("table construction validates ranks") {
    CHECK_THROWS_AS(FIModuleTable("x", false, {SymRep(1)}), Error);
    try {
        weight_of(FIModuleTable("x", false, {}));
        FAIL("empty table accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyTable);
    }
}

}
