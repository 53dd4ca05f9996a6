#include "oracles.hpp"
#include "repstab/liecalc.hpp"
#include "repstab/oracles.hpp"

#include "printing.hpp"

#include <doctest.h>

using namespace repstab;

namespace {

SymRep decompose_trace(int n, const std::function<Rational(const testoracle::Perm&)>& f) {
    return decompose_character(testoracle::character_from(n, f));
}

}  // namespace

TEST_SUITE("liecalc") {

TEST_CASE("Lyndon words") {
    CHECK(lyndon_words(2, 3) == std::vector<Word>{{0, 0, 1}, {0, 1, 1}});
    CHECK(is_lyndon({0, 1}));
    CHECK_FALSE(is_lyndon({1, 0}));
    CHECK_FALSE(is_lyndon({0, 1, 0, 1}));
    for (int a = 1; a <= 4; ++a)
        for (int l = 1; l <= 6; ++l) {
            const auto words = lyndon_words(a, l);
            CHECK(static_cast<long>(words.size()) == oracle::super_witt_dimension(a, l, Parity::even));
            CHECK(std::is_sorted(words.begin(), words.end()));
            for (const auto& w : words) CHECK(is_lyndon(w));
        }
    const auto [u, v] = standard_factorization({0, 0, 1, 0, 1});
    CHECK(u == Word{0, 0, 1});
    CHECK(v == Word{0, 1});
}

TEST_CASE("basis sizes") {
    CHECK(lie_basis(GeneratorSet{2, 2, 1}, 2).size() == 1);
    CHECK(lie_basis(GeneratorSet{2, 2, 1}, 3).size() == 2);
    CHECK(lie_basis(GeneratorSet{2, 2, 2}, 2).size() == 3);  // effective parity odd
    for (int g = 1; g <= 3; ++g)
        for (int l = 1; l <= 5; ++l)
            for (int m : {1, 2}) {
                const GeneratorSet gens{g, 2, m};
                const Parity p = gens.effective_parity();
                const long size = static_cast<long>(lie_basis(gens, l).size());
                CHECK(size == oracle::super_witt_dimension(g, l, p));
                CHECK(size == oracle::magma_quotient_dimension(g, l, p));
            }
}

TEST_CASE("effective parity and internal degree") {
    CHECK(GeneratorSet{3, 2, 1}.effective_parity() == Parity::even);
    CHECK(GeneratorSet{3, 3, 1}.effective_parity() == Parity::odd);
    CHECK(GeneratorSet{3, 2, 2}.effective_parity() == Parity::odd);
    CHECK(GeneratorSet{3, 2, 2}.internal_degree(3) == 8);
    CHECK_THROWS_AS(GeneratorSet({3, 1, 1}).validate(), Error);
    CHECK_THROWS_AS(GeneratorSet({3, 2, 0}).validate(), Error);
}

TEST_CASE("bracket expansion") {
    const GeneratorSet even{2, 2, 1};
    const auto a = bracket_expand(even, LieExpression::parse("[x1,x2]"));
    REQUIRE(a.size() == 1);
    CHECK(a.begin()->first == Word{0, 1});
    CHECK(a.begin()->second == 1);
    const auto b = bracket_expand(even, LieExpression::parse("[x2,x1]"));
    CHECK(b.begin()->second == -1);
    CHECK(bracket_expand(even, LieExpression::parse("[x1,x1]")).empty());
    // Jacobi identity
    CHECK(bracket_expand(GeneratorSet{3, 2, 1}, LieExpression::parse("[x1,[x2,x3]] + [x2,[x3,x1]] + [x3,[x1,x2]]")).empty());
    CHECK_THROWS_AS(bracket_expand(even, LieExpression::parse("[x1,x2] + x1")), Error);
    CHECK_THROWS_AS(LieExpression::parse("[x1,"), Error);
    CHECK_THROWS_AS(LieExpression::parse("[x0,x1]"), Error);
}

TEST_CASE("odd bracket expansion matches brute-force tensor coordinates") {
    // odd letters: [x1,x1] = 2 x1x1, and [x1,[x1,x1]] vanishes
    const GeneratorSet odd{2, 2, 2};
    const auto sq = bracket_expand(odd, LieExpression::parse("[x1,x1]"));
    REQUIRE(sq.size() == 1);
    CHECK(bracket_expand(odd, LieExpression::parse("[x1,[x1,x1]]")).empty());
    // coordinates reconstruct the tensor polynomial of the original expression
    const std::string text = "[x1,[x1,x2]] + 1/2*[x2,[x1,x1]] - [[x2,x1],x2]";
    const auto coords = bracket_expand(odd, LieExpression::parse(text));
    FreeLieAlgebra alg(2, Parity::odd);
    TensorPoly rebuilt;
    for (const auto& [lead, c] : coords)
        for (const auto& [w, x] : alg.polynomial(alg.element_for(lead))) rebuilt[w] += c * x;
    std::erase_if(rebuilt, [](const auto& kv) { return kv.second == 0; });
    using testoracle::Poly;
    auto letter = [](int i) { return Poly{{testoracle::Word{i}, Rational(1)}}; };
    auto br = [](const Poly& a, int wa, const Poly& b, int wb) { return testoracle::super_bracket(a, wa, b, wb, true); };
    Poly want;
    for (const auto& [w, x] : br(letter(0), 1, br(letter(0), 1, letter(1), 1), 2)) want[w] += x;
    for (const auto& [w, x] : br(letter(1), 1, br(letter(0), 1, letter(0), 1), 2)) want[w] += x / 2;
    for (const auto& [w, x] : br(br(letter(1), 1, letter(0), 1), 2, letter(1), 1)) want[w] -= x;
    std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
    CHECK(rebuilt == TensorPoly(want.begin(), want.end()));
}

TEST_CASE("characters agree with the Moebius trace formula") {
    for (int n = 1; n <= 5; ++n)
        for (int w = 1; w <= 4; ++w)
            for (int m : {1, 2}) {
                const GeneratorSet gens{n, 2, m};
                const bool odd = gens.effective_parity() == Parity::odd;
                const auto want = decompose_trace(n, [&](const testoracle::Perm& g) -> Rational { return testoracle::lie_trace(g, w, odd); });
                const auto got = lie_character(gens, w);
                CHECK(got.action == want);
                CHECK(got.internal_degree == gens.internal_degree(w));
            }
}

TEST_CASE("named small characters") {
    for (int n = 2; n <= 6; ++n)
        CHECK(lie_character(GeneratorSet{n, 2, 1}, 1).action ==
              SymRep(n, {{pad_label(Partition{}, n), 1}, {pad_label(Partition{1}, n), 1}}));
    CHECK(lie_character(GeneratorSet{4, 2, 1}, 2).action == SymRep(4, {{Partition({3, 1}), 1}, {Partition({2, 1, 1}), 1}}));
    CHECK(lie_character(GeneratorSet{4, 2, 2}, 2).action == graded_power(permutation_rep(4), 2, Parity::even));
}

TEST_CASE("Gerstenhaber pieces") {
    // m = 1: the free associative algebra, character fix(g)^w on degree wd
    for (int d : {2, 3})
        for (int n = 1; n <= 4; ++n)
            for (int w = 1; w <= 3; ++w) {
                const GeneratorSet gens{n, d, 1};
                const auto want = decompose_trace(n, [&](const testoracle::Perm& g) -> Rational {
                    BigInt f = 1;
                    for (int i = 0; i < w; ++i) f *= testoracle::fixed_points(g);
                    return Rational(f);
                });
                CHECK(gerstenhaber_character(gens, w * d) == want);
            }
    CHECK(gerstenhaber_character(GeneratorSet{5, 2, 2}, 2) == permutation_rep(5));
    CHECK(gerstenhaber_character(GeneratorSet{3, 2, 1}, 3).empty());
    // d = 2, m = 2, two generators, degree 5: only the weight-2 Lie piece [xi,xj]
    CHECK(gerstenhaber_character(GeneratorSet{2, 2, 2}, 5) == SymRep(2, {{Partition{2}, 2}, {Partition({1, 1}), 1}}));
    CHECK(lie_degree_piece(GeneratorSet{3, 2, 2}, 4).empty());
}

TEST_CASE("weight bound report") {
    const auto empty = verify_algebra_weight_bound(2, 1, 3, 4);
    CHECK(empty.lie_weight == 0);
    CHECK(empty.passed());
    const auto r = verify_algebra_weight_bound(2, 2, 6, 6);
    CHECK(r.bound == 6);
    CHECK(r.passed());
    CHECK(r.lie_weight <= 6);
    CHECK(r.gerstenhaber_weight <= 6);
}

TEST_CASE("scale limits") {
    CHECK_THROWS_AS(lie_character(GeneratorSet{max_lie_generators + 1, 2, 1}, 2), Error);
    CHECK_THROWS_AS(lie_character(GeneratorSet{3, 2, 1}, max_lie_weight + 1), Error);
}

}
