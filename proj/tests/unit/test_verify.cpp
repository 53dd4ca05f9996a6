#include "oracles.hpp"
#include "repstab/oracles.hpp"
#include "repstab/verify.hpp"

#include "printing.hpp"

#include <doctest.h>

#include <set>

using namespace repstab;

TEST_SUITE("verify") {

TEST_CASE("suites partition the criteria") {
    CHECK(verify::suite_criteria("paper-example") == std::vector<int>{1, 2});
    std::set<int> seen;
    for (const auto* s : {"paper-example", "ranges", "algebra"})
        for (int id : verify::suite_criteria(s)) CHECK(seen.insert(id).second);
    CHECK(seen.size() == static_cast<std::size_t>(verify::criterion_count));
    CHECK(verify::suite_criteria("all").size() == static_cast<std::size_t>(verify::criterion_count));
    CHECK_THROWS_AS(verify::suite_criteria("everything"), Error);
    for (int id = 1; id <= verify::criterion_count; ++id) CHECK_FALSE(verify::criterion_title(id).empty());
}

TEST_CASE("unknown criterion ids are rejected") {
    CHECK_THROWS_AS(verify::run_criterion(0), Error);
    CHECK_THROWS_AS(verify::run_criterion(verify::criterion_count + 1), Error);
}

TEST_CASE("library oracles agree with the test oracles") {
    for (int n = 1; n <= 30; ++n) CHECK(oracle::moebius(n) == testoracle::moebius(n));
    // one odd generator: [x,x] survives in weight 2 only
    CHECK(oracle::super_witt_dimension(1, 1, Parity::odd) == 1);
    CHECK(oracle::super_witt_dimension(1, 2, Parity::odd) == 1);
    CHECK(oracle::super_witt_dimension(1, 3, Parity::odd) == 0);
    CHECK(oracle::super_witt_dimension(2, 3, Parity::even) == 2);
    CHECK(oracle::magma_quotient_dimension(2, 4, Parity::even) == 3);
    CHECK(oracle::dk_semidirect_dimension(4, Parity::even, 1) == 6);
}

}
