#include "repstab/cli.hpp"
#include "repstab/store.hpp"

#include "printing.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace repstab;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("repstab-cli-" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    store::write_file_atomic(path, text);
    return path.string();
}

std::string pairs_file() {
    const auto path = (scratch() / "pairs.json").string();
    if (!fs::exists(path)) {
        const auto r = run({"config", "--parity", "even", "--lie-weight", "1", "--kmax", "7", "--format", "json", "--out", path});
        REQUIRE(r.code == 0);
    }
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config table for the pairs module") {
    const auto r = run({"config", "--parity", "even", "--lie-weight", "1", "--kmax", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("| 4 | V(0) + V(1) + V(2) |") != std::string::npos);
    CHECK(r.out.find("| 6 | V(0) + V(1) + V(2) |") != std::string::npos);
    CHECK(r.err.empty());
    const auto odd = run({"config", "--parity", "odd", "--lie-weight", "1", "--kmax", "5"});
    CHECK(odd.out.find("| 4 | V(1) + V(1,1) |") != std::string::npos);
}

TEST_CASE("fimod info on the pairs module") {
    const auto r = run({"fimod", "info", pairs_file()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1/2*k^2 - 1/2*k") != std::string::npos);
    const auto j = run({"--format", "json", "fimod", "info", pairs_file()});
    REQUIRE(j.code == 0);
    const auto doc = store::Json::parse(j.out);
    CHECK(doc["weight"] == 2);
    CHECK(doc["repstab"]["onset"] == 4);
}

TEST_CASE("chartab") {
    const auto zero = run({"chartab", "--n", "0", "--format", "json"});
    REQUIRE(zero.code == 0);
    const auto table = store::decode<CharacterTable>(zero.out.substr(0, zero.out.find('\n')));
    CHECK(table.labels.size() == 1);
    CHECK(table.rows.size() == 1);

    const auto out = (scratch() / "s4.json").string();
    REQUIRE(run({"chartab", "--n", "4", "--out", out}).code == 0);
    const auto again = run({"chartab", "--in", out, "--format", "csv"});
    CHECK(again.code == 0);
    CHECK(again.out.find("2,1,1") != std::string::npos);
}

TEST_CASE("decompose") {
    const auto perm = store::encode(permutation_rep(4).character());
    const auto path = write_temp("perm4.json", perm);
    const auto r = run({"decompose", "--character", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("(3,1)") != std::string::npos);
    // a class function that is not a character
    CharacterVector half = permutation_rep(3).character();
    for (auto& v : half.values) v /= 2;
    const auto bad = write_temp("half.json", store::encode(half));
    CHECK(run({"decompose", "--character", bad}).code == 3);
    CharacterVector diff = trivial_rep(3).character();
    for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= sign_rep(3).character().values[i];
    const auto virt = write_temp("virtual.json", store::encode(diff));
    CHECK(run({"decompose", "--character", virt}).code != 0);
    CHECK(run({"decompose", "--character", virt, "--virtual"}).code == 0);
}

TEST_CASE("tensor and repstab-check") {
    const auto prod = (scratch() / "prod.json").string();
    const auto r = run({"fimod", "tensor", pairs_file(), pairs_file(), "--out", prod});
    REQUIRE(r.code == 0);
    const auto t = store::decode<FIModuleTable>(store::read_file(prod));
    CHECK(weight_of(t).weight == 4);
    CHECK(run({"repstab-check", pairs_file(), "--range", "4"}).code == 0);
    const auto odd = (scratch() / "odd2.json").string();
    REQUIRE(run({"config", "--parity", "odd", "--lie-weight", "2", "--kmax", "7", "--format", "json", "--out", odd}).code == 0);
    CHECK(run({"repstab-check", odd, "--range", "8"}).code == 0);
    const auto seq = write_temp("seq.json", store::encode(subset_sequence(2, Parity::even, 6)));
    CHECK(run({"repstab-check", seq, "--range", "4"}).code == 0);
}

TEST_CASE("freelie") {
    const auto r = run({"freelie", "--d", "2", "--m", "1", "--piece", "6", "--nmax", "4"});
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--suite", "paper-example"});
    CHECK(r.code == 0);
    const auto one = run({"verify", "--criterion", "2", "--format", "json"});
    CHECK(one.code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"config", "--parity", "purple"}).code == 2);
    CHECK(run({"config", "--parity", "even", "--format", "xml"}).code == 2);
    CHECK(run({"chartab"}).code == 2);
    CHECK(run({"chartab", "--n", "-1"}).code == 2);
    CHECK(run({"chartab", "--n", "20"}).code == 4);
    CHECK(run({"config", "--parity", "even", "--lie-weight", "9"}).code == 4);
    CHECK(run({"fimod", "info", (scratch() / "no-such-file.json").string()}).code == 3);
    CHECK(run({"fimod", "info", write_temp("garbage.json", "{oops")}).code == 3);
    CHECK(run({"repstab-check", write_temp("part.json", store::encode(Partition{2, 1})), "--range", "2"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json output is deterministic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"config", "--parity", "odd", "--lie-weight", "2", "--kmax", "6", "--format", "json"},
          std::vector<std::string>{"chartab", "--n", "6", "--format", "json"},
          std::vector<std::string>{"--format", "json", "fimod", "info", pairs_file()}}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verbose logs go to standard error only") {
    const auto quiet = run({"config", "--parity", "even", "--lie-weight", "1", "--kmax", "5"});
    const auto loud = run({"config", "--parity", "even", "--lie-weight", "1", "--kmax", "5", "--verbose"});
    CHECK(quiet.out == loud.out);
    CHECK(quiet.err.empty());
    CHECK_FALSE(loud.err.empty());
}

}
