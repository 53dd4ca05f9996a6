#include "repstab/store.hpp"

#include "printing.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

using namespace repstab;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("repstab-store-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// encode -> decode -> encode must reproduce the text exactly
template <class T>
void check_fixed_point(const T& value) {
    const auto text = store::encode(value);
    const auto again = store::encode(store::decode<T>(text));
    CHECK(text == again);
}

struct CacheOverride {
    explicit CacheOverride(std::optional<fs::path> dir) { store::set_cache_directory(std::move(dir)); }
    ~CacheOverride() { store::set_cache_directory(std::nullopt); }
};

}  // namespace

TEST_SUITE("store") {

TEST_CASE("canonical payloads") {
    CHECK(store::to_json(Partition{}) == store::Json::array());
    CHECK(store::to_json(Partition{3, 1, 1}).dump() == "[3,1,1]");
    CHECK(store::to_json(Rational(-3, 6)).dump() == "[-1,2]");
    CHECK(store::to_json(BigInt("123456789012345678901234567890")).dump() == "\"123456789012345678901234567890\"");
    CHECK(store::to_json(BigInt(-7)).dump() == "-7");
    const SymRep rep(4, {{Partition{3, 1}, 2}, {Partition{4}, 1}});
    CHECK(store::to_json(rep).dump() == R"({"mults":[[[4],1],[[3,1],2]],"n":4})");
}

TEST_CASE("round trips") {
    const SymRep rep(5, {{Partition{3, 2}, 3}, {Partition{1, 1, 1, 1, 1}, 1}});
    CHECK(store::decode<SymRep>(store::encode(rep)) == rep);
    CHECK(store::decode<Partition>(store::encode(Partition{4, 2, 2, 1})) == Partition{4, 2, 2, 1});
    CHECK(store::decode<Rational>(store::encode(Rational(22, 7))) == Rational(22, 7));
    CHECK(store::decode<CharacterVector>(store::encode(rep.character())) == rep.character());

    const auto table = dk_graded_basis(4, Parity::odd, 2);
    CHECK(store::decode<DKGradedPiece>(store::encode(table)) == table);
    const auto arnold = arnold_character(4, Parity::even, 2);
    CHECK(store::decode<ArnoldPiece>(store::encode(arnold)) == arnold);
    const auto lie = lie_character(GeneratorSet{3, 2, 1}, 4);
    CHECK(store::decode<GradedPieceRep>(store::encode(lie)) == lie);

    check_fixed_point(compute_character_table(6));
    check_fixed_point(homotopy_fi_module(Parity::even, 2, 6));
    check_fixed_point(subset_sequence(2, Parity::odd, 5));
    check_fixed_point(check_uniform_repstab(homotopy_fi_module(Parity::odd, 1, 6), 2));
    check_fixed_point(rep);
}

TEST_CASE("fimod table survives a round trip") {
    const auto t = homotopy_fi_module(Parity::even, 1, 6);
    const auto back = store::decode<FIModuleTable>(store::encode(t));
    CHECK(back.max_n() == t.max_n());
    for (int n = 0; n <= t.max_n(); ++n) CHECK(back.level(n) == t.level(n));
    CHECK(back.metadata() == t.metadata());
}

TEST_CASE("invalid payloads are rejected with a path") {
    const auto bad = store::seal("symrep", store::Json::parse(R"({"n":3,"mults":[[[2,1],-1]]})"));
    CHECK_THROWS_AS(store::decode<SymRep>(bad), Error);
    try {
        store::decode<SymRep>(bad);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvariantViolation);
        CHECK(std::string(e.what()).find("$.payload.mults") != std::string::npos);
    }
    const auto wrong_rank = store::seal("symrep", store::Json::parse(R"({"n":3,"mults":[[[2,2],1]]})"));
    CHECK_THROWS_AS(store::decode<SymRep>(wrong_rank), Error);
    const auto not_lowest = store::seal("rational", store::Json::parse("[2,4]"));
    CHECK_THROWS_AS(store::decode<Rational>(not_lowest), Error);
    const auto increasing = store::seal("partition", store::Json::parse("[1,2]"));
    CHECK_THROWS_AS(store::decode<Partition>(increasing), Error);
}

TEST_CASE("envelope errors") {
    const auto text = store::encode(Partition{2, 1});
    auto code_of = [](const std::string& t) {
        try {
            store::decode<Partition>(t);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::VerificationFailed;  // sentinel: nothing thrown
    };
    CHECK(code_of(text.substr(0, text.size() / 2)) == ErrorCode::ParseError);
    CHECK(code_of("") == ErrorCode::ParseError);
    CHECK(code_of(store::encode(Rational(1, 2))) == ErrorCode::SchemaError);
    auto env = store::Json::parse(text);
    env["schema_version"] = 2;
    CHECK(code_of(env.dump()) == ErrorCode::SchemaError);
    env = store::Json::parse(text);
    env["payload"] = store::Json::parse("[3,1]");
    CHECK(code_of(env.dump()) == ErrorCode::CacheCorrupt);
    CHECK(store::peek_kind(text) == "partition");
}

TEST_CASE("single-byte corruption never decodes silently") {
    const auto text = store::encode(compute_character_table(4));
    std::mt19937 rng(7);
    int changed = 0;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        auto copy = text;
        char c = copy[pos];
        do c = static_cast<char>(32 + rng() % 95);
        while (c == copy[pos]);
        copy[pos] = c;
        bool threw = false;
        try {
            store::decode<CharacterTable>(copy);
        } catch (const Error&) {
            threw = true;
        }
        CHECK_MESSAGE(threw, "byte ", pos);
        ++changed;
    }
    CHECK(changed == static_cast<int>(text.size()));
}

TEST_CASE("atomic file writes") {
    const auto dir = scratch_dir("write");
    const auto file = dir / "nested" / "out.json";
    store::write_file_atomic(file, "first");
    store::write_file_atomic(file, "second");
    CHECK(store::read_file(file) == "second");
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir / "nested")) ++entries;
    CHECK(entries == 1);
    CHECK_THROWS_AS(store::read_file(dir / "missing.json"), Error);
    fs::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
    const char* saved = std::getenv("REPSTAB_CACHE");
    const std::string saved_value = saved ? saved : "";
    {
        CacheOverride o(fs::path("/tmp/flag-dir"));
        CHECK(store::cache_directory() == fs::path("/tmp/flag-dir"));
    }
    {
        CacheOverride o{fs::path()};
        CHECK_FALSE(store::cache_directory().has_value());
    }
    // back to environment resolution
    store::set_cache_directory(std::nullopt);
    ::setenv("REPSTAB_CACHE", "/tmp/env-dir", 1);
    CHECK(store::cache_directory() == fs::path("/tmp/env-dir"));
    ::setenv("REPSTAB_CACHE", "", 1);
    CHECK_FALSE(store::cache_directory().has_value());
    if (saved) ::setenv("REPSTAB_CACHE", saved_value.c_str(), 1);
    else ::unsetenv("REPSTAB_CACHE");
    CHECK(store::cache_file("/x", 7) == fs::path("/x/chartab-7.json"));
}

TEST_CASE("table cache files") {
    const auto dir = scratch_dir("cache");
    CHECK_FALSE(store::load_cached_table(dir, 5).has_value());
    const auto table = compute_character_table(5);
    CHECK(store::save_cached_table(dir, table));
    CHECK(fs::exists(dir / "chartab-5.json"));
    const auto loaded = store::load_cached_table(dir, 5);
    REQUIRE(loaded.has_value());
    CHECK(store::encode(*loaded) == store::encode(table));

    // a table stored under the wrong n
    fs::copy_file(dir / "chartab-5.json", dir / "chartab-6.json");
    CHECK_THROWS_AS(store::load_cached_table(dir, 6), Error);

    auto text = store::read_file(dir / "chartab-5.json");
    text[text.size() / 2] = text[text.size() / 2] == '1' ? '2' : '1';
    store::write_file_atomic(dir / "chartab-5.json", text);
    try {
        store::load_cached_table(dir, 5);
        FAIL("corrupt cache accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CacheCorrupt);
    }
    fs::remove_all(dir);
}

TEST_CASE("character_table recomputes over a corrupt cache file") {
    const auto dir = scratch_dir("recompute");
    store::write_file_atomic(store::cache_file(dir, 11), "{not json");
    {
        CacheOverride o(dir);
        const auto table = character_table(11);
        CHECK(table->labels.size() == 56);
    }
    // the bad file has been replaced by a valid one
    CHECK(store::load_cached_table(dir, 11).has_value());
    fs::remove_all(dir);
}

}
