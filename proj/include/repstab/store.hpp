#ifndef REPSTAB_STORE_HPP
#define REPSTAB_STORE_HPP

#include "repstab/dkconfig.hpp"
#include "repstab/fimod.hpp"
#include "repstab/liecalc.hpp"
#include "repstab/symchar.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace repstab::store {

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

// Canonical payload forms. Object keys are sorted, partitions are integer arrays,
// rationals are [numerator, denominator] in lowest terms, integers that do not fit
// in 64 bits are decimal strings. Decoders name the offending JSON path on failure.

Json to_json(const BigInt& value);
Json to_json(const Rational& value);
Json to_json(const Partition& value);
Json to_json(const SymRep& value);
Json to_json(const CharacterVector& value);
Json to_json(const CharacterTable& value);
Json to_json(const linalg::Matrix& value);
Json to_json(const FIModuleTable& value);
Json to_json(const ConsistentSequence& value);
Json to_json(const RepStabReport& value);
Json to_json(const GradedPieceRep& value);
Json to_json(const DKGradedPiece& value);
Json to_json(const ArnoldPiece& value);

BigInt bigint_from_json(const Json& j, const std::string& path = "$");
Rational rational_from_json(const Json& j, const std::string& path = "$");
Partition partition_from_json(const Json& j, const std::string& path = "$");
SymRep symrep_from_json(const Json& j, const std::string& path = "$");
CharacterVector character_from_json(const Json& j, const std::string& path = "$");
CharacterTable chartab_from_json(const Json& j, const std::string& path = "$");
linalg::Matrix matrix_from_json(const Json& j, const std::string& path = "$");
FIModuleTable fimod_from_json(const Json& j, const std::string& path = "$");
ConsistentSequence sequence_from_json(const Json& j, const std::string& path = "$");
RepStabReport report_from_json(const Json& j, const std::string& path = "$");
GradedPieceRep lie_piece_from_json(const Json& j, const std::string& path = "$");
DKGradedPiece dk_piece_from_json(const Json& j, const std::string& path = "$");
ArnoldPiece arnold_piece_from_json(const Json& j, const std::string& path = "$");

/// 64-bit FNV-1a of the compact payload dump, as 16 lowercase hex digits.
std::string checksum(const Json& payload);

/// Wraps a payload as {schema_version, kind, payload, checksum}; returns compact text.
std::string seal(const std::string& kind, const Json& payload);

/// Parses an envelope and returns its payload after checking version, kind and checksum.
/// ParseError for malformed text, SchemaError for version/kind problems, CacheCorrupt
/// for a checksum mismatch. An empty `kind` accepts any kind.
Json unseal(const std::string& text, const std::string& kind = "");

/// Kind tag of an envelope without validating the payload.
std::string peek_kind(const std::string& text);

template <class T>
struct KindOf;
template <> struct KindOf<Partition> { static constexpr const char* value = "partition"; };
template <> struct KindOf<Rational> { static constexpr const char* value = "rational"; };
template <> struct KindOf<SymRep> { static constexpr const char* value = "symrep"; };
template <> struct KindOf<CharacterVector> { static constexpr const char* value = "character"; };
template <> struct KindOf<CharacterTable> { static constexpr const char* value = "chartab"; };
template <> struct KindOf<FIModuleTable> { static constexpr const char* value = "fimod-table"; };
template <> struct KindOf<ConsistentSequence> { static constexpr const char* value = "consistent-sequence"; };
template <> struct KindOf<RepStabReport> { static constexpr const char* value = "repstab-report"; };
template <> struct KindOf<GradedPieceRep> { static constexpr const char* value = "lie-piece"; };
template <> struct KindOf<DKGradedPiece> { static constexpr const char* value = "dk-piece"; };
template <> struct KindOf<ArnoldPiece> { static constexpr const char* value = "arnold-piece"; };

template <class T>
std::string encode(const T& value) {
    return seal(KindOf<T>::value, to_json(value));
}

template <class T>
T decode(const std::string& text);

template <> Partition decode<Partition>(const std::string& text);
template <> Rational decode<Rational>(const std::string& text);
template <> SymRep decode<SymRep>(const std::string& text);
template <> CharacterVector decode<CharacterVector>(const std::string& text);
template <> CharacterTable decode<CharacterTable>(const std::string& text);
template <> FIModuleTable decode<FIModuleTable>(const std::string& text);
template <> ConsistentSequence decode<ConsistentSequence>(const std::string& text);
template <> RepStabReport decode<RepStabReport>(const std::string& text);
template <> GradedPieceRep decode<GradedPieceRep>(const std::string& text);
template <> DKGradedPiece decode<DKGradedPiece>(const std::string& text);
template <> ArnoldPiece decode<ArnoldPiece>(const std::string& text);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// Character-table cache.

/// Overrides the cache directory for this process (the CLI --cache-dir flag).
/// An empty path disables the on-disk cache; nullopt drops the override.
void set_cache_directory(std::optional<std::filesystem::path> dir);

/// Flag override, then $REPSTAB_CACHE (empty disables), then $XDG_CACHE_HOME/repstab,
/// then ~/.cache/repstab. None when caching is disabled or no home is known.
std::optional<std::filesystem::path> cache_directory();

std::filesystem::path cache_file(const std::filesystem::path& dir, int n);

/// None when the file does not exist; CacheCorrupt when it exists but fails validation.
std::optional<CharacterTable> load_cached_table(const std::filesystem::path& dir, int n);

/// Best effort: returns false instead of throwing when the directory is not writable.
bool save_cached_table(const std::filesystem::path& dir, const CharacterTable& table);

}  // namespace repstab::store

#endif
