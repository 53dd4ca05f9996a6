#ifndef REPSTAB_CORE_HPP
#define REPSTAB_CORE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace repstab {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class Parity { even, odd };

inline Parity parity_of(long value) { return (value % 2 == 0) ? Parity::even : Parity::odd; }
inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }
Parity parse_parity(const std::string& text);

/// Every failure mode the library reports. The CLI maps these onto exit codes.
enum class ErrorCode {
    InvalidArgument,
    InvalidPartition,
    PaddingUndefined,
    RankTooLarge,
    ShapeMismatch,
    RankMismatch,
    NotACharacter,
    CacheCorrupt,
    EmptyTable,
    OutOfRange,
    TableTooShallow,
    NotFISharp,
    InconsistentTable,
    NonHomogeneous,
    ScaleExceeded,
    ParseError,
    SchemaError,
    InvariantViolation,
    VerificationFailed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Converts an exact integer to int64, throwing if it does not fit.
std::int64_t to_int64(const BigInt& value);

BigInt factorial(int n);
BigInt binomial(long n, long k);

}  // namespace repstab

#endif
