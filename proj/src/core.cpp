#include "repstab/core.hpp"

namespace repstab {

Parity parse_parity(const std::string& text) {
    if (text == "even") return Parity::even;
    if (text == "odd") return Parity::odd;
    throw Error(ErrorCode::InvalidArgument, "parity must be 'even' or 'odd', got '" + text + "'");
}

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::PaddingUndefined: return "PaddingUndefined";
        case ErrorCode::RankTooLarge: return "RankTooLarge";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::RankMismatch: return "RankMismatch";
        case ErrorCode::NotACharacter: return "NotACharacter";
        case ErrorCode::CacheCorrupt: return "CacheCorrupt";
        case ErrorCode::EmptyTable: return "EmptyTable";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::TableTooShallow: return "TableTooShallow";
        case ErrorCode::NotFISharp: return "NotFISharp";
        case ErrorCode::InconsistentTable: return "InconsistentTable";
        case ErrorCode::NonHomogeneous: return "NonHomogeneous";
        case ErrorCode::ScaleExceeded: return "ScaleExceeded";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

std::int64_t to_int64(const BigInt& value) {
    if (!value.fits_slong_p()) {
        throw Error(ErrorCode::OutOfRange, "integer " + value.get_str() + " exceeds 64 bits");
    }
    return value.get_si();
}

BigInt factorial(int n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return result;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

}  // namespace repstab
