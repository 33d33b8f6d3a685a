// Error codes shared by the whole library. Every failure the library can
// report carries one of these codes plus a human-readable message; some also
// carry an index (pivot step, parse line, offending matrix index).
#pragma once

#include <stdexcept>
#include <string>

namespace psdsplit {

enum class errc {
    invalid_argument,
    non_square,
    asymmetric,
    dimension_mismatch,
    parse_error,
    unsupported_field,
    io_error,
    not_psd,
    pivot_breakdown,
    no_convergence,
    mixed_inputs,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, std::string message, long index = -1)
        : std::runtime_error(std::move(message)), code_(code), index_(index) {}

    errc code() const noexcept { return code_; }

    // Meaning depends on code: pivot index for not_psd, elimination step for
    // pivot_breakdown, 1-based line for parse_error, -1 when not applicable.
    long index() const noexcept { return index_; }

  private:
    errc code_;
    long index_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument: return "InvalidArgument";
        case errc::non_square: return "NonSquare";
        case errc::asymmetric: return "AsymmetricBeyondTolerance";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::parse_error: return "ParseError";
        case errc::unsupported_field: return "UnsupportedField";
        case errc::io_error: return "IoError";
        case errc::not_psd: return "NotPsd";
        case errc::pivot_breakdown: return "PivotBreakdown";
        case errc::no_convergence: return "NoConvergence";
        case errc::mixed_inputs: return "MixedInputs";
    }
    return "Unknown";
}

}  // namespace psdsplit
