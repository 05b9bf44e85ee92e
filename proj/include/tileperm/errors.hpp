#pragma once

#include <stdexcept>
#include <string>

namespace tileperm {

enum class errc {
  crossing_diagonals,
  invalid_diagonal,
  duplicate_diagonal,
  not_flippable,
  not_present,
  rank_too_large,
  out_of_range,
  bad_partition,
  rank_mismatch,
  unsupported_alpha_one,
  not_minimalist,
  malformed_input,
  non_planar,
  bad_endpoints,
  not_rhombic,
  no_bouquet_at,
  not_applicable,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::crossing_diagonals: return "CrossingDiagonals";
    case errc::invalid_diagonal: return "InvalidDiagonal";
    case errc::duplicate_diagonal: return "DuplicateDiagonal";
    case errc::not_flippable: return "NotFlippable";
    case errc::not_present: return "NotPresent";
    case errc::rank_too_large: return "RankTooLarge";
    case errc::out_of_range: return "OutOfRange";
    case errc::bad_partition: return "BadPartition";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::unsupported_alpha_one: return "UnsupportedAlphaOne";
    case errc::not_minimalist: return "NotMinimalist";
    case errc::malformed_input: return "MalformedInput";
    case errc::non_planar: return "NonPlanar";
    case errc::bad_endpoints: return "BadEndpoints";
    case errc::not_rhombic: return "NotRhombic";
    case errc::no_bouquet_at: return "NoBouquetAt";
    case errc::not_applicable: return "NotApplicable";
  }
  return "UnknownError";
}

/// Exception carrying a structured error code alongside the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace tileperm
