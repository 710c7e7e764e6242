#pragma once

#include <cstdint>
#include <string_view>

namespace wst {

/// One step of the splitmix64 output function (finalizer included).
std::uint64_t splitmix64(std::uint64_t state) noexcept;

/// Mixes (run_seed, scope string, index) into a 64-bit seed.
///
/// The scope is hashed with FNV-1a 64, then run_seed, scope hash and index
/// are folded through three splitmix64 rounds. Equal inputs give equal
/// seeds; any differing input flips the output with overwhelming
/// probability. Scopes are plain strings: callers namespace them, e.g.
/// "baseline/<query_id>" vs "episode/<query_id>/round/12".
std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view scope,
                          std::uint64_t index) noexcept;

/// Canonical [0,1) double from a 64-bit word (top 53 bits).
double unit_from_bits(std::uint64_t bits) noexcept;

}  // namespace wst
