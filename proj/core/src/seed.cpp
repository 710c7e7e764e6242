#include "wst/seed.hpp"

namespace wst {

std::uint64_t splitmix64(std::uint64_t state) noexcept {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view scope,
                          std::uint64_t index) noexcept {
  std::uint64_t s = splitmix64(run_seed);
  s = splitmix64(s ^ fnv1a64(scope));
  s = splitmix64(s ^ index);
  return s;
}

double unit_from_bits(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace wst
