#pragma once

#include <cstdint>
#include <string_view>

#include "algraph/field.hpp"

namespace algraph {

/// splitmix64 finalizer; a bijection on 64-bit words.
constexpr u64 mix64(u64 z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed for a named subcomputation: hash(seed, tag).
constexpr u64 derive_seed(u64 seed, std::string_view tag) {
  u64 h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return mix64(seed ^ mix64(h));
}

constexpr u64 derive_seed(u64 seed, u64 index) { return mix64(seed ^ mix64(index + 1)); }

/// Counter-based substitution sigma: X -> Z_p. The value for a variable id
/// depends only on (seed, id), so runs are reproducible and order-independent.
class Substitution {
 public:
  Substitution(const PrimeField& field, u64 seed) : field_(&field), seed_(seed) {}

  /// Uniform element of Z_p for variable `id` (rejection sampling on 64-bit draws).
  FieldElement operator()(u64 id) const {
    const u64 p = field_->modulus();
    const u64 limit = UINT64_MAX - (UINT64_MAX % p);
    u64 counter = 0;
    for (;;) {
      u64 draw = mix64(seed_ ^ mix64(id * 0x100000001ULL + counter));
      if (draw < limit) return FieldElement{draw % p};
      ++counter;
    }
  }

  u64 seed() const { return seed_; }

 private:
  const PrimeField* field_;
  u64 seed_;
};

}  // namespace algraph
