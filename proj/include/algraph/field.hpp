#pragma once

#include <cstdint>
#include <ostream>

namespace algraph {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Residue in [0, p). Arithmetic lives on PrimeField, which knows p.
struct FieldElement {
  u64 value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(u64 v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr bool operator==(FieldElement a, FieldElement b) = default;
  friend std::ostream& operator<<(std::ostream& os, FieldElement a) {
    return os << a.value;
  }
};

/// Arithmetic modulo a prime p < 2^62. The Mersenne prime 2^61 - 1 is the
/// default and gets a shift-and-add reduction; any other prime falls back to
/// 128-bit remainder.
class PrimeField {
 public:
  static constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

  /// Throws std::invalid_argument unless p is a prime in [2, 2^62).
  explicit PrimeField(u64 p = kMersenne61);

  u64 modulus() const { return p_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }

  /// Reduces an arbitrary unsigned or signed integer into the field.
  FieldElement from_u64(u64 v) const { return FieldElement{v % p_}; }
  FieldElement from_int(i64 v) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    u64 s = a.value + b.value;
    return FieldElement{s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return FieldElement{a.value >= b.value ? a.value - b.value
                                           : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const {
    return FieldElement{a.value == 0 ? 0 : p_ - a.value};
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    unsigned __int128 t = static_cast<unsigned __int128>(a.value) * b.value;
    if (mersenne_) {
      u64 lo = static_cast<u64>(t) & kMersenne61;
      u64 hi = static_cast<u64>(t >> 61);
      u64 r = lo + hi;
      return FieldElement{r >= kMersenne61 ? r - kMersenne61 : r};
    }
    return FieldElement{static_cast<u64>(t % p_)};
  }

  FieldElement pow(FieldElement a, u64 e) const;

  /// a^(p-2). Throws ZeroInverse for a = 0.
  FieldElement inv(FieldElement a) const;

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// Signed representative in (-p/2, p/2], handy for printing small values.
  i64 to_signed(FieldElement a) const;

 private:
  u64 p_;
  bool mersenne_;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(u64 n);

}  // namespace algraph
