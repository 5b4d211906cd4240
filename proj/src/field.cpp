#include "algraph/field.hpp"

#include <stdexcept>
#include <string>

#include "algraph/errors.hpp"

namespace algraph {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 p) : p_(p), mersenne_(p == kMersenne61) {
  if (p >= (u64{1} << 62) || !is_prime_u64(p)) {
    throw std::invalid_argument("field modulus must be a prime below 2^62, got " +
                                std::to_string(p));
  }
}

FieldElement PrimeField::from_int(i64 v) const {
  if (v >= 0) return from_u64(static_cast<u64>(v));
  // -(v+1) avoids overflow at INT64_MIN.
  u64 mag = static_cast<u64>(-(v + 1)) + 1;
  return neg(from_u64(mag));
}

FieldElement PrimeField::pow(FieldElement a, u64 e) const {
  FieldElement r = one();
  if (p_ == 1) return zero();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.is_zero()) throw ZeroInverse();
  return pow(a, p_ - 2);
}

i64 PrimeField::to_signed(FieldElement a) const {
  if (a.value > p_ / 2) return -static_cast<i64>(p_ - a.value);
  return static_cast<i64>(a.value);
}

}  // namespace algraph
