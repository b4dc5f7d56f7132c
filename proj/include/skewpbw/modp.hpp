#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "skewpbw/laurent_poly.hpp"

namespace skewpbw {

/// Element of the prime field F_P with P = 2^62 - 57.
class ModP {
 public:
  static constexpr std::uint64_t kPrime = 4611686018427387847ULL;

  ModP() = default;
  ModP(long long v) : v_(reduce_signed(v)) {}  // NOLINT(google-explicit-constructor)
  explicit ModP(const Integer& v) {
    Integer r = v % Integer(kPrime);
    if (r < 0) r += kPrime;
    v_ = static_cast<std::uint64_t>(r);
  }
  static ModP from_raw(std::uint64_t v) {
    ModP m;
    m.v_ = v % kPrime;
    return m;
  }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator-() const { return from_raw(v_ == 0 ? 0 : kPrime - v_); }
  ModP& operator+=(ModP o) {
    v_ += o.v_;
    if (v_ >= kPrime) v_ -= kPrime;
    return *this;
  }
  ModP& operator-=(ModP o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + kPrime - o.v_;
    return *this;
  }
  ModP& operator*=(ModP o) {
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % kPrime);
    return *this;
  }
  ModP& operator/=(ModP o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    ModP r(1);
    ModP b = *this;
    auto n = static_cast<unsigned long long>(e);
    while (n != 0) {
      if ((n & 1ULL) != 0) r *= b;
      b *= b;
      n >>= 1ULL;
    }
    return r;
  }
  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(static_cast<long long>(kPrime - 2));
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  static std::uint64_t reduce_signed(long long v) {
    long long r = v % static_cast<long long>(kPrime);
    if (r < 0) r += static_cast<long long>(kPrime);
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t v_ = 0;
};

inline bool is_zero(const ModP& a) { return a.is_zero(); }
inline void simplify(ModP&) {}

/// Uniform nonzero field element drawn from raw engine output (portable across libraries).
inline ModP random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    std::uint64_t v = rng() >> 2U;
    if (v != 0 && v < ModP::kPrime) return ModP::from_raw(v);
  }
}

}  // namespace skewpbw
