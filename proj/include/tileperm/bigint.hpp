#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tileperm/errors.hpp"

namespace tileperm {

/// Unsigned big integer, base 1e9 limbs, little-endian.
///
/// Covers exactly what the counting formulas need: addition,
/// multiplication, exact division by a machine word, comparison
/// and decimal printing.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v) {  // NOLINT: implicit by design
    while (v > 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }

  friend bool operator<(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    return false;
  }

  BigUint& operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint32_t>(s % kBase);
      carry = s / kBase;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  friend BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint{};
    std::vector<std::uint64_t> acc(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur =
            acc[i + j] + static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
        acc[i + j] = cur % kBase;
        carry = cur / kBase;
      }
      std::size_t k = i + b.limbs_.size();
      while (carry) {
        std::uint64_t cur = acc[k] + carry;
        acc[k] = cur % kBase;
        carry = cur / kBase;
        ++k;
      }
    }
    BigUint r;
    r.limbs_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
  }

  /// Division by a machine word that must be exact.
  BigUint div_exact(std::uint32_t d) const {
    if (d == 0) fail(errc::out_of_range, "division by zero");
    BigUint q;
    q.limbs_.resize(limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint64_t cur = rem * kBase + limbs_[i];
      q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    if (rem != 0) fail(errc::out_of_range, "inexact division");
    q.trim();
    return q;
  }

  /// Value as u64; throws if it does not fit.
  std::uint64_t to_u64() const {
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (v > (UINT64_MAX - limbs_[i]) / kBase) fail(errc::out_of_range, "BigUint exceeds u64");
      v = v * kBase + limbs_[i];
    }
    return v;
  }

  std::string str() const {
    if (limbs_.empty()) return "0";
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000ull;
  std::vector<std::uint32_t> limbs_;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
};

/// Binomial coefficient C(n, k), exact.
inline BigUint binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return BigUint{};
  if (k > n - k) k = n - k;
  BigUint r{1};
  for (int i = 1; i <= k; ++i) {
    r = r * BigUint(static_cast<std::uint64_t>(n - k + i));
    r = r.div_exact(static_cast<std::uint32_t>(i));
  }
  return r;
}

}  // namespace tileperm
