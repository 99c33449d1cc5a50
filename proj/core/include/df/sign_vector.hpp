#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "df/errors.hpp"

namespace df {

/// An element of {-1,+1}^A for an ordered finite set A, stored as flip bits
/// (bit set means coordinate -1). Group law is the pointwise product.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t size) : flips_(size, 0) {}

  static SignVector all_minus(std::size_t size) {
    SignVector v(size);
    for (auto& f : v.flips_) f = 1;
    return v;
  }

  /// Builds from a bit mask over the first `size` coordinates.
  static SignVector from_mask(std::uint64_t mask, std::size_t size) {
    SignVector v(size);
    for (std::size_t i = 0; i < size; ++i) v.flips_[i] = (mask >> i) & 1U;
    return v;
  }

  std::size_t size() const { return flips_.size(); }
  int operator[](std::size_t i) const { return flips_[i] ? -1 : 1; }
  bool flipped(std::size_t i) const { return flips_[i] != 0; }
  void set(std::size_t i, int sign) { flips_[i] = sign < 0 ? 1 : 0; }
  void flip(std::size_t i) { flips_[i] ^= 1; }

  bool is_identity() const {
    for (auto f : flips_)
      if (f) return false;
    return true;
  }
  bool is_all_minus() const {
    for (auto f : flips_)
      if (!f) return false;
    return true;
  }

  /// Indices of the -1 coordinates, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flips_.size(); ++i)
      if (flips_[i]) out.push_back(i);
    return out;
  }

  /// Mask of the first 64 coordinates.
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < flips_.size() && i < 64; ++i)
      if (flips_[i]) m |= std::uint64_t{1} << i;
    return m;
  }

  SignVector operator*(const SignVector& other) const {
    SignVector out(*this);
    for (std::size_t i = 0; i < flips_.size(); ++i) out.flips_[i] ^= other.flips_[i];
    return out;
  }

  /// Renders as a string of '+' and '-' characters.
  std::string str() const {
    std::string s;
    for (auto f : flips_) s.push_back(f ? '-' : '+');
    return s;
  }
  /// Inverse of str(); also accepts '1' for + and '0' or 'x' for -.
  static SignVector parse(const std::string& s) {
    SignVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char c = s[i];
      if (c == '-' || c == '0' || c == 'x') {
        v.flips_[i] = 1;
      } else if (c != '+' && c != '1') {
        throw ParseError("sign vector: unexpected character '" + std::string(1, c) + "'");
      }
    }
    return v;
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::uint8_t> flips_;
};

}  // namespace df
