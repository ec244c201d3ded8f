#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rwg {

// Fixed-universe bitset over an arrangement's flat indexing.
class FlatSet {
 public:
  FlatSet() = default;
  explicit FlatSet(int universe) : universe_(universe), bits_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  int universe() const { return universe_; }

  void set(int k) { bits_[static_cast<std::size_t>(k >> 6)] |= std::uint64_t{1} << (k & 63); }
  void flip(int k) { bits_[static_cast<std::size_t>(k >> 6)] ^= std::uint64_t{1} << (k & 63); }
  bool test(int k) const { return (bits_[static_cast<std::size_t>(k >> 6)] >> (k & 63)) & 1u; }

  int count() const {
    int c = 0;
    for (auto b : bits_) c += std::popcount(b);
    return c;
  }
  bool none() const {
    for (auto b : bits_)
      if (b) return false;
    return true;
  }

  FlatSet& operator^=(const FlatSet& o) {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] ^= o.bits_[k];
    return *this;
  }
  friend FlatSet operator^(FlatSet a, const FlatSet& b) { return a ^= b; }

  // |a xor b| without materializing it.
  friend int xor_count(const FlatSet& a, const FlatSet& b) {
    int c = 0;
    for (std::size_t k = 0; k < a.bits_.size(); ++k) c += std::popcount(a.bits_[k] ^ b.bits_[k]);
    return c;
  }

  // c == a xor b.
  friend bool is_xor_of(const FlatSet& c, const FlatSet& a, const FlatSet& b) {
    if (c.universe_ != a.universe_ || a.universe_ != b.universe_) return false;
    for (std::size_t k = 0; k < c.bits_.size(); ++k)
      if (c.bits_[k] != (a.bits_[k] ^ b.bits_[k])) return false;
    return true;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int k = 0; k < universe_; ++k)
      if (test(k)) out.push_back(k);
    return out;
  }

  friend bool operator==(const FlatSet&, const FlatSet&) = default;
  friend auto operator<=>(const FlatSet&, const FlatSet&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace rwg
