// Bit vectors and incremental Gaussian elimination over GF(2). Internal to
// the library; tests carry their own independent elimination.
#ifndef HYPERSIMP_SRC_GF2_HPP_
#define HYPERSIMP_SRC_GF2_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace hypersimp::detail {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  /// Index of the lowest set bit; size() * 64 if none.
  std::size_t lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return words_.size() * 64;
  }
  BitVector& operator^=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

template <typename Ids>
BitVector make_bits(std::size_t bits, const Ids& ids) {
  BitVector v(bits);
  for (auto i : ids) v.flip(static_cast<std::size_t>(i));
  return v;
}

/// Row-reduced span of inserted vectors that remembers, for every stored
/// row, which inserted vectors it is a combination of.
class Gf2Span {
 public:
  Gf2Span(std::size_t bits, std::size_t max_inputs) : bits_(bits), inputs_(max_inputs) {}

  /// Inserts input number `tag`; returns false (and stores nothing) if the
  /// vector is already in the span.
  bool insert(BitVector v, std::size_t tag) {
    BitVector combo(inputs_);
    combo.flip(tag);
    if (!reduce(v, combo)) return false;
    pivot_of_.emplace(v.lowest(), rows_.size());
    rows_.push_back({std::move(v), std::move(combo)});
    return true;
  }

  bool contains(BitVector v) const {
    BitVector combo(inputs_);
    return !reduce(v, combo);
  }

  /// Combination of inserted tags equal to v, or nullopt if v is outside the
  /// span.
  std::optional<BitVector> represent(BitVector v) const {
    BitVector combo(inputs_);
    if (reduce(v, combo)) return std::nullopt;
    return combo;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    BitVector bits;
    BitVector combo;
  };

  // Reduces v in place; returns true if a non-zero remainder is left.
  bool reduce(BitVector& v, BitVector& combo) const {
    while (true) {
      std::size_t p = v.lowest();
      if (p >= bits_) return false;
      auto it = pivot_of_.find(p);
      if (it == pivot_of_.end()) return true;
      v ^= rows_[it->second].bits;
      combo ^= rows_[it->second].combo;
    }
  }

  std::size_t bits_;
  std::size_t inputs_;
  std::vector<Row> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_of_;
};

}  // namespace hypersimp::detail

#endif  // HYPERSIMP_SRC_GF2_HPP_
