#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "modhyp/arith.hpp"

namespace modhyp {

/// Dense bit-indexed subset of Z/nZ with a cached cardinality.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(u64 modulus);

  /// Every residue in [0, modulus).
  static ResidueSet full(u64 modulus);

  u64 modulus() const noexcept { return modulus_; }
  u64 size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool saturated() const noexcept { return count_ == modulus_; }

  bool contains(u64 v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }

  /// Inserts v (must be < modulus); returns true if it was not yet present.
  bool insert(u64 v) noexcept {
    auto& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    const bool fresh = (w & bit) == 0;
    w |= bit;
    count_ += fresh;
    return fresh;
  }

  /// In-place union with a set of the same modulus.
  ResidueSet& unite(const ResidueSet& other);

  /// { -v mod n : v in this }.
  ResidueSet negated() const;

  /// Residues of [0, n) not in this set.
  ResidueSet complement() const;

  /// Members in ascending order.
  std::vector<u64> members() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const ResidueSet& l, const ResidueSet& r) {
    return l.modulus_ == r.modulus_ && l.count_ == r.count_ && l.words_ == r.words_;
  }

 private:
  void recount() noexcept;

  u64 modulus_ = 0;
  u64 count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace modhyp
