#include "modhyp/residue_set.hpp"

#include <numeric>

#include "modhyp/errors.hpp"

namespace modhyp {

ResidueSet::ResidueSet(u64 modulus) : modulus_(modulus), words_((modulus + 63) / 64, 0) {}

ResidueSet ResidueSet::full(u64 modulus) {
  ResidueSet s(modulus);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (modulus % 64) s.words_.back() = (std::uint64_t{1} << (modulus % 64)) - 1;
  s.count_ = modulus;
  return s;
}

ResidueSet& ResidueSet::unite(const ResidueSet& other) {
  if (other.modulus_ != modulus_) throw InvalidArgument("ResidueSet::unite: modulus mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

ResidueSet ResidueSet::negated() const {
  ResidueSet out(modulus_);
  for (u64 v : members()) out.insert(v == 0 ? 0 : modulus_ - v);
  return out;
}

ResidueSet ResidueSet::complement() const {
  ResidueSet out = full(modulus_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  out.recount();
  return out;
}

std::vector<u64> ResidueSet::members() const {
  std::vector<u64> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<u64>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void ResidueSet::recount() noexcept {
  count_ = std::accumulate(words_.begin(), words_.end(), u64{0},
                           [](u64 acc, std::uint64_t w) { return acc + std::popcount(w); });
}

}  // namespace modhyp
