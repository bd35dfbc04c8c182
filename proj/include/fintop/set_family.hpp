#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "fintop/subset_mask.hpp"

namespace fintop {

/// A duplicate-free collection of subsets of an n-point set, kept sorted by mask value,
/// with a dense bitmap over all 2^n masks for constant-time membership.
class SetFamily {
public:
  SetFamily() = default;

  explicit SetFamily(std::size_t n) : n_(n), present_(words_for(n), 0) {}

  SetFamily(std::size_t n, std::vector<SubsetMask> members) : SetFamily(n) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
    for (auto m : members_) mark(m);
  }

  SetFamily(std::size_t n, std::initializer_list<SubsetMask> members)
      : SetFamily(n, std::vector<SubsetMask>(members)) {}

  /// Collects every subset of the n-point set satisfying pred, in mask order.
  template <class Pred>
  static SetFamily filter(std::size_t n, Pred&& pred) {
    SetFamily out(n);
    for_each_subset(n, [&](SubsetMask s) {
      if (pred(s)) {
        out.members_.push_back(s);
        out.mark(s);
      }
    });
    return out;
  }

  std::size_t universe_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(SubsetMask m) const {
    const auto b = m.bits();
    if (static_cast<std::uint64_t>(b) >= subset_count(n_)) return false;
    return (present_[b >> 6] >> (b & 63)) & 1u;
  }

  std::span<const SubsetMask> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// True iff every member of this family is a member of other.
  bool subset_of(const SetFamily& other) const {
    return std::all_of(members_.begin(), members_.end(),
                       [&](SubsetMask m) { return other.contains(m); });
  }

  bool operator==(const SetFamily& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }

private:
  static std::size_t words_for(std::size_t n) {
    return static_cast<std::size_t>((subset_count(n) + 63) / 64);
  }
  void mark(SubsetMask m) { present_[m.bits() >> 6] |= std::uint64_t{1} << (m.bits() & 63); }

  std::size_t n_ = 0;
  std::vector<SubsetMask> members_;
  std::vector<std::uint64_t> present_;
};

}  // namespace fintop
