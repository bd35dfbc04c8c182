#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fintop {

/// Hard ceiling on the number of points a mask can address.
inline constexpr std::size_t kMaskBits = 24;

/// A subset of an n-point space; bit i is set iff point i belongs to the subset.
/// The point count lives with the space, so complement takes the full mask.
class SubsetMask {
public:
  using value_type = std::uint32_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(value_type bits) : bits_(bits) {}

  static constexpr SubsetMask full(std::size_t n) {
    return SubsetMask{n == 0 ? 0u : static_cast<value_type>((std::uint64_t{1} << n) - 1)};
  }
  static constexpr SubsetMask singleton(std::size_t point) {
    return SubsetMask{value_type{1} << point};
  }

  constexpr value_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t point) const { return (bits_ >> point) & 1u; }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool superset_of(SubsetMask other) const { return other.subset_of(*this); }
  constexpr bool intersects(SubsetMask other) const { return (bits_ & other.bits_) != 0; }

  /// Complement relative to `universe`.
  constexpr SubsetMask complement(SubsetMask universe) const {
    return SubsetMask{universe.bits_ & ~bits_};
  }
  constexpr SubsetMask with(std::size_t point) const {
    return SubsetMask{bits_ | (value_type{1} << point)};
  }
  constexpr SubsetMask without(std::size_t point) const {
    return SubsetMask{bits_ & ~(value_type{1} << point)};
  }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask{bits_ | o.bits_}; }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask{bits_ & o.bits_}; }
  /// Set difference.
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask{bits_ & ~o.bits_}; }
  constexpr SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }
  constexpr SubsetMask& operator&=(SubsetMask o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const SubsetMask&) const = default;

  /// Visits the indices of set bits in increasing order.
  template <class Fn>
  constexpr void for_each_point(Fn&& fn) const {
    for (value_type rest = bits_; rest != 0; rest &= rest - 1) {
      fn(static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }

  std::vector<std::size_t> points() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each_point([&](std::size_t p) { out.push_back(p); });
    return out;
  }

private:
  value_type bits_ = 0;
};

/// Number of subsets of an n-point set.
constexpr std::uint64_t subset_count(std::size_t n) { return std::uint64_t{1} << n; }

/// Calls fn for every subset of the n-point set in increasing mask order.
template <class Fn>
void for_each_subset(std::size_t n, Fn&& fn) {
  const std::uint64_t total = subset_count(n);
  for (std::uint64_t b = 0; b < total; ++b) fn(SubsetMask{static_cast<SubsetMask::value_type>(b)});
}

/// Calls fn for every S with lower ⊆ S ⊆ upper, in increasing mask order.
template <class Fn>
void for_each_between(SubsetMask lower, SubsetMask upper, Fn&& fn) {
  if (!lower.subset_of(upper)) return;
  const auto free = (upper - lower).bits();
  // Standard submask walk, ascending.
  SubsetMask::value_type sub = 0;
  while (true) {
    fn(SubsetMask{lower.bits() | sub});
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

}  // namespace fintop
