#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ncng {

using Elem = std::uint32_t;

/// Bit-packed set over element indices 0..order-1.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

ElementSet make_set(std::size_t order, const std::vector<Elem>& members);
std::vector<Elem> to_vector(const ElementSet& set);
std::size_t hash_value(const ElementSet& set);

/// Lexicographic comparison of the sorted member lists.
std::strong_ordering compare_members(const ElementSet& a, const ElementSet& b);

template <class F>
void for_each_member(const ElementSet& s, F&& f) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) f(static_cast<Elem>(i));
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return hash_value(s); }
};

/// A subgroup stored as its membership set. Closure is a precondition of
/// construction; callers obtain instances from closure(), center(), etc.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  explicit SubgroupSet(ElementSet members);

  const ElementSet& members() const { return members_; }
  std::size_t order() const { return order_; }
  std::size_t ambient_order() const { return members_.size(); }
  bool contains(Elem g) const { return members_.test(g); }
  std::vector<Elem> elements() const { return to_vector(members_); }

  bool is_subset_of(const SubgroupSet& other) const { return members_.is_subset_of(other.members_); }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == members_.size(); }

  SubgroupSet intersect(const SubgroupSet& other) const {
    return SubgroupSet(members_ & other.members_);
  }

  // Cached structural flags; filled by the predicates in subgroups.hpp.
  std::optional<bool>& normal_cache() const { return normal_; }
  std::optional<bool>& abelian_cache() const { return abelian_; }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.members_ == b.members_;
  }
  /// Canonical order: by subgroup order, then lexicographically by members.
  friend std::strong_ordering operator<=>(const SubgroupSet& a, const SubgroupSet& b);

 private:
  ElementSet members_;
  std::size_t order_ = 0;
  mutable std::optional<bool> normal_;
  mutable std::optional<bool> abelian_;
};

}  // namespace ncng
