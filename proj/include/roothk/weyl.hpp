#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "roothk/root_data.hpp"

namespace roothk {

struct GroupCap {
  static constexpr std::uint64_t kDefault = 5'000'000;
  std::uint64_t max_elements = kDefault;

  /// Reads ROOTHK_GROUP_CAP, falling back to the default. Throws
  /// InvalidSpec when the variable is set but not a positive integer.
  static GroupCap from_env();
};

/// Parses a positive decimal integer; throws InvalidSpec otherwise.
std::uint64_t parse_cap(const std::string& text);

Integer group_order_formula(const RootSystemSpec& spec);

/// Weyl group acting on simple-root coordinates. Elements, when generated,
/// are stored densely as signed bytes in breadth-first discovery order with
/// the identity first.
class WeylGroup {
 public:
  class ElementIterator;

  WeylGroup() = default;

  const RootDatum& datum() const { return datum_; }
  const std::vector<IntMatrix>& generators() const { return generators_; }
  const Integer& order() const { return order_; }
  std::size_t rank() const { return datum_.rank(); }

  bool exhaustive() const { return exhaustive_; }
  std::size_t size() const;

  /// Row-major entries of element `i`; requires exhaustive().
  std::span<const std::int8_t> element_data(std::size_t i) const;
  IntMatrix element(std::size_t i) const;

  ElementIterator begin() const;
  ElementIterator end() const;

  friend WeylGroup generators_only(const RootDatum& datum);
  friend WeylGroup generate_group(const RootDatum& datum, const GroupCap& cap);

 private:
  void require_exhaustive() const;

  RootDatum datum_;
  std::vector<IntMatrix> generators_;
  Integer order_;
  bool exhaustive_ = false;
  std::vector<std::int8_t> storage_;
};

class WeylGroup::ElementIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = IntMatrix;
  using difference_type = std::ptrdiff_t;

  ElementIterator() = default;
  ElementIterator(const WeylGroup* g, std::size_t i) : group_(g), index_(i) {}

  IntMatrix operator*() const { return group_->element(index_); }
  ElementIterator& operator++() {
    ++index_;
    return *this;
  }
  ElementIterator operator++(int) {
    auto tmp = *this;
    ++index_;
    return tmp;
  }
  friend bool operator==(const ElementIterator& a, const ElementIterator& b) {
    return a.index_ == b.index_;
  }

 private:
  const WeylGroup* group_ = nullptr;
  std::size_t index_ = 0;
};

/// Group carrying only its simple reflections and closed-form order.
WeylGroup generators_only(const RootDatum& datum);

/// Breadth-first closure of the simple reflections. Throws GroupTooLarge
/// when the closed-form order exceeds the cap.
WeylGroup generate_group(const RootDatum& datum, const GroupCap& cap = {});

/// Input range over every element: identity first, each exactly once.
/// Throws Error when the group was not generated exhaustively.
struct ElementRange {
  WeylGroup::ElementIterator first, last;
  WeylGroup::ElementIterator begin() const { return first; }
  WeylGroup::ElementIterator end() const { return last; }
};
ElementRange element_iter(const WeylGroup& group);

struct SignedPermutationReport {
  int n = 0;
  std::uint64_t element_count = 0;
  Integer expected_count;       // 2^n n!
  bool all_signed_permutations = false;
  std::uint64_t permutation_count = 0;  // elements with no minus signs
  std::uint64_t sign_change_count = 0;  // diagonal elements
  bool passed() const;
};

/// Every element of W(B_n), written in the orthonormal ambient basis, is a
/// signed permutation matrix; the group factors as 2^n sign changes times
/// n! permutations.
SignedPermutationReport check_signed_permutation_structure(
    int n, const GroupCap& cap = {});

/// Rank of (w - I) for a dense signed-byte matrix; exact.
std::size_t rank_minus_identity(std::span<const std::int8_t> w, std::size_t n);

}  // namespace roothk
