#ifndef NEKRASOV_PARTITIONS_HPP
#define NEKRASOV_PARTITIONS_HPP

#include "nekrasov/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace nekrasov {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<std::uint32_t> parts);
  Partition(std::initializer_list<std::uint32_t> parts)
      : Partition(std::vector<std::uint32_t>(parts)) {}

  std::span<const std::uint32_t> parts() const noexcept { return parts_; }
  std::uint32_t size() const noexcept { return size_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint32_t largest_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  friend class Partitions;
  struct Unchecked {};
  Partition(Unchecked, std::vector<std::uint32_t> parts, std::uint32_t size)
      : parts_(std::move(parts)), size_(size) {}

  std::vector<std::uint32_t> parts_;
  std::uint32_t size_ = 0;
};

/// Lazily generated partitions of n in reverse-lexicographic order,
/// e.g. for n = 4: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
///
///   for (const Partition& p : Partitions(n)) { ... }
///
/// Only one partition is materialised at a time.
class Partitions {
 public:
  explicit Partitions(std::uint32_t n) : n_(n) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const noexcept { return done_; }

   private:
    friend class Partitions;
    explicit iterator(std::uint32_t n);
    Partition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  std::uint32_t n_;
};

/// Every partition of n, materialised.
std::vector<Partition> enumerate_partitions(std::uint32_t n);

/// p(n), via Euler's pentagonal-number recurrence. The memo table is
/// shared and mutex-guarded; concurrent calls are safe.
BigInt partition_count(std::uint32_t n);

/// p(0), ..., p(n).
std::vector<BigInt> partition_counts(std::uint32_t n);

/// One hook length per cell, sorted in decreasing order.
std::vector<std::uint32_t> hook_lengths(const Partition& lambda);

/// Hook lengths of the cells with leg length 0 (the bottom cell of each
/// column), sorted in decreasing order. There are largest_part() of them.
std::vector<std::uint32_t> trivial_leg_hooks(const Partition& lambda);

/// Sparse multiplicity view k_j = #{i : lambda_i = j}; only j with k_j > 0
/// are stored, in increasing j.
class MultiplicityVector {
 public:
  struct Entry {
    std::uint32_t part;
    std::uint32_t count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  MultiplicityVector() = default;
  /// Entries with zero count are dropped; duplicate parts are merged.
  MultiplicityVector(std::initializer_list<Entry> entries);
  explicit MultiplicityVector(std::vector<Entry> entries);

  std::span<const Entry> entries() const noexcept { return entries_; }
  /// k_j; zero for any j not present.
  std::uint32_t operator()(std::uint32_t j) const noexcept;
  /// sum_j j * k_j.
  std::uint64_t weight() const noexcept;
  /// sum_j k_j, i.e. the number of parts.
  std::uint64_t total_count() const noexcept;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

 private:
  std::vector<Entry> entries_;
};

MultiplicityVector multiplicities(const Partition& lambda);

}  // namespace nekrasov

#endif  // NEKRASOV_PARTITIONS_HPP
