#include "nekrasov/partitions.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>

namespace nekrasov {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    total += parts_[i];
  }
  if (total > UINT32_MAX) throw std::invalid_argument("partition too large");
  size_ = static_cast<std::uint32_t>(total);
}

Partition Partition::conjugate() const {
  std::vector<std::uint32_t> columns(largest_part(), 0);
  for (const auto part : parts_) {
    for (std::uint32_t j = 0; j < part; ++j) ++columns[j];
  }
  return Partition(Unchecked{}, std::move(columns), size_);
}

Partitions::iterator::iterator(std::uint32_t n) : done_(false) {
  current_.size_ = n;
  if (n > 0) current_.parts_.push_back(n);
}

Partitions::iterator& Partitions::iterator::operator++() {
  auto& a = current_.parts_;
  // Rightmost part greater than one; everything after it is a 1.
  auto it = std::find(a.begin(), a.end(), 1u);
  if (it == a.begin()) {
    done_ = true;
    return *this;
  }
  const std::size_t i = static_cast<std::size_t>(it - a.begin()) - 1;
  std::uint32_t remainder = static_cast<std::uint32_t>(a.size() - i - 1) + 1;
  const std::uint32_t cap = --a[i];
  a.resize(i + 1);
  while (remainder > 0) {
    const auto part = std::min(cap, remainder);
    a.push_back(part);
    remainder -= part;
  }
  return *this;
}

std::vector<Partition> enumerate_partitions(std::uint32_t n) {
  std::vector<Partition> out;
  for (const auto& p : Partitions(n)) out.push_back(p);
  return out;
}

namespace {

std::mutex memo_mutex;
std::vector<BigInt> memo{BigInt(1)};

void extend_memo(std::uint32_t n) {
  // p(m) = sum_{j>=1} (-1)^{j+1} [p(m - j(3j-1)/2) + p(m - j(3j+1)/2)]
  for (std::uint32_t m = static_cast<std::uint32_t>(memo.size()); m <= n; ++m) {
    BigInt acc = 0;
    for (std::uint64_t j = 1;; ++j) {
      const std::uint64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const std::uint64_t g2 = j * (3 * j + 1) / 2;
      BigInt term = memo[m - g1];
      if (g2 <= m) term += memo[m - g2];
      if (j % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    memo.push_back(std::move(acc));
  }
}

}  // namespace

BigInt partition_count(std::uint32_t n) {
  std::lock_guard lock(memo_mutex);
  extend_memo(n);
  return memo[n];
}

std::vector<BigInt> partition_counts(std::uint32_t n) {
  std::lock_guard lock(memo_mutex);
  extend_memo(n);
  return {memo.begin(), memo.begin() + n + 1};
}

std::vector<std::uint32_t> hook_lengths(const Partition& lambda) {
  const auto rows = lambda.parts();
  const auto cols = lambda.conjugate();
  std::vector<std::uint32_t> hooks;
  hooks.reserve(lambda.size());
  for (std::uint32_t i = 0; i < rows.size(); ++i) {
    for (std::uint32_t j = 0; j < rows[i]; ++j) {
      const std::uint32_t arm = rows[i] - j - 1;
      const std::uint32_t leg = cols.parts()[j] - i - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

std::vector<std::uint32_t> trivial_leg_hooks(const Partition& lambda) {
  const auto rows = lambda.parts();
  const auto cols = lambda.conjugate();
  std::vector<std::uint32_t> hooks;
  hooks.reserve(lambda.largest_part());
  for (std::uint32_t j = 0; j < cols.length(); ++j) {
    // Bottom cell of column j sits in row cols[j] - 1 and has arm rows[i] - j - 1.
    const std::uint32_t i = cols.parts()[j] - 1;
    hooks.push_back(rows[i] - j);
  }
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

MultiplicityVector::MultiplicityVector(std::initializer_list<Entry> entries)
    : MultiplicityVector(std::vector<Entry>(entries)) {}

MultiplicityVector::MultiplicityVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.part < b.part; });
  for (const auto& e : entries) {
    if (e.part == 0) throw std::invalid_argument("multiplicity part sizes start at 1");
    if (e.count == 0) continue;
    if (!entries_.empty() && entries_.back().part == e.part) {
      entries_.back().count += e.count;
    } else {
      entries_.push_back(e);
    }
  }
}

std::uint32_t MultiplicityVector::operator()(std::uint32_t j) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), j,
                             [](const Entry& e, std::uint32_t v) { return e.part < v; });
  return (it != entries_.end() && it->part == j) ? it->count : 0;
}

std::uint64_t MultiplicityVector::weight() const noexcept {
  std::uint64_t w = 0;
  for (const auto& e : entries_) w += std::uint64_t{e.part} * e.count;
  return w;
}

std::uint64_t MultiplicityVector::total_count() const noexcept {
  std::uint64_t c = 0;
  for (const auto& e : entries_) c += e.count;
  return c;
}

MultiplicityVector multiplicities(const Partition& lambda) {
  std::vector<MultiplicityVector::Entry> entries;
  for (const auto part : lambda.parts()) {
    if (!entries.empty() && entries.back().part == part) {
      ++entries.back().count;
    } else {
      entries.push_back({part, 1});
    }
  }
  return MultiplicityVector(std::move(entries));
}

}  // namespace nekrasov
