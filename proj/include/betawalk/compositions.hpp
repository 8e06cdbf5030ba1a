#pragma once

// Weak compositions: ordered tuples of non-negative integers with a fixed sum,
// streamed in colexicographic order (last part varies slowest).

#include <betawalk/exact.hpp>

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace betawalk {

using Rank = std::uint64_t;

/// C(total + parts - 1, parts - 1).
inline BigInt count_weak_compositions(unsigned total, unsigned parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  return binomial(static_cast<long>(total + parts - 1), static_cast<long>(parts - 1));
}

/// Same count as a machine integer; throws if it does not fit in Rank.
inline Rank count_weak_compositions_u64(unsigned total, unsigned parts) {
  const BigInt c = count_weak_compositions(total, parts);
  static_assert(sizeof(unsigned long) == sizeof(Rank));
  if (!c.fits_ulong_p()) throw std::overflow_error("composition count does not fit in 64 bits");
  return c.get_ui();
}

class Composition {
 public:
  Composition(unsigned total, unsigned length) : parts_(length, 0), total_(total) {
    if (length == 0 && total > 0) throw std::invalid_argument("composition of a positive total needs at least one part");
    if (length > 0) parts_.front() = total;
  }
  explicit Composition(std::vector<unsigned> parts) : parts_(std::move(parts)), total_(0) {
    for (auto p : parts_) total_ += p;
  }

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned total() const { return total_; }
  std::size_t size() const { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }

  /// Advance to the colex successor; false (and unchanged) at the last one.
  bool next() {
    const std::size_t len = parts_.size();
    std::size_t i = 0;
    while (i < len && parts_[i] == 0) ++i;
    if (i + 1 >= len) return false;
    const unsigned v = parts_[i];
    parts_[i] = 0;
    parts_[i + 1] += 1;
    parts_[0] = v - 1;
    return true;
  }

  /// Every part doubled: a composition of 2*total.
  Composition doubled() const {
    std::vector<unsigned> d(parts_);
    for (auto& p : d) p *= 2;
    return Composition(std::move(d));
  }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned total_;
};

/// Composition at position `rank` of the colex stream.
inline Composition unrank_weak_composition(unsigned total, unsigned parts, Rank rank) {
  if (parts == 0) {
    if (total > 0 || rank > 0) throw std::out_of_range("unrank: empty composition space");
    return Composition(0, 0);
  }
  std::vector<unsigned> out(parts, 0);
  unsigned remaining = total;
  for (unsigned pos = parts; pos-- > 1;) {
    // Blocks ordered by ascending value at `pos`.
    unsigned v = 0;
    for (;; ++v) {
      if (v > remaining) throw std::out_of_range("unrank: rank beyond composition count");
      const Rank block = count_weak_compositions_u64(remaining - v, pos);
      if (rank < block) break;
      rank -= block;
    }
    out[pos] = v;
    remaining -= v;
  }
  if (rank != 0) throw std::out_of_range("unrank: rank beyond composition count");
  out[0] = remaining;
  return Composition(std::move(out));
}

/// Inverse of unrank_weak_composition.
inline Rank rank_weak_composition(const Composition& c) {
  Rank rank = 0;
  unsigned remaining = c.total();
  for (std::size_t pos = c.size(); pos-- > 1;) {
    for (unsigned v = 0; v < c[pos]; ++v) rank += count_weak_compositions_u64(remaining - v, static_cast<unsigned>(pos));
    remaining -= c[pos];
  }
  return rank;
}

/// Input range over the compositions of `total` into `parts` parts, or over a
/// rank window [first, first + count) of that stream. Holds one Composition.
class WeakCompositions {
 public:
  WeakCompositions(unsigned total, unsigned parts) : total_(total), parts_(parts) {
    if (parts == 0 && total > 0) throw std::invalid_argument("weak compositions: zero parts with positive total");
    count_ = count_weak_compositions_u64(total, parts);
  }
  WeakCompositions(unsigned total, unsigned parts, Rank first, Rank count) : WeakCompositions(total, parts) {
    if (first > count_ || count > count_ - first) throw std::out_of_range("weak compositions: rank window out of range");
    first_ = first;
    count_ = count;
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using reference = const Composition&;
    using pointer = const Composition*;

    iterator() = default;
    iterator(Composition start, Rank remaining) : current_(std::move(start)), remaining_(remaining) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      if (--remaining_ > 0) current_.next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, std::default_sentinel_t) { return a.remaining_ == 0; }

   private:
    Composition current_{0, 0};
    Rank remaining_ = 0;
  };

  iterator begin() const {
    if (count_ == 0) return {};
    return iterator(unrank_weak_composition(total_, parts_, first_), count_);
  }
  std::default_sentinel_t end() const { return {}; }
  Rank size() const { return count_; }

 private:
  unsigned total_;
  unsigned parts_;
  Rank first_ = 0;
  Rank count_ = 0;
};

}  // namespace betawalk
