#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "kcenter/core/error.hpp"
#include "kcenter/core/types.hpp"

namespace kcenter {

/// Fixed-length bit vector over 64-bit words. Bits past size() are always zero.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size, bool value = false)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
    trim();
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  bool any() const noexcept { return !none(); }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }

  /// True iff (*this & other) has a set bit; no temporary is built.
  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(w * kWordBits + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim() noexcept {
    if (const std::size_t tail = size_ % kWordBits; tail != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << tail) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Membership set over [0, n) with cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : bits_(n) {}

  static VertexSet full(std::size_t n) {
    VertexSet s;
    s.bits_ = Bitset(n, true);
    s.count_ = n;
    return s;
  }
  static VertexSet of(std::size_t n, std::span<const Vertex> members) {
    VertexSet s(n);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  static VertexSet of(std::size_t n, std::initializer_list<Vertex> members) {
    return of(n, std::span<const Vertex>(members.begin(), members.size()));
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool contains(Vertex v) const noexcept { return v < bits_.size() && bits_.test(v); }

  void insert(Vertex v) {
    require(v < bits_.size(), ErrorCode::InvalidArgument, "vertex outside set universe");
    if (!bits_.test(v)) {
      bits_.set(v);
      ++count_;
    }
  }
  void erase(Vertex v) noexcept {
    if (contains(v)) {
      bits_.reset(v);
      --count_;
    }
  }

  /// Members in increasing vertex order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    bits_.for_each_set([&](std::size_t i) { out.push_back(static_cast<Vertex>(i)); });
    return out;
  }

  /// Smallest member; the set must be non-empty.
  Vertex first() const {
    require(!empty(), ErrorCode::EmptyRegion, "first() on empty vertex set");
    Vertex result = 0;
    bool found = false;
    bits_.for_each_set([&](std::size_t i) {
      if (!found) {
        result = static_cast<Vertex>(i);
        found = true;
      }
    });
    return result;
  }

  const Bitset& bits() const noexcept { return bits_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

 private:
  Bitset bits_;
  std::size_t count_ = 0;
};

}  // namespace kcenter
