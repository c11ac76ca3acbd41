/*
 * Copyright 2026 The covred Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COVRED_BITSET_HPP
#define COVRED_BITSET_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace covred {

/// Dense fixed-width bit vector over indices [0, size).
///
/// The tag parameter keeps object sets and cover sets apart at compile time;
/// both share the same word-parallel implementation. Bits beyond size() are
/// always zero, so word-wise comparisons and popcounts are exact.
template <class Tag>
class BitSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_(word_count(size), 0) {}
  BitSet(std::size_t size, std::initializer_list<std::size_t> bits) : BitSet(size) {
    for (std::size_t b : bits) set(b);
  }

  static BitSet full(std::size_t size) {
    BitSet s(size);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
  }

  static BitSet from_words(std::size_t size, std::span<const Word> words) {
    assert(words.size() == word_count(size));
    BitSet s(size);
    std::copy(words.begin(), words.end(), s.words_.begin());
    s.trim();
    return s;
  }

  static constexpr std::size_t word_count(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  bool is_subset_of(const BitSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const BitSet& o) const { return is_subset_of(o) && *this != o; }
  bool intersects(const BitSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  BitSet& operator&=(const BitSet& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  BitSet& operator-=(const BitSet& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

  friend bool operator==(const BitSet&, const BitSet&) = default;
  /// Word-order comparison; a strict weak order suitable for sorting and
  /// deduplication, not a presentation order.
  friend auto operator<=>(const BitSet&, const BitSet&) = default;

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(size_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Lexicographic order on the ascending index sequences of two sets:
/// {0,1,2} < {0,2} < {1}.
template <class Tag>
bool index_lex_less(const BitSet<Tag>& a, const BitSet<Tag>& b) {
  std::size_t i = a.first();
  std::size_t j = b.first();
  while (i < a.size() && j < b.size()) {
    if (i != j) return i < j;
    i = a.next(i + 1);
    j = b.next(j + 1);
  }
  return i >= a.size() && j < b.size();
}

struct ObjectTag {};
struct CoverTag {};

/// A set of object indices within a universe.
using ObjectSet = BitSet<ObjectTag>;
/// A set of cover indices within a family (an attribute subset).
using CoverSet = BitSet<CoverTag>;

using ObjectId = std::size_t;
using CoverId = std::size_t;

}  // namespace covred

template <class Tag>
struct std::hash<covred::BitSet<Tag>> {
  std::size_t operator()(const covred::BitSet<Tag>& s) const { return s.hash(); }
};

#endif  // COVRED_BITSET_HPP
