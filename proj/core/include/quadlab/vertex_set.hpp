#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace quadlab {

using Vertex = std::size_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

namespace bits {

inline bool test(std::span<const Word> row, std::size_t i) noexcept {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> row, std::size_t i) noexcept {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void clear(std::span<Word> row, std::size_t i) noexcept {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> row) noexcept {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

/// |a ∩ b| without materializing the intersection.
inline std::size_t intersect_count(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/// Mask with the low `bits % 64` bits set in the last word of a row.
inline Word tail_mask(std::size_t bits) noexcept {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

}  // namespace bits

/// Fixed-universe set of vertices {0, ..., universe-1} stored as 64-bit blocks.
/// Iteration and to_vector() are in ascending order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_words(std::size_t universe, std::span<const Word> words);

  std::size_t universe() const noexcept { return universe_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool contains(Vertex v) const noexcept { return v < universe_ && bits::test(words_, v); }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t count() const noexcept { return bits::count(words_); }
  bool empty() const noexcept;
  std::vector<Vertex> to_vector() const;

  VertexSet complement() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        fn(wi * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

 private:
  void check_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// "{0, 2, 5}" style rendering used by reports and test diagnostics.
std::string format_set(const VertexSet& s);

}  // namespace quadlab
