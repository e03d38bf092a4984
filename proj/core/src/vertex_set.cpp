#include "quadlab/vertex_set.hpp"

#include <algorithm>

#include "quadlab/error.hpp"

namespace quadlab {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (!s.words_.empty()) s.words_.back() &= bits::tail_mask(universe);
  return s;
}

VertexSet VertexSet::from_words(std::size_t universe, std::span<const Word> words) {
  if (words.size() != words_for(universe)) {
    throw Error(Errc::DimensionMismatch, "word count does not match universe " + std::to_string(universe));
  }
  VertexSet s(universe);
  std::copy(words.begin(), words.end(), s.words_.begin());
  if (!s.words_.empty()) s.words_.back() &= bits::tail_mask(universe);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " >= " + std::to_string(universe_));
  }
  bits::set(words_, v);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " >= " + std::to_string(universe_));
  }
  bits::clear(words_, v);
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
  if (!s.words_.empty()) s.words_.back() &= bits::tail_mask(universe_);
  return s;
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(Errc::DimensionMismatch, "vertex sets over universes " + std::to_string(universe_) + " and " +
                                             std::to_string(other.universe_));
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace quadlab
