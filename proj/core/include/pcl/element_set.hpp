#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pcl {

using Element = std::uint16_t;

/// Dense membership mask over the elements 0..universe-1 of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  bool contains(Element e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical order: lexicographic on the ascending element lists.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      const std::uint64_t low = diff & (~diff + 1);
      // The set holding the smallest differing element sorts first, unless
      // the other set has already run out of elements.
      const bool a_has = a.words_[i] & low;
      const std::uint64_t below = low - 1;
      const bool a_rest = (a.words_[i] & ~below & ~low) != 0 || tail_nonempty(a, i + 1);
      const bool b_rest = (b.words_[i] & ~below & ~low) != 0 || tail_nonempty(b, i + 1);
      if (a_has) return b_rest;   // b continues past the common prefix
      return !a_rest;             // b holds the element; a is a prefix
    }
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  static bool tail_nonempty(const ElementSet& s, std::size_t from) {
    for (std::size_t i = from; i < s.words_.size(); ++i)
      if (s.words_[i]) return true;
    return false;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace pcl
