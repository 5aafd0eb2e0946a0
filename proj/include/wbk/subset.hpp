#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wbk/core.hpp"

namespace wbk {

/// A subset of {0, ..., universe-1} stored as a bitset.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  Subset(std::size_t universe, std::span<const Element> members) : Subset(universe) {
    for (Element x : members) insert(x);
  }
  Subset(std::size_t universe, std::initializer_list<Element> members)
      : Subset(universe, std::span<const Element>(members.begin(), members.size())) {}

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (Element x = 0; x < universe; ++x) s.insert(x);
    return s;
  }

  std::size_t universe() const { return universe_; }
  bool contains(Element x) const { return (words_[x / 64] >> (x % 64)) & 1u; }
  void insert(Element x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }
  void erase(Element x) { words_[x / 64] &= ~(std::uint64_t{1} << (x % 64)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (Element x = 0; x < universe_; ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }

  bool is_subset_of(const Subset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Subset& operator&=(const Subset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Subset& operator|=(const Subset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }

  friend bool operator==(const Subset&, const Subset&) = default;

  /// Canonical order: by size, then by sorted member list.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    const auto ea = a.elements();
    const auto eb = b.elements();
    return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
  }

  /// "{0,2,4}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Element x : elements()) {
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    return out + "}";
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace wbk
