#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "quorumlab/errors.hpp"

namespace quorumlab {

// Hard ceiling on players in any game. Exhaustive operations use a much
// lower, configurable cap (see Limits).
inline constexpr int kMaxPlayers = 256;

// 1-based player label.
struct PlayerId {
  int value = 0;

  constexpr PlayerId() = default;
  constexpr explicit PlayerId(int v) : value(v) {}
  friend constexpr auto operator<=>(PlayerId, PlayerId) = default;
};

// Subset of players 1..kMaxPlayers as a fixed-width bit mask. Player p lives
// in bit p-1, so coalitions of up to 64 players coincide with a single word.
class Coalition {
 public:
  static constexpr int kWords = kMaxPlayers / 64;

  constexpr Coalition() = default;

  static constexpr Coalition from_mask(std::uint64_t mask) {
    Coalition c;
    c.words_[0] = mask;
    return c;
  }

  static Coalition of(std::initializer_list<int> players) {
    Coalition c;
    for (int p : players) c.insert(PlayerId(p));
    return c;
  }

  static Coalition of(const std::vector<int>& players) {
    Coalition c;
    for (int p : players) c.insert(PlayerId(p));
    return c;
  }

  // Players first..last inclusive; empty when first > last.
  static Coalition range(int first, int last) {
    Coalition c;
    for (int p = first; p <= last; ++p) c.insert(PlayerId(p));
    return c;
  }

  static Coalition grand(int players) { return range(1, players); }

  bool contains(PlayerId p) const {
    check(p);
    const int bit = p.value - 1;
    return (words_[bit / 64] >> (bit % 64)) & 1U;
  }

  Coalition& insert(PlayerId p) {
    check(p);
    const int bit = p.value - 1;
    words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    return *this;
  }

  Coalition& erase(PlayerId p) {
    check(p);
    const int bit = p.value - 1;
    words_[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
    return *this;
  }

  Coalition with(PlayerId p) const { return Coalition(*this).insert(p); }
  Coalition without(PlayerId p) const { return Coalition(*this).erase(p); }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool empty() const { return size() == 0; }

  // Number of members with labels in first..last.
  int count_in(int first, int last) const { return (*this & range(first, last)).size(); }

  // Highest member label, 0 for the empty coalition.
  int max_player() const {
    for (int w = kWords - 1; w >= 0; --w) {
      if (words_[w] != 0) return w * 64 + 64 - std::countl_zero(words_[w]);
    }
    return 0;
  }

  bool subset_of(const Coalition& other) const { return (*this & other) == *this; }

  bool fits_word() const {
    for (int w = 1; w < kWords; ++w) {
      if (words_[w] != 0) return false;
    }
    return true;
  }

  std::uint64_t low_word() const { return words_[0]; }
  std::uint64_t word(int i) const { return words_[i]; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        out.push_back(w * 64 + std::countr_zero(bits) + 1);
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int p : members()) {
      if (!first) s += ",";
      s += std::to_string(p);
      first = false;
    }
    return s + "}";
  }

  friend Coalition operator|(Coalition a, const Coalition& b) {
    for (int w = 0; w < kWords; ++w) a.words_[w] |= b.words_[w];
    return a;
  }
  friend Coalition operator&(Coalition a, const Coalition& b) {
    for (int w = 0; w < kWords; ++w) a.words_[w] &= b.words_[w];
    return a;
  }
  // Set difference.
  friend Coalition operator-(Coalition a, const Coalition& b) {
    for (int w = 0; w < kWords; ++w) a.words_[w] &= ~b.words_[w];
    return a;
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;

  // Numeric order of the underlying mask: the canonical order for sorted
  // winning sets.
  friend std::strong_ordering operator<=>(const Coalition& a, const Coalition& b) {
    for (int w = kWords - 1; w >= 0; --w) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    }
    return std::strong_ordering::equal;
  }

 private:
  static void check(PlayerId p) {
    if (p.value < 1 || p.value > kMaxPlayers) {
      throw input_error("player " + std::to_string(p.value) + " outside 1.." +
                        std::to_string(kMaxPlayers));
    }
  }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace quorumlab
