#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace trackpath {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Fixed-size vertex bitset. Used for removed/used vertex sets and as a memo key.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(VertexId v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(VertexId v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(VertexId v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }

  VertexMask& operator|=(const VertexMask& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const VertexMask&, const VertexMask&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace trackpath

template <>
struct std::hash<trackpath::VertexMask> {
  std::size_t operator()(const trackpath::VertexMask& m) const noexcept { return m.hash(); }
};
