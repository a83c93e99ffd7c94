#ifndef UNIGEN_BITMASK_HPP
#define UNIGEN_BITMASK_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unigen {

// Fixed-width set of element indices 0..size-1, packed into 64-bit words.
class Bitmask {
 public:
  using Word = std::uint64_t;

  Bitmask() = default;
  explicit Bitmask(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::span<Word const> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(Word{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(Bitmask const& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  Bitmask& operator&=(Bitmask const& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  Bitmask& operator|=(Bitmask const& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend Bitmask operator&(Bitmask a, Bitmask const& b) { return a &= b; }
  friend Bitmask operator|(Bitmask a, Bitmask const& b) { return a |= b; }

  void fill() noexcept {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        auto b = static_cast<std::size_t>(std::countr_zero(w));
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  // Bytes in increasing element order: byte i holds elements 8i..8i+7, bit j
  // of the byte is element 8i+j.
  std::string bytes() const {
    std::string out((size_ + 7) / 8, '\0');
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<char>((words_[i / 8] >> (8 * (i % 8))) & 0xffu);
    }
    return out;
  }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string b = bytes();
    std::string out;
    out.reserve(2 * b.size());
    for (unsigned char c : b) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }

  static Bitmask from_hex(std::string_view hex, std::size_t size);

  std::uint64_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (Word w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return h ^ (h >> 33);
  }

  // Lexicographic comparison of bytes(); matches sorting by canonical key.
  int compare_bytes(Bitmask const& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] == other.words_[i]) continue;
      // Lowest differing byte decides.
      Word diff = words_[i] ^ other.words_[i];
      int byte = std::countr_zero(diff) / 8;
      unsigned a = (words_[i] >> (8 * byte)) & 0xffu;
      unsigned b = (other.words_[i] >> (8 * byte)) & 0xffu;
      return a < b ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(Bitmask const&, Bitmask const&) = default;

 private:
  void trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (size_ % 64)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

inline Bitmask Bitmask::from_hex(std::string_view hex, std::size_t size) {
  Bitmask m(size);
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    return 16;
  };
  for (std::size_t i = 0; 2 * i + 1 < hex.size(); ++i) {
    unsigned hi = nibble(hex[2 * i]);
    unsigned lo = nibble(hex[2 * i + 1]);
    if (hi > 15 || lo > 15) break;
    unsigned byte = (hi << 4) | lo;
    for (unsigned j = 0; j < 8; ++j) {
      std::size_t e = 8 * i + j;
      if ((byte >> j) & 1u && e < size) m.set(e);
    }
  }
  return m;
}

}  // namespace unigen

#endif  // UNIGEN_BITMASK_HPP
