#include "subgame/bits.hpp"

#include <bit>
#include <stdexcept>

namespace subgame {

BitString::BitString(std::size_t n, bool value)
    : words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0), size_(n) {
  trim();
}

BitString BitString::from_string(std::string_view text) {
  BitString out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string: unexpected character '" + std::string(1, c) +
                                  "' at offset " + std::to_string(i));
    }
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t v, std::size_t width) {
  if (width > 64) throw std::invalid_argument("from_uint: width exceeds 64");
  BitString out(width);
  for (std::size_t i = 0; i < width; ++i) out.set(i, (v >> (width - 1 - i)) & 1u);
  return out;
}

bool BitString::at(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("BitString::at");
  return (*this)[i];
}

void BitString::push_back(bool v) {
  if ((size_ & 63) == 0) words_.push_back(0);
  ++size_;
  if (v) words_[(size_ - 1) >> 6] |= std::uint64_t{1} << ((size_ - 1) & 63);
}

void BitString::append(const BitString& other) {
  const std::size_t shift = size_ & 63;
  if (shift == 0) {
    words_.insert(words_.end(), other.words_.begin(), other.words_.end());
    size_ += other.size_;
    return;
  }
  const std::size_t total = size_ + other.size_;
  words_.resize((total + 63) / 64, 0);
  std::size_t w = size_ >> 6;
  for (std::uint64_t word : other.words_) {
    words_[w] |= word << shift;
    if (w + 1 < words_.size()) words_[w + 1] |= word >> (64 - shift);
    ++w;
  }
  size_ = total;
}

BitString BitString::substr(std::size_t pos, std::size_t len) const {
  if (pos > size_ || len > size_ - pos) throw std::out_of_range("BitString::substr");
  BitString out(len);
  const std::size_t shift = pos & 63;
  const std::size_t base = pos >> 6;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    std::uint64_t v = words_[base + w] >> shift;
    if (shift != 0 && base + w + 1 < words_.size()) v |= words_[base + w + 1] << (64 - shift);
    out.words_[w] = v;
  }
  out.trim();
  return out;
}

BitString BitString::complement() const {
  BitString out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

BitString BitString::repeat(std::size_t times) const {
  BitString out;
  out.reserve(size_ * times);
  for (std::size_t i = 0; i < times; ++i) out.append(*this);
  return out;
}

BitString BitString::rotate_left(std::size_t k) const {
  if (size_ == 0) return *this;
  k %= size_;
  return substr(k, size_ - k) + substr(0, k);
}

std::uint64_t BitString::to_uint() const {
  if (size_ > 64) throw std::length_error("to_uint: more than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < size_; ++i) v = (v << 1) | static_cast<std::uint64_t>((*this)[i]);
  return v;
}

std::string BitString::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

std::size_t BitString::count_ones() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool operator<(const BitString& a, const BitString& b) {
  const std::size_t n = a.size_ < b.size_ ? a.size_ : b.size_;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return b[i];
  }
  return a.size_ < b.size_;
}

std::size_t BitString::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void BitString::trim() {
  if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
}

}  // namespace subgame
