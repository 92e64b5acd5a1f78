#include "qsets/element_set.hpp"

#include <bit>

#include "qsets/error.hpp"

namespace qsets {

namespace {

std::size_t words_for(std::size_t width) {
  return (width + ElementSet::kWordBits - 1) / ElementSet::kWordBits;
}

}  // namespace

ElementSet::ElementSet(std::size_t width) : width_(width), words_(words_for(width), 0) {}

ElementSet::ElementSet(std::size_t width, std::initializer_list<std::size_t> members)
    : ElementSet(width) {
  for (auto i : members) set(i);
}

ElementSet ElementSet::full(std::size_t width) {
  ElementSet s(width);
  for (auto& w : s.words_) w = ~Word{0};
  s.trim();
  return s;
}

ElementSet ElementSet::from_string(std::string_view bits) {
  ElementSet s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s.set(i);
    } else if (bits[i] != '0') {
      throw InputError("bit-string contains character other than 0/1: \"" +
                       std::string(bits) + "\"");
    }
  }
  return s;
}

void ElementSet::check_index(std::size_t i) const {
  if (i >= width_) {
    throw InputError("element index " + std::to_string(i) + " out of range for width " +
                     std::to_string(width_));
  }
}

void ElementSet::check_width(const ElementSet& other) const {
  if (other.width_ != width_) {
    throw InputError("element set width mismatch: " + std::to_string(width_) + " vs " +
                     std::to_string(other.width_));
  }
}

void ElementSet::trim() noexcept {
  if (auto r = width_ % kWordBits; r != 0) words_.back() &= (Word{1} << r) - 1;
}

bool ElementSet::test(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void ElementSet::set(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] |= Word{1} << (i % kWordBits);
}

void ElementSet::reset(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool ElementSet::is_full() const noexcept { return count() == width_; }

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~other.words_[k]) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & other.words_[k]) return true;
  return false;
}

std::size_t ElementSet::first() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return width_;
}

std::size_t ElementSet::next(std::size_t i) const noexcept {
  std::size_t j = i + 1;
  if (j >= width_) return width_;
  std::size_t k = j / kWordBits;
  Word w = words_[k] & (~Word{0} << (j % kWordBits));
  while (true) {
    if (w != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++k == words_.size()) return width_;
    w = words_[k];
  }
}

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  for (auto i = first(); i < width_; i = next(i)) out.push_back(i);
  return out;
}

ElementSet ElementSet::prefix(std::size_t i) const {
  ElementSet s(width_);
  std::size_t full_words = i / kWordBits;
  for (std::size_t k = 0; k < full_words && k < words_.size(); ++k) s.words_[k] = words_[k];
  if (full_words < words_.size() && i % kWordBits != 0)
    s.words_[full_words] = words_[full_words] & ((Word{1} << (i % kWordBits)) - 1);
  return s;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet s(*this);
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  a.check_width(b);
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    auto diff = a.words_[k] ^ b.words_[k];
    if (diff != 0) return (b.words_[k] & (diff & -diff)) != 0;
  }
  return false;
}

std::string ElementSet::to_string() const {
  std::string out(width_, '0');
  for (auto i = first(); i < width_; i = next(i)) out[i] = '1';
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL ^ width_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace qsets
