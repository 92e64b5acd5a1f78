#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsets {

/// Fixed-width membership bit-vector over the elements of a ground set.
///
/// Index 0 is the most significant position: comparisons with operator<
/// follow the lectic order used for enumeration output, and to_string()
/// prints index 0 first.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t width);
  ElementSet(std::size_t width, std::initializer_list<std::size_t> members);

  static ElementSet full(std::size_t width);
  /// Parses "0101"-style strings; throws InputError on other characters.
  static ElementSet from_string(std::string_view bits);

  std::size_t width() const noexcept { return width_; }
  bool test(std::size_t i) const;
  void set(std::size_t i);
  void reset(std::size_t i);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept;
  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;
  /// Lowest index that is set, or width() if none.
  std::size_t first() const noexcept;
  /// Lowest set index strictly greater than i, or width() if none.
  std::size_t next(std::size_t i) const noexcept;
  std::vector<std::size_t> members() const;

  /// Members with index < i.
  ElementSet prefix(std::size_t i) const;

  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  ElementSet complement() const;

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  /// Lectic order: a < b iff the smallest index in which they differ is in b.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

  std::string to_string() const;
  std::size_t hash() const noexcept;

  std::span<const Word> words() const noexcept { return words_; }

 private:
  void check_index(std::size_t i) const;
  void check_width(const ElementSet& other) const;
  void trim() noexcept;

  std::size_t width_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace qsets
