#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace multicomp {

// A multicomposition (k-composition) of n has two surface forms:
//
//   colored parts   2_1+1_2      each part carries a color in 1..k, the first
//                                part always color 1
//   internal zeros  2+0+1        each non-initial part may be preceded by up
//                                to k-1 zeros
//
// and one canonical encoding, the marker sequence: n-1 decisions on a length-n
// board, Join or Separate(m). The two forms correspond part by part: a color-m
// part becomes m-1 zeros followed by its value.
//
// Every value carries its ambient k. Values with different k never compare
// equal and are never mixed by any operation here.

struct Part {
  int value = 1;
  int color = 1;

  friend auto operator<=>(const Part&, const Part&) = default;
};

class ColoredComposition {
 public:
  /// Throws InvariantError on an empty list, a nonpositive value, a color
  /// outside 1..k or a first part whose color is not 1; DomainError if k < 1.
  ColoredComposition(int k, std::vector<Part> parts);

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<Part>& parts() const noexcept { return parts_; }
  [[nodiscard]] int sum() const noexcept;

  friend auto operator<=>(const ColoredComposition&, const ColoredComposition&) = default;

 private:
  int k_;
  std::vector<Part> parts_;
};

class ZeroComposition {
 public:
  /// Throws InvariantError unless the first and last terms are positive and
  /// every zero run has length at most k-1.
  ZeroComposition(int k, std::vector<int> terms);

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<int>& terms() const noexcept { return terms_; }
  [[nodiscard]] int sum() const noexcept;
  [[nodiscard]] int zeros() const noexcept;
  [[nodiscard]] int positive_parts() const noexcept;

  friend auto operator<=>(const ZeroComposition&, const ZeroComposition&) = default;

 private:
  int k_;
  std::vector<int> terms_;
};

/// One board decision. Ordered Join < Separate(1) < ... < Separate(k).
class Marker {
 public:
  static constexpr Marker join() noexcept { return Marker(0); }
  /// Throws DomainError if m < 1.
  static Marker separate(int m);

  [[nodiscard]] constexpr bool is_join() const noexcept { return code_ == 0; }
  /// Color of the part started by a Separate marker; 0 for Join.
  [[nodiscard]] constexpr int color() const noexcept { return code_; }
  /// Position in the total order, Join = 0.
  [[nodiscard]] constexpr int code() const noexcept { return code_; }
  static Marker from_code(int code);

  friend constexpr auto operator<=>(const Marker&, const Marker&) = default;

 private:
  constexpr explicit Marker(int code) noexcept : code_(code) {}
  int code_;
};

class MarkerSequence {
 public:
  /// Throws InvariantError unless markers.size() == n-1 and every color <= k.
  MarkerSequence(int k, int n, std::vector<Marker> markers);

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Marker>& markers() const noexcept { return markers_; }

  friend auto operator<=>(const MarkerSequence&, const MarkerSequence&) = default;

 private:
  int k_;
  int n_;
  std::vector<Marker> markers_;
};

ZeroComposition to_zero_form(const ColoredComposition& c);
ColoredComposition to_colored_form(const ZeroComposition& z);
MarkerSequence to_markers(const ColoredComposition& c);
ColoredComposition from_markers(const MarkerSequence& m);

/// Sum of (color - 1) over the parts; equals the zero count of the zero form.
int zero_count(const ColoredComposition& c);

/// Lazy enumeration of the k-compositions of n.
///
/// Order is lexicographic over marker sequences with Join < Separate(1) < ...
/// < Separate(k); the last board position varies fastest. Memory is O(n)
/// regardless of how many items are produced. An optional fixed marker prefix
/// restricts the stream to one slice, so disjoint prefixes can be consumed
/// from different threads. A single stream is not thread-safe.
class CompositionStream {
 public:
  CompositionStream(int k, int n, std::vector<Marker> prefix = {});

  /// Next composition, or nullopt once exhausted.
  std::optional<ColoredComposition> next();
  /// Marker code vector of the most recently returned item.
  [[nodiscard]] const std::vector<int>& current_codes() const noexcept { return codes_; }

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] int n() const noexcept { return n_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ColoredComposition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(CompositionStream* stream) : stream_(stream) { ++*this; }

    const ColoredComposition& operator*() const { return *item_; }
    const ColoredComposition* operator->() const { return &*item_; }
    iterator& operator++() {
      item_ = stream_->next();
      if (!item_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.stream_ == nullptr; }

   private:
    CompositionStream* stream_ = nullptr;
    std::optional<ColoredComposition> item_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  bool advance();

  int k_;
  int n_;
  std::size_t fixed_;
  std::vector<int> codes_;
  bool started_ = false;
  bool done_ = false;
};

/// Throws DomainError when k < 1 or n < 1.
CompositionStream enumerate(int k, int n);

// Text grammar, ASCII, whitespace between tokens ignored:
//   zeros    term ("+" term)*       term  := decimal >= 0
//   colored  part ("+" part)*       part  := value "_" color
//   markers  marker ("," marker)*   marker := "J" | "S" digits
// The empty marker list (n = 1) is the empty string.

enum class Form { colored, zeros, markers };

using AnyComposition = std::variant<ColoredComposition, ZeroComposition, MarkerSequence>;

/// Malformed text throws SyntaxError (with position); well-formed text that
/// violates an invariant throws InvariantError.
ColoredComposition parse_colored(std::string_view text, int k);
ZeroComposition parse_zeros(std::string_view text, int k);
MarkerSequence parse_markers(std::string_view text, int k);
AnyComposition parse(std::string_view text, Form form, int k);

std::string render(const ColoredComposition& c);
std::string render(const ZeroComposition& z);
std::string render(const MarkerSequence& m);
std::string render(const AnyComposition& x);

std::string_view form_name(Form form);
/// Throws DomainError on an unknown name.
Form form_from_name(std::string_view name);

}  // namespace multicomp
