#include "multicomp/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "multicomp/errors.hpp"

namespace multicomp {

namespace {

void require_k(int k) {
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
}

}  // namespace

ColoredComposition::ColoredComposition(int k, std::vector<Part> parts)
    : k_(k), parts_(std::move(parts)) {
  require_k(k_);
  if (parts_.empty()) throw InvariantError("composition has no parts");
  if (parts_.front().color != 1) throw InvariantError("first part must have color 1");
  for (const Part& p : parts_) {
    if (p.value < 1) throw InvariantError("part value must be positive");
    if (p.color < 1 || p.color > k_)
      throw InvariantError("color " + std::to_string(p.color) + " outside 1.." + std::to_string(k_));
  }
}

int ColoredComposition::sum() const noexcept {
  int s = 0;
  for (const Part& p : parts_) s += p.value;
  return s;
}

ZeroComposition::ZeroComposition(int k, std::vector<int> terms) : k_(k), terms_(std::move(terms)) {
  require_k(k_);
  if (terms_.empty()) throw InvariantError("composition has no terms");
  if (terms_.front() <= 0) throw InvariantError("first term must be positive");
  if (terms_.back() <= 0) throw InvariantError("last term must be positive");
  int run = 0;
  for (int t : terms_) {
    if (t < 0) throw InvariantError("negative term");
    if (t == 0) {
      if (++run > k_ - 1)
        throw InvariantError("zero run of length " + std::to_string(run) + " exceeds k-1 = " +
                             std::to_string(k_ - 1));
    } else {
      run = 0;
    }
  }
}

int ZeroComposition::sum() const noexcept { return std::accumulate(terms_.begin(), terms_.end(), 0); }

int ZeroComposition::zeros() const noexcept {
  return static_cast<int>(std::count(terms_.begin(), terms_.end(), 0));
}

int ZeroComposition::positive_parts() const noexcept {
  return static_cast<int>(terms_.size()) - zeros();
}

Marker Marker::separate(int m) {
  if (m < 1) throw DomainError("Separate marker color must be >= 1");
  return Marker(m);
}

Marker Marker::from_code(int code) {
  if (code < 0) throw DomainError("negative marker code");
  return Marker(code);
}

MarkerSequence::MarkerSequence(int k, int n, std::vector<Marker> markers)
    : k_(k), n_(n), markers_(std::move(markers)) {
  require_k(k_);
  if (n_ < 1) throw DomainError("n must be >= 1");
  if (markers_.size() != static_cast<std::size_t>(n_ - 1))
    throw InvariantError("marker sequence for n = " + std::to_string(n_) + " needs " +
                         std::to_string(n_ - 1) + " markers, got " + std::to_string(markers_.size()));
  for (const Marker& m : markers_)
    if (m.color() > k_) throw InvariantError("marker S" + std::to_string(m.color()) + " exceeds k");
}

ZeroComposition to_zero_form(const ColoredComposition& c) {
  std::vector<int> terms;
  terms.reserve(c.parts().size() * static_cast<std::size_t>(c.k()));
  for (const Part& p : c.parts()) {
    terms.insert(terms.end(), static_cast<std::size_t>(p.color - 1), 0);
    terms.push_back(p.value);
  }
  return ZeroComposition(c.k(), std::move(terms));
}

ColoredComposition to_colored_form(const ZeroComposition& z) {
  std::vector<Part> parts;
  int zeros = 0;
  for (int t : z.terms()) {
    if (t == 0) {
      ++zeros;
    } else {
      parts.push_back({t, zeros + 1});
      zeros = 0;
    }
  }
  return ColoredComposition(z.k(), std::move(parts));
}

MarkerSequence to_markers(const ColoredComposition& c) {
  std::vector<Marker> markers;
  markers.reserve(static_cast<std::size_t>(c.sum()));
  bool first = true;
  for (const Part& p : c.parts()) {
    if (!first) markers.push_back(Marker::separate(p.color));
    first = false;
    markers.insert(markers.end(), static_cast<std::size_t>(p.value - 1), Marker::join());
  }
  const int n = static_cast<int>(markers.size()) + 1;
  return MarkerSequence(c.k(), n, std::move(markers));
}

ColoredComposition from_markers(const MarkerSequence& m) {
  std::vector<Part> parts{{1, 1}};
  for (const Marker& marker : m.markers()) {
    if (marker.is_join())
      ++parts.back().value;
    else
      parts.push_back({1, marker.color()});
  }
  return ColoredComposition(m.k(), std::move(parts));
}

int zero_count(const ColoredComposition& c) {
  int zeros = 0;
  for (const Part& p : c.parts()) zeros += p.color - 1;
  return zeros;
}

CompositionStream::CompositionStream(int k, int n, std::vector<Marker> prefix)
    : k_(k), n_(n), fixed_(prefix.size()) {
  require_k(k);
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  if (prefix.size() > static_cast<std::size_t>(n - 1)) throw DomainError("marker prefix longer than n-1");
  codes_.assign(static_cast<std::size_t>(n - 1), 0);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].color() > k) throw DomainError("marker prefix color exceeds k");
    codes_[i] = prefix[i].code();
  }
}

bool CompositionStream::advance() {
  // Odometer over the free suffix, last position fastest.
  for (std::size_t i = codes_.size(); i > fixed_; --i) {
    if (codes_[i - 1] < k_) {
      ++codes_[i - 1];
      return true;
    }
    codes_[i - 1] = 0;
  }
  return false;
}

std::optional<ColoredComposition> CompositionStream::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  std::vector<Part> parts{{1, 1}};
  for (int code : codes_) {
    if (code == 0)
      ++parts.back().value;
    else
      parts.push_back({1, code});
  }
  return ColoredComposition(k_, std::move(parts));
}

CompositionStream enumerate(int k, int n) { return CompositionStream(k, n); }

// ---------------------------------------------------------------------------
// Text grammar

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      ++pos_;
  }

  [[nodiscard]] bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int number() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::invalid_argument || (ptr != first && *first == '-')) fail("expected decimal integer");
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ZeroComposition parse_zeros(std::string_view text, int k) {
  Scanner s(text);
  std::vector<int> terms{s.number()};
  while (s.accept('+')) terms.push_back(s.number());
  if (!s.at_end()) s.fail("unexpected character");
  return ZeroComposition(k, std::move(terms));
}

ColoredComposition parse_colored(std::string_view text, int k) {
  Scanner s(text);
  std::vector<Part> parts;
  do {
    Part p;
    p.value = s.number();
    s.expect('_');
    p.color = s.number();
    parts.push_back(p);
  } while (s.accept('+'));
  if (!s.at_end()) s.fail("unexpected character");
  return ColoredComposition(k, std::move(parts));
}

MarkerSequence parse_markers(std::string_view text, int k) {
  Scanner s(text);
  std::vector<Marker> markers;
  if (!s.at_end()) {
    do {
      if (s.accept('J')) {
        markers.push_back(Marker::join());
      } else if (s.accept('S')) {
        const int m = s.number();
        if (m < 1) throw InvariantError("Separate marker color must be >= 1");
        markers.push_back(Marker::separate(m));
      } else {
        s.fail("expected 'J' or 'S'");
      }
    } while (s.accept(','));
    if (!s.at_end()) s.fail("unexpected character");
  }
  const int n = static_cast<int>(markers.size()) + 1;
  return MarkerSequence(k, n, std::move(markers));
}

AnyComposition parse(std::string_view text, Form form, int k) {
  switch (form) {
    case Form::colored:
      return parse_colored(text, k);
    case Form::zeros:
      return parse_zeros(text, k);
    case Form::markers:
      return parse_markers(text, k);
  }
  throw DomainError("unknown form");
}

std::string render(const ColoredComposition& c) {
  std::string out;
  for (const Part& p : c.parts()) {
    if (!out.empty()) out += '+';
    out += std::to_string(p.value);
    out += '_';
    out += std::to_string(p.color);
  }
  return out;
}

std::string render(const ZeroComposition& z) {
  std::string out;
  for (std::size_t i = 0; i < z.terms().size(); ++i) {
    if (i) out += '+';
    out += std::to_string(z.terms()[i]);
  }
  return out;
}

std::string render(const MarkerSequence& m) {
  std::string out;
  for (std::size_t i = 0; i < m.markers().size(); ++i) {
    if (i) out += ',';
    const Marker marker = m.markers()[i];
    out += marker.is_join() ? std::string("J") : "S" + std::to_string(marker.color());
  }
  return out;
}

std::string render(const AnyComposition& x) {
  return std::visit([](const auto& v) { return render(v); }, x);
}

std::string_view form_name(Form form) {
  switch (form) {
    case Form::colored:
      return "colored";
    case Form::zeros:
      return "zeros";
    case Form::markers:
      return "markers";
  }
  return "?";
}

Form form_from_name(std::string_view name) {
  if (name == "colored") return Form::colored;
  if (name == "zeros") return Form::zeros;
  if (name == "markers") return Form::markers;
  throw DomainError("unknown form '" + std::string(name) + "'");
}

}  // namespace multicomp
