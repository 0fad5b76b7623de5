#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace etagap {

/// Opaque group element: the backend's canonical byte encoding.
///
/// Two elements of one group are equal exactly when their encodings are.
/// Ordering is lexicographic over unsigned bytes and is what "least
/// element" means everywhere (class representatives, coset
/// representatives, witnesses).
class Element {
 public:
  Element() = default;
  explicit Element(std::string bytes) : bytes_(std::move(bytes)) {}

  std::string_view bytes() const noexcept { return bytes_; }
  const std::uint8_t* data() const noexcept {
    return reinterpret_cast<const std::uint8_t*>(bytes_.data());
  }
  std::uint8_t* mutable_data() noexcept {
    return reinterpret_cast<std::uint8_t*>(bytes_.data());
  }
  std::size_t width() const noexcept { return bytes_.size(); }

  std::string hex() const;
  static Element from_hex(std::string_view hex);

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& x, const Element& y) {
    int c = x.bytes_.compare(y.bytes_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  std::string bytes_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    return std::hash<std::string_view>{}(e.bytes());
  }
};

}  // namespace etagap
