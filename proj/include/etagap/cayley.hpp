#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <vector>

#include "etagap/group.hpp"

namespace etagap {

/// Group given by its full multiplication table. Elements encode as
/// 4-byte big-endian indices; index 0 is the identity.
class CayleyBackend final : public GroupBackend {
 public:
  /// `table[i * n + j]` is the index of (element i)(element j). Validates
  /// identity, Latin-square rows and columns, and associativity.
  /// Generators default to a greedy generating set in index order.
  explicit CayleyBackend(std::vector<std::uint32_t> table,
                         std::optional<std::vector<std::uint32_t>> generators = std::nullopt);

  std::string_view kind() const override { return "cayley-table"; }
  std::size_t width() const override { return 4; }
  std::uint64_t order() const override { return n_; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const override;
  void inverse(const std::uint8_t* x, std::uint8_t* out) const override;
  bool valid(const std::uint8_t* x) const override;
  std::vector<std::string> generators() const override;

  static Element encode(std::uint32_t index);
  static std::uint32_t decode(const Element& e);

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> generators_;
};

/// Parses the text table format: n, then n rows of n 0-based indices.
Group read_cayley_table(std::istream& in);

}  // namespace etagap
