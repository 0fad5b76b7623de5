#pragma once

#include <cstdint>
#include <istream>
#include <vector>

#include "etagap/group.hpp"

namespace etagap {

using Permutation = std::vector<std::uint32_t>;

/// Permutation group given by generators on points 0..degree-1.
///
/// Products act left to right: (xy)(i) = y(x(i)). Elements encode as the
/// image vector, one byte per point for degree <= 256, two bytes big-endian
/// otherwise. The order is found by enumerating the closure at construction.
class PermutationBackend final : public GroupBackend {
 public:
  PermutationBackend(std::uint32_t degree, std::vector<Permutation> generators,
                     const Limits& limits = {});

  std::string_view kind() const override { return "permutation"; }
  std::size_t width() const override { return degree_ * bytes_per_point_; }
  std::uint64_t order() const override { return order_; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const override;
  void inverse(const std::uint8_t* x, std::uint8_t* out) const override;
  bool valid(const std::uint8_t* x) const override;
  std::vector<std::string> generators() const override;

  std::uint32_t degree() const noexcept { return degree_; }
  std::string encode(const Permutation& perm) const;
  Permutation decode(const Element& e) const;

 private:
  std::uint32_t point(const std::uint8_t* x, std::uint32_t i) const;
  void set_point(std::uint8_t* x, std::uint32_t i, std::uint32_t v) const;

  std::uint32_t degree_;
  std::size_t bytes_per_point_;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 0;
};

/// Parses the text format: degree d, then one generator per line as d
/// 0-based images.
Group read_permutation_group(std::istream& in, const Limits& limits = {});

}  // namespace etagap
