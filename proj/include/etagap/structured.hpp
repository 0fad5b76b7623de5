#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "etagap/group.hpp"

namespace etagap {

using BackendPtr = std::shared_ptr<const GroupBackend>;

/// Z/n written additively; value i encodes big-endian in the fewest bytes
/// that hold n-1. Generator: 1.
class CyclicBackend final : public GroupBackend {
 public:
  explicit CyclicBackend(std::uint64_t n);

  std::string_view kind() const override { return "structured"; }
  std::size_t width() const override { return width_; }
  std::uint64_t order() const override { return n_; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const override;
  void inverse(const std::uint8_t* x, std::uint8_t* out) const override;
  bool valid(const std::uint8_t* x) const override;
  std::vector<std::string> generators() const override;

  std::string encode(std::uint64_t value) const;

 private:
  std::uint64_t load(const std::uint8_t* x) const;
  void store(std::uint64_t v, std::uint8_t* out) const;

  std::uint64_t n_;
  std::size_t width_;
};

/// Symmetries of the regular n-gon, r^k s^f with r^n = s^2 = 1 and
/// s r s = r^-1. Encoding: k (big-endian, CyclicBackend width) then f.
/// Generators: r, s.
class DihedralBackend final : public GroupBackend {
 public:
  explicit DihedralBackend(std::uint64_t n);

  std::string_view kind() const override { return "structured"; }
  std::size_t width() const override { return rotations_.width() + 1; }
  std::uint64_t order() const override { return 2 * n_; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const override;
  void inverse(const std::uint8_t* x, std::uint8_t* out) const override;
  bool valid(const std::uint8_t* x) const override;
  std::vector<std::string> generators() const override;

  std::string encode(std::uint64_t rotation, bool reflection) const;

 private:
  std::uint64_t n_;
  CyclicBackend rotations_;
};

/// Quaternion group {±1, ±i, ±j, ±k}. One byte: 2*unit + sign, with
/// unit 0..3 = 1, i, j, k. Generators: i, j.
class QuaternionBackend final : public GroupBackend {
 public:
  std::string_view kind() const override { return "structured"; }
  std::size_t width() const override { return 1; }
  std::uint64_t order() const override { return 8; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const override;
  void inverse(const std::uint8_t* x, std::uint8_t* out) const override;
  bool valid(const std::uint8_t* x) const override;
  std::vector<std::string> generators() const override;
};

/// Extraspecial group of exponent p and order p^(2l+1) in Heisenberg form:
/// triples (x, y, z) with x, y in F_p^l, z in F_p and
/// (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x.y').
/// Encoding: x then y then z, one byte per coordinate.
/// Generators: the unit x-vectors, then the unit y-vectors.
class ExtraspecialBackend final : public GroupBackend {
 public:
  ExtraspecialBackend(std::uint32_t p, std::uint32_t l);

  std::string_view kind() const override { return "structured"; }
  std::size_t width() const override { return 2 * l_ + 1; }
  std::uint64_t order() const override;
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const override;
  void inverse(const std::uint8_t* x, std::uint8_t* out) const override;
  bool valid(const std::uint8_t* x) const override;
  std::vector<std::string> generators() const override;

  /// Least non-central element by encoding: y_l = 1, all else 0.
  std::string least_noncentral() const;

 private:
  std::uint32_t p_;
  std::uint32_t l_;
};

/// Cartesian product; the encoding concatenates the factor encodings.
/// Generators: each factor's generators, embedded in factor order.
class DirectProductBackend final : public GroupBackend {
 public:
  explicit DirectProductBackend(std::vector<BackendPtr> factors);

  std::string_view kind() const override { return "structured"; }
  std::size_t width() const override { return width_; }
  std::uint64_t order() const override { return order_; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const override;
  void inverse(const std::uint8_t* x, std::uint8_t* out) const override;
  bool valid(const std::uint8_t* x) const override;
  std::vector<std::string> generators() const override;

  std::size_t factor_count() const noexcept { return factors_.size(); }
  const GroupBackend& factor(std::size_t i) const { return *factors_.at(i); }
  /// Concatenates one element per factor.
  Element combine(std::span<const Element> parts) const;
  /// Splits into one element per factor.
  std::vector<Element> split(const Element& x) const;

 private:
  std::vector<BackendPtr> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t width_ = 0;
  std::uint64_t order_ = 1;
};

/// G_0 wr C_p: pairs (n, i) with n a p-tuple over the base and i a power of
/// the cycle c, where c^-1 n c moves component k to k+1. Multiplication is
/// (n, i)(n', i') = (n * shift_i(n'), i + i') with shift_i(n')_k = n'_{k+i}.
/// Encoding: the p base encodings, then one byte for i.
/// Generators: base generators in component 0, then c.
class WreathCyclicBackend final : public GroupBackend {
 public:
  WreathCyclicBackend(BackendPtr base, std::uint32_t p);

  std::string_view kind() const override { return "structured"; }
  std::size_t width() const override { return p_ * base_width_ + 1; }
  std::uint64_t order() const override { return order_; }
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const override;
  void inverse(const std::uint8_t* x, std::uint8_t* out) const override;
  bool valid(const std::uint8_t* x) const override;
  std::vector<std::string> generators() const override;

  const GroupBackend& base() const noexcept { return *base_; }
  std::uint32_t copies() const noexcept { return p_; }
  /// Element with the given base components and shift.
  Element make(std::span<const Element> components, std::uint32_t shift) const;

 private:
  BackendPtr base_;
  std::uint32_t p_;
  std::size_t base_width_;
  std::uint64_t order_;
};

/// C_p wr_X Aff(F_p) with X = F_p: pairs (f, alpha), f : F_p -> C_p stored
/// additively, alpha = (u, v) the map x -> u x + v. With conjugation
/// alpha^-1 f alpha = f o alpha, multiplication is
/// (f, alpha)(f', alpha') = (f + f' o alpha^-1, alpha o alpha').
/// Encoding: f(0..p-1), then u, then v, one byte each.
/// Generators: delta_0 (value 1 at point 0), x -> x + 1, x -> w x for a
/// primitive root w (omitted when p = 2).
class AffineWreathBackend final : public GroupBackend {
 public:
  explicit AffineWreathBackend(std::uint32_t p);

  std::string_view kind() const override { return "structured"; }
  std::size_t width() const override { return p_ + 2; }
  std::uint64_t order() const override;
  void identity(std::uint8_t* out) const override;
  void multiply(const std::uint8_t* x, const std::uint8_t* y, std::uint8_t* out) const override;
  void inverse(const std::uint8_t* x, std::uint8_t* out) const override;
  bool valid(const std::uint8_t* x) const override;
  std::vector<std::string> generators() const override;

  Element make(std::span<const std::uint32_t> values, std::uint32_t u, std::uint32_t v) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inverse_mod_;
  std::uint32_t primitive_root_;
};

}  // namespace etagap
