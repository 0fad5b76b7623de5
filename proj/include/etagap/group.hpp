#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "etagap/element.hpp"
#include "etagap/errors.hpp"

namespace etagap {

/// Refusal bounds for operations whose cost grows with the group order.
struct Limits {
  /// Largest group order that may be fully enumerated; also bounds any
  /// single orbit or closure computed by BFS.
  std::uint64_t order_cap = 200000;
};

/// Raw arithmetic on fixed-width encodings. Implementations are immutable
/// and must be safe to call from many threads at once.
///
/// `multiply` and `inverse` never see aliased `out` buffers.
class GroupBackend {
 public:
  virtual ~GroupBackend() = default;

  /// "cayley-table", "permutation" or "structured".
  virtual std::string_view kind() const = 0;
  virtual std::size_t width() const = 0;
  virtual std::uint64_t order() const = 0;
  virtual void identity(std::uint8_t* out) const = 0;
  virtual void multiply(const std::uint8_t* x, const std::uint8_t* y,
                        std::uint8_t* out) const = 0;
  virtual void inverse(const std::uint8_t* x, std::uint8_t* out) const = 0;
  virtual bool valid(const std::uint8_t* x) const = 0;
  virtual std::vector<std::string> generators() const = 0;
};

/// Shared immutable handle over a backend, with cached generators.
class Group {
 public:
  explicit Group(std::shared_ptr<const GroupBackend> backend);

  const GroupBackend& backend() const noexcept { return *backend_; }
  std::string_view kind() const { return backend_->kind(); }
  std::uint64_t order() const noexcept { return order_; }
  std::size_t width() const noexcept { return width_; }

  const std::vector<Element>& generators() const noexcept;
  const std::vector<Element>& generator_inverses() const noexcept;

  const Element& identity() const noexcept;
  bool contains(const Element& x) const noexcept;
  /// Throws foreign-element unless `x` is a valid encoding for this group.
  void check(const Element& x) const;

  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  /// x^-1 a x
  Element conjugate(const Element& a, const Element& x) const;
  /// a^-1 x^-1 a x
  Element commutator(const Element& a, const Element& x) const;
  Element power(const Element& x, std::int64_t k) const;

  /// Unchecked variants used on hot paths where membership is already known.
  void multiply_into(const Element& x, const Element& y, Element& out) const;
  Element multiply_unchecked(const Element& x, const Element& y) const;
  Element conjugate_unchecked(const Element& a, std::size_t generator_index) const;

  /// All elements in ascending encoding order. Computed once per group
  /// and shared by copies of the handle; throws enumeration-too-large when
  /// the order exceeds `limits.order_cap`.
  const std::vector<Element>& elements(const Limits& limits = {}) const;

  bool same_as(const Group& other) const noexcept { return shared_ == other.shared_; }

 private:
  struct Shared;

  std::shared_ptr<const GroupBackend> backend_;
  std::shared_ptr<Shared> shared_;
  std::uint64_t order_ = 0;
  std::size_t width_ = 0;
};

/// An enumerated subgroup of `parent()`.
class Subgroup {
 public:
  Subgroup(Group parent, std::vector<Element> sorted_elements);

  const Group& parent() const noexcept { return parent_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Element& x) const;
  /// Invariant under conjugation by every generator of the parent.
  bool is_normal() const;
  bool is_central() const;

  friend bool operator==(const Subgroup& x, const Subgroup& y) {
    return x.parent_.same_as(y.parent_) && x.elements_ == y.elements_;
  }

 private:
  Group parent_;
  std::vector<Element> elements_;
};

/// Smallest subgroup containing `seed`, by BFS under right multiplication.
Subgroup closure(const Group& g, std::span<const Element> seed, const Limits& limits = {});

Subgroup centralizer(const Group& g, const Element& a, const Limits& limits = {});
Subgroup center(const Group& g, const Limits& limits = {});

/// G/N as a Cayley-table group. Cosets are indexed with N first, the rest
/// ascending by their least element.
class Quotient {
 public:
  Quotient(Group parent, Subgroup kernel, Group group,
           std::vector<Element> coset_representatives,
           std::vector<std::uint32_t> coset_of_element);

  const Group& group() const noexcept { return group_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  /// Image of x under G -> G/N.
  Element project(const Element& x) const;
  /// Least element of the coset `q`.
  const Element& representative(const Element& q) const;

 private:
  Group parent_;
  Subgroup kernel_;
  Group group_;
  std::vector<Element> representatives_;
  std::vector<std::uint32_t> coset_of_;  // indexed like parent_.elements()
};

/// Largest quotient order for which a Cayley table is materialised.
inline constexpr std::uint64_t kQuotientTableLimit = 4096;

Quotient quotient_group(const Group& g, const Subgroup& n, const Limits& limits = {});

}  // namespace etagap
