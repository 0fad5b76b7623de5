#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "etagap/group.hpp"

namespace etagap {

enum class ConstructionKind {
  cyclic,
  elementary_abelian,
  dihedral,
  quaternion8,
  extraspecial,
  direct_product,
  wreath_cyclic,
  affine_wreath,
  iterated_wreath_sylow,
};

std::string_view kind_name(ConstructionKind kind);

/// Declarative description of a group to build.
///
/// Parameters by kind:
///   cyclic                  n (order)
///   elementary-abelian      p, n (rank)
///   dihedral                n (rotations; order 2n)
///   quaternion8             -
///   extraspecial-exponent-p p (odd), l >= 1
///   direct-product          factors, or base + copies
///   wreath-cyclic           p (odd), base
///   affine-wreath           p
///   iterated-wreath-sylow   p, n (depth; acts on p^n points)
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::cyclic;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> l;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> copies;
  std::shared_ptr<const ConstructionSpec> base;
  std::vector<ConstructionSpec> factors;
  std::optional<std::string> role;

  static ConstructionSpec cyclic(std::int64_t n);
  static ConstructionSpec elementary_abelian(std::int64_t p, std::int64_t rank);
  static ConstructionSpec dihedral(std::int64_t n);
  static ConstructionSpec quaternion8();
  static ConstructionSpec extraspecial(std::int64_t p, std::int64_t l);
  static ConstructionSpec direct_product(std::vector<ConstructionSpec> factors);
  static ConstructionSpec wreath_cyclic(ConstructionSpec base, std::int64_t p);
  static ConstructionSpec affine_wreath(std::int64_t p);
  static ConstructionSpec iterated_wreath_sylow(std::int64_t p, std::int64_t depth);

  /// Compact JSON with keys in the order kind, p, l, n, copies, base,
  /// factors, role.
  std::string to_string() const;
  nlohmann::ordered_json to_json() const;
  static ConstructionSpec from_json(const nlohmann::json& j);
  static ConstructionSpec parse(std::string_view text);

  friend bool operator==(const ConstructionSpec& x, const ConstructionSpec& y) {
    return x.to_string() == y.to_string();
  }
};

bool is_prime(std::int64_t n);
/// Throws invalid-parameter when the spec is malformed.
void validate(const ConstructionSpec& spec);
/// Order by construction rule, without building.
std::uint64_t predicted_order(const ConstructionSpec& spec);

Group build(const ConstructionSpec& spec, const Limits& limits = {});

/// Named elements used by the worked examples:
///   a-standard          (g0, e, ..., e) with trivial top part
///   b-double            (g0, g0, e, ..., e) with trivial top part
///   noncentral-witness  least non-central element of an extraspecial group
/// For wreath-cyclic, g0 is the base's noncentral witness when the base is
/// extraspecial and its first generator otherwise; for affine-wreath g0 is c.
Element distinguished_element(const Group& built, const ConstructionSpec& spec,
                              std::string_view role);
Element distinguished_element(const ConstructionSpec& spec, std::string_view role);

/// Fixed family of p-groups of order <= max_order used as a falsification
/// corpus; ascending by order, ties in listing order. For p = 2 it also holds
/// dihedral and quaternion families.
std::vector<ConstructionSpec> corpus(std::int64_t p, std::uint64_t max_order);

}  // namespace etagap
