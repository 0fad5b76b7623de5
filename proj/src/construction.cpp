#include "etagap/construction.hpp"

#include <algorithm>
#include <limits>

#include "etagap/permutation.hpp"
#include "etagap/structured.hpp"

namespace etagap {

namespace {

constexpr std::pair<ConstructionKind, std::string_view> kKindNames[] = {
    {ConstructionKind::cyclic, "cyclic"},
    {ConstructionKind::elementary_abelian, "elementary-abelian"},
    {ConstructionKind::dihedral, "dihedral"},
    {ConstructionKind::quaternion8, "quaternion8"},
    {ConstructionKind::extraspecial, "extraspecial-exponent-p"},
    {ConstructionKind::direct_product, "direct-product"},
    {ConstructionKind::wreath_cyclic, "wreath-cyclic"},
    {ConstructionKind::affine_wreath, "affine-wreath"},
    {ConstructionKind::iterated_wreath_sylow, "iterated-wreath-sylow"},
};

ConstructionKind kind_from_name(std::string_view name) {
  for (auto [kind, text] : kKindNames)
    if (text == name) return kind;
  fail(ErrorCode::invalid_parameter, "unknown construction kind '" + std::string(name) + "'");
}

std::int64_t need(const std::optional<std::int64_t>& v, std::string_view field,
                  const ConstructionSpec& spec) {
  if (!v) {
    fail(ErrorCode::invalid_parameter,
         std::string(kind_name(spec.kind)) + " requires field '" + std::string(field) + "'");
  }
  return *v;
}

std::int64_t need_prime(const std::optional<std::int64_t>& v, const ConstructionSpec& spec,
                        bool odd) {
  auto p = need(v, "p", spec);
  if (!is_prime(p) || p > 251) {
    fail(ErrorCode::invalid_parameter, std::string(kind_name(spec.kind)) + ": p = " +
                                           std::to_string(p) + " is not a prime below 256");
  }
  if (odd && p == 2) {
    fail(ErrorCode::invalid_parameter, std::string(kind_name(spec.kind)) + " requires an odd prime");
  }
  return p;
}

std::uint64_t mul_or_fail(std::uint64_t x, std::uint64_t y) {
  if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / 2 / y) {
    fail(ErrorCode::invalid_parameter, "group order overflows 63 bits");
  }
  return x * y;
}

std::uint64_t pow_or_fail(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = mul_or_fail(out, base);
  return out;
}

std::vector<ConstructionSpec> factor_list(const ConstructionSpec& spec) {
  if (!spec.factors.empty()) return spec.factors;
  return std::vector<ConstructionSpec>(static_cast<std::size_t>(*spec.copies), *spec.base);
}

std::vector<Permutation> sylow_generators(std::uint32_t p, std::uint32_t depth) {
  std::uint32_t points = 1;
  for (std::uint32_t i = 0; i < depth; ++i) points *= p;
  std::vector<Permutation> gens;
  std::uint32_t place = 1;
  for (std::uint32_t j = 0; j < depth; ++j, place *= p) {
    Permutation perm(points);
    for (std::uint32_t x = 0; x < points; ++x) {
      // Cycle digit j of the points whose higher digits are all zero.
      bool moves = x / (place * p) == 0;
      std::uint32_t digit = x / place % p;
      perm[x] = moves ? x - digit * place + (digit + 1) % p * place : x;
    }
    gens.push_back(std::move(perm));
  }
  return gens;
}

BackendPtr build_backend(const ConstructionSpec& spec, const Limits& limits) {
  switch (spec.kind) {
    case ConstructionKind::cyclic:
      return std::make_shared<CyclicBackend>(static_cast<std::uint64_t>(*spec.n));
    case ConstructionKind::elementary_abelian: {
      std::vector<BackendPtr> parts(static_cast<std::size_t>(*spec.n),
                                    std::make_shared<CyclicBackend>(*spec.p));
      return std::make_shared<DirectProductBackend>(std::move(parts));
    }
    case ConstructionKind::dihedral:
      return std::make_shared<DihedralBackend>(static_cast<std::uint64_t>(*spec.n));
    case ConstructionKind::quaternion8:
      return std::make_shared<QuaternionBackend>();
    case ConstructionKind::extraspecial:
      return std::make_shared<ExtraspecialBackend>(static_cast<std::uint32_t>(*spec.p),
                                                   static_cast<std::uint32_t>(*spec.l));
    case ConstructionKind::direct_product: {
      std::vector<BackendPtr> parts;
      for (const auto& f : factor_list(spec)) parts.push_back(build_backend(f, limits));
      return std::make_shared<DirectProductBackend>(std::move(parts));
    }
    case ConstructionKind::wreath_cyclic:
      return std::make_shared<WreathCyclicBackend>(build_backend(*spec.base, limits),
                                                   static_cast<std::uint32_t>(*spec.p));
    case ConstructionKind::affine_wreath:
      return std::make_shared<AffineWreathBackend>(static_cast<std::uint32_t>(*spec.p));
    case ConstructionKind::iterated_wreath_sylow: {
      auto p = static_cast<std::uint32_t>(*spec.p);
      auto depth = static_cast<std::uint32_t>(*spec.n);
      std::uint32_t points = 1;
      for (std::uint32_t i = 0; i < depth; ++i) points *= p;
      if (predicted_order(spec) > limits.order_cap) {
        fail(ErrorCode::enumeration_too_large,
             "iterated wreath of order " + std::to_string(predicted_order(spec)) +
                 " exceeds the enumeration cap");
      }
      return std::make_shared<PermutationBackend>(points, sylow_generators(p, depth), limits);
    }
  }
  fail(ErrorCode::invalid_parameter, "unhandled construction kind");
}

}  // namespace

std::string_view kind_name(ConstructionKind kind) {
  for (auto [k, text] : kKindNames)
    if (k == kind) return text;
  return "unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ConstructionSpec ConstructionSpec::cyclic(std::int64_t n) {
  ConstructionSpec s;
  s.kind = ConstructionKind::cyclic;
  s.n = n;
  return s;
}

ConstructionSpec ConstructionSpec::elementary_abelian(std::int64_t p, std::int64_t rank) {
  ConstructionSpec s;
  s.kind = ConstructionKind::elementary_abelian;
  s.p = p;
  s.n = rank;
  return s;
}

ConstructionSpec ConstructionSpec::dihedral(std::int64_t n) {
  ConstructionSpec s;
  s.kind = ConstructionKind::dihedral;
  s.n = n;
  return s;
}

ConstructionSpec ConstructionSpec::quaternion8() {
  ConstructionSpec s;
  s.kind = ConstructionKind::quaternion8;
  return s;
}

ConstructionSpec ConstructionSpec::extraspecial(std::int64_t p, std::int64_t l) {
  ConstructionSpec s;
  s.kind = ConstructionKind::extraspecial;
  s.p = p;
  s.l = l;
  return s;
}

ConstructionSpec ConstructionSpec::direct_product(std::vector<ConstructionSpec> factors) {
  ConstructionSpec s;
  s.kind = ConstructionKind::direct_product;
  s.factors = std::move(factors);
  return s;
}

ConstructionSpec ConstructionSpec::wreath_cyclic(ConstructionSpec base, std::int64_t p) {
  ConstructionSpec s;
  s.kind = ConstructionKind::wreath_cyclic;
  s.p = p;
  s.base = std::make_shared<const ConstructionSpec>(std::move(base));
  return s;
}

ConstructionSpec ConstructionSpec::affine_wreath(std::int64_t p) {
  ConstructionSpec s;
  s.kind = ConstructionKind::affine_wreath;
  s.p = p;
  return s;
}

ConstructionSpec ConstructionSpec::iterated_wreath_sylow(std::int64_t p, std::int64_t depth) {
  ConstructionSpec s;
  s.kind = ConstructionKind::iterated_wreath_sylow;
  s.p = p;
  s.n = depth;
  return s;
}

nlohmann::ordered_json ConstructionSpec::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(kind);
  if (p) j["p"] = *p;
  if (l) j["l"] = *l;
  if (n) j["n"] = *n;
  if (copies) j["copies"] = *copies;
  if (base) j["base"] = base->to_json();
  if (!factors.empty()) {
    j["factors"] = nlohmann::ordered_json::array();
    for (const auto& f : factors) j["factors"].push_back(f.to_json());
  }
  if (role) j["role"] = *role;
  return j;
}

std::string ConstructionSpec::to_string() const { return to_json().dump(); }

ConstructionSpec ConstructionSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::parse_error, "construction spec must be an object");
  ConstructionSpec s;
  auto integer = [&](const char* key) -> std::optional<std::int64_t> {
    if (!j.contains(key)) return std::nullopt;
    const auto& v = j.at(key);
    if (!v.is_number_integer()) {
      fail(ErrorCode::parse_error, std::string("field '") + key + "' must be an integer");
    }
    return v.get<std::int64_t>();
  };
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> known = {"kind", "p", "l", "n", "copies",
                                                   "base", "factors", "role"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      fail(ErrorCode::parse_error, "unknown field '" + key + "' in construction spec");
    }
  }
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    fail(ErrorCode::parse_error, "construction spec needs a string 'kind'");
  }
  s.kind = kind_from_name(j.at("kind").get<std::string>());
  s.p = integer("p");
  s.l = integer("l");
  s.n = integer("n");
  s.copies = integer("copies");
  if (j.contains("base")) s.base = std::make_shared<const ConstructionSpec>(from_json(j.at("base")));
  if (j.contains("factors")) {
    if (!j.at("factors").is_array()) fail(ErrorCode::parse_error, "'factors' must be an array");
    for (const auto& f : j.at("factors")) s.factors.push_back(from_json(f));
  }
  if (j.contains("role")) {
    if (!j.at("role").is_string()) fail(ErrorCode::parse_error, "'role' must be a string");
    s.role = j.at("role").get<std::string>();
  }
  validate(s);
  return s;
}

ConstructionSpec ConstructionSpec::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("construction spec: ") + e.what());
  }
  return from_json(j);
}

void validate(const ConstructionSpec& spec) {
  auto positive = [&](const std::optional<std::int64_t>& v, std::string_view field) {
    auto x = need(v, field, spec);
    if (x < 1) {
      fail(ErrorCode::invalid_parameter,
           std::string(kind_name(spec.kind)) + ": '" + std::string(field) + "' must be >= 1");
    }
    return x;
  };
  switch (spec.kind) {
    case ConstructionKind::cyclic:
      positive(spec.n, "n");
      break;
    case ConstructionKind::elementary_abelian:
      need_prime(spec.p, spec, false);
      positive(spec.n, "n");
      break;
    case ConstructionKind::dihedral:
      positive(spec.n, "n");
      break;
    case ConstructionKind::quaternion8:
      break;
    case ConstructionKind::extraspecial:
      need_prime(spec.p, spec, true);
      positive(spec.l, "l");
      break;
    case ConstructionKind::direct_product:
      if (spec.factors.empty()) {
        if (!spec.base || !spec.copies) {
          fail(ErrorCode::invalid_parameter, "direct-product needs 'factors' or 'base' + 'copies'");
        }
        positive(spec.copies, "copies");
        validate(*spec.base);
      } else {
        for (const auto& f : spec.factors) validate(f);
      }
      break;
    case ConstructionKind::wreath_cyclic:
      need_prime(spec.p, spec, true);
      if (!spec.base) fail(ErrorCode::invalid_parameter, "wreath-cyclic requires field 'base'");
      validate(*spec.base);
      break;
    case ConstructionKind::affine_wreath:
      need_prime(spec.p, spec, false);
      break;
    case ConstructionKind::iterated_wreath_sylow:
      need_prime(spec.p, spec, false);
      positive(spec.n, "n");
      break;
  }
  (void)predicted_order(spec);
}

std::uint64_t predicted_order(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::cyclic:
      return static_cast<std::uint64_t>(need(spec.n, "n", spec));
    case ConstructionKind::elementary_abelian:
      return pow_or_fail(need(spec.p, "p", spec), need(spec.n, "n", spec));
    case ConstructionKind::dihedral:
      return mul_or_fail(2, need(spec.n, "n", spec));
    case ConstructionKind::quaternion8:
      return 8;
    case ConstructionKind::extraspecial:
      return pow_or_fail(need(spec.p, "p", spec), 2 * need(spec.l, "l", spec) + 1);
    case ConstructionKind::direct_product: {
      std::uint64_t out = 1;
      for (const auto& f : factor_list(spec)) out = mul_or_fail(out, predicted_order(f));
      return out;
    }
    case ConstructionKind::wreath_cyclic: {
      auto p = static_cast<std::uint64_t>(need(spec.p, "p", spec));
      return mul_or_fail(pow_or_fail(predicted_order(*spec.base), p), p);
    }
    case ConstructionKind::affine_wreath: {
      auto p = static_cast<std::uint64_t>(need(spec.p, "p", spec));
      return mul_or_fail(pow_or_fail(p, p), p * (p - 1));
    }
    case ConstructionKind::iterated_wreath_sylow: {
      // |P_k| = p^(1 + p + ... + p^(k-1))
      auto p = static_cast<std::uint64_t>(need(spec.p, "p", spec));
      auto depth = need(spec.n, "n", spec);
      std::uint64_t exponent = 0, term = 1;
      for (std::int64_t i = 0; i < depth; ++i) {
        exponent += term;
        term = mul_or_fail(term, p);
      }
      return pow_or_fail(p, exponent);
    }
  }
  return 0;
}

Group build(const ConstructionSpec& spec, const Limits& limits) {
  validate(spec);
  Group g(build_backend(spec, limits));
  if (g.order() != predicted_order(spec)) {
    fail(ErrorCode::invalid_parameter, "built order " + std::to_string(g.order()) +
                                           " differs from predicted " +
                                           std::to_string(predicted_order(spec)));
  }
  if (spec.role) (void)distinguished_element(g, spec, *spec.role);
  return g;
}

namespace {

std::string base_witness(const GroupBackend& base, const ConstructionSpec& base_spec) {
  if (base_spec.kind == ConstructionKind::extraspecial) {
    return dynamic_cast<const ExtraspecialBackend&>(base).least_noncentral();
  }
  return base.generators().front();
}

[[noreturn]] void unsupported(const ConstructionSpec& spec, std::string_view role) {
  fail(ErrorCode::unsupported_role, "role '" + std::string(role) + "' is not defined for " +
                                        std::string(kind_name(spec.kind)));
}

}  // namespace

Element distinguished_element(const Group& built, const ConstructionSpec& spec,
                              std::string_view role) {
  if (role != "a-standard" && role != "b-double" && role != "noncentral-witness") {
    fail(ErrorCode::unsupported_role, "unknown role '" + std::string(role) + "'");
  }
  switch (spec.kind) {
    case ConstructionKind::wreath_cyclic: {
      if (role == "noncentral-witness") unsupported(spec, role);
      const auto* w = dynamic_cast<const WreathCyclicBackend*>(&built.backend());
      if (!w) fail(ErrorCode::group_mismatch, "group was not built from this spec");
      std::string id(w->base().width(), '\0');
      w->base().identity(reinterpret_cast<std::uint8_t*>(id.data()));
      std::vector<Element> parts(w->copies(), Element(id));
      parts[0] = Element(base_witness(w->base(), *spec.base));
      if (role == "b-double") parts[1] = parts[0];
      return w->make(parts, 0);
    }
    case ConstructionKind::affine_wreath: {
      if (role == "noncentral-witness") unsupported(spec, role);
      const auto* w = dynamic_cast<const AffineWreathBackend*>(&built.backend());
      if (!w) fail(ErrorCode::group_mismatch, "group was not built from this spec");
      std::vector<std::uint32_t> values(static_cast<std::size_t>(*spec.p), 0);
      values[0] = 1;
      if (role == "b-double") values[1] = 1;
      return w->make(values, 1, 0);
    }
    case ConstructionKind::extraspecial: {
      if (role != "noncentral-witness") unsupported(spec, role);
      const auto* e = dynamic_cast<const ExtraspecialBackend*>(&built.backend());
      if (!e) fail(ErrorCode::group_mismatch, "group was not built from this spec");
      return Element(e->least_noncentral());
    }
    default:
      unsupported(spec, role);
  }
}

Element distinguished_element(const ConstructionSpec& spec, std::string_view role) {
  return distinguished_element(build(spec), spec, role);
}

std::vector<ConstructionSpec> corpus(std::int64_t p, std::uint64_t max_order) {
  if (!is_prime(p)) fail(ErrorCode::invalid_prime, std::to_string(p) + " is not prime");
  using S = ConstructionSpec;
  std::vector<S> out;
  auto fits = [&](const S& spec) {
    try {
      return predicted_order(spec) <= max_order;
    } catch (const Error&) {
      return false;  // order beyond 63 bits
    }
  };
  auto add = [&](S spec) {
    if (fits(spec)) out.push_back(std::move(spec));
  };
  const auto up = static_cast<std::uint64_t>(p);

  // Abelian families.
  for (std::uint64_t q = up; q <= max_order; q *= up) add(S::cyclic(static_cast<std::int64_t>(q)));
  for (std::int64_t rank = 2; pow_or_fail(up, rank) <= max_order; ++rank) {
    add(S::elementary_abelian(p, rank));
    add(S::direct_product({S::cyclic(p * p), S::elementary_abelian(p, rank - 1)}));
  }

  // Abelian complements used to pad the nonabelian families.
  std::vector<S> pads;
  for (std::uint64_t q = up; q <= max_order; q *= up) pads.push_back(S::cyclic(static_cast<std::int64_t>(q)));
  for (std::int64_t rank = 2; pow_or_fail(up, rank) <= max_order; ++rank) {
    pads.push_back(S::elementary_abelian(p, rank));
  }
  auto with_pads = [&](const S& core) {
    if (!fits(core)) return;
    add(core);
    for (const auto& pad : pads) add(S::direct_product({core, pad}));
  };

  if (p == 2) {
    for (std::int64_t n = 4; 2 * static_cast<std::uint64_t>(n) <= max_order; n *= 2) {
      add(S::dihedral(n));
      add(S::direct_product({S::dihedral(n), S::cyclic(2)}));
    }
    add(S::quaternion8());
    add(S::direct_product({S::quaternion8(), S::cyclic(2)}));
    add(S::direct_product({S::dihedral(4), S::quaternion8()}));
    add(S::direct_product({S::dihedral(4), S::dihedral(4)}));
  } else {
    for (std::int64_t l = 1; l <= 2; ++l) with_pads(S::extraspecial(p, l));
    add(S::direct_product({S::extraspecial(p, 1), S::extraspecial(p, 1)}));
    for (const auto& base : {S::cyclic(p), S::cyclic(p * p), S::elementary_abelian(p, 2),
                             S::extraspecial(p, 1)}) {
      with_pads(S::wreath_cyclic(base, p));
    }
  }
  for (std::int64_t depth = 2; fits(S::iterated_wreath_sylow(p, depth)); ++depth) {
    add(S::iterated_wreath_sylow(p, depth));
  }

  std::stable_sort(out.begin(), out.end(), [](const S& x, const S& y) {
    return predicted_order(x) < predicted_order(y);
  });
  return out;
}

}  // namespace etagap
