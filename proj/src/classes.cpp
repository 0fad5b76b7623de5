#include "etagap/classes.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "etagap/construction.hpp"

namespace etagap {

bool ConjugacyClass::contains(const Element& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

ConjugacyClass conjugacy_class(const Group& g, const Element& a, const Limits& limits) {
  g.check(a);
  std::unordered_set<Element, ElementHash> seen{a};
  std::vector<Element> orbit{a};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      Element y = g.conjugate_unchecked(orbit[k], i);
      if (seen.insert(y).second) {
        if (seen.size() > limits.order_cap) {
          fail(ErrorCode::enumeration_too_large,
               "conjugacy class exceeds the enumeration cap of " +
                   std::to_string(limits.order_cap));
        }
        orbit.push_back(std::move(y));
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  Element rep = orbit.front();
  return ConjugacyClass{g, std::move(rep), std::move(orbit)};
}

std::vector<ConjugacyClass> all_classes(const Group& g, const Limits& limits) {
  const auto& all = g.elements(limits);
  std::unordered_set<Element, ElementHash> assigned;
  assigned.reserve(all.size());
  std::vector<ConjugacyClass> out;
  for (const auto& x : all) {
    if (assigned.count(x)) continue;
    auto cls = conjugacy_class(g, x, limits);
    for (const auto& y : cls.elements) assigned.insert(y);
    out.push_back(std::move(cls));
  }
  return out;
}

ClassIndex::ClassIndex(std::span<const ConjugacyClass> classes) : class_count_(classes.size()) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const auto& x : classes[i].elements) index_.emplace(x, i);
  }
}

std::size_t ClassIndex::class_of(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) fail(ErrorCode::foreign_element, "element " + x.hex() + " is not indexed");
  return it->second;
}

CommutatorSet commutator_set(const Group& g, const Element& a, const Limits& limits) {
  auto cls = conjugacy_class(g, a, limits);
  const Element a_inv = g.inverse(a);
  std::vector<Element> out;
  out.reserve(cls.size());
  for (const auto& x : cls.elements) out.push_back(g.multiply_unchecked(a_inv, x));
  std::sort(out.begin(), out.end());
  return CommutatorSet{a, std::move(out)};
}

ClassDecomposition decompose(const Group& g, std::vector<Element> invariant_set,
                             const Limits& limits) {
  std::sort(invariant_set.begin(), invariant_set.end());
  invariant_set.erase(std::unique(invariant_set.begin(), invariant_set.end()), invariant_set.end());
  std::vector<char> assigned(invariant_set.size(), 0);
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < invariant_set.size(); ++i) {
    if (assigned[i]) continue;
    auto cls = conjugacy_class(g, invariant_set[i], limits);
    for (const auto& y : cls.elements) {
      auto it = std::lower_bound(invariant_set.begin(), invariant_set.end(), y);
      if (it == invariant_set.end() || *it != y) {
        fail(ErrorCode::not_invariant,
             "set is not a union of classes: conjugate " + y.hex() + " of " +
                 invariant_set[i].hex() + " is missing");
      }
      assigned[static_cast<std::size_t>(it - invariant_set.begin())] = 1;
    }
    classes.push_back(std::move(cls));
  }
  return ClassDecomposition{std::move(invariant_set), std::move(classes)};
}

std::vector<Element> product_set(const ConjugacyClass& x, const ConjugacyClass& y) {
  if (!x.group.same_as(y.group)) {
    fail(ErrorCode::group_mismatch, "class product of classes from different groups");
  }
  const Group& g = x.group;
  std::vector<Element> out;
  out.reserve(x.size() * y.size());
  Element prod;
  for (const auto& u : x.elements) {
    for (const auto& v : y.elements) {
      g.multiply_into(u, v, prod);
      out.push_back(prod);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClassDecomposition class_product(const ConjugacyClass& x, const ConjugacyClass& y,
                                 const Limits& limits) {
  return decompose(x.group, product_set(x, y), limits);
}

std::vector<std::size_t> class_product_ids(const ConjugacyClass& x, const ConjugacyClass& y,
                                           const ClassIndex& index) {
  if (!x.group.same_as(y.group)) {
    fail(ErrorCode::group_mismatch, "class product of classes from different groups");
  }
  const Group& g = x.group;
  std::vector<std::size_t> ids;
  Element prod;
  for (const auto& u : x.elements) {
    for (const auto& v : y.elements) {
      g.multiply_into(u, v, prod);
      auto id = index.class_of(prod);
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t out = 1;
  base = mod(base, p);
  while (exp > 0) {
    if (exp & 1) out = out * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> quadratic_image(std::int64_t r, std::int64_t s, std::int64_t t,
                                          std::int64_t p) {
  if (p < 3 || p > 3037000499LL || !is_prime(p)) {
    fail(ErrorCode::invalid_prime, std::to_string(p) + " is not an odd prime");
  }
  r = mod(r, p);
  s = mod(s, p);
  t = mod(t, p);
  std::vector<std::int64_t> out;
  if (r == 0) {
    if (s == 0) return {t};
    out.resize(static_cast<std::size_t>(p));
    for (std::int64_t v = 0; v < p; ++v) out[static_cast<std::size_t>(v)] = v;
    return out;
  }
  // r i^2 + s i + t = r (i + h)^2 + k with h = s / 2r and k = t - r h^2, so
  // the image is r * {squares} + k.
  const std::int64_t h = s * pow_mod(2 * r, p - 2, p) % p;
  const std::int64_t k = mod(t - r * (h * h % p), p);
  for (std::int64_t j = 0; j <= (p - 1) / 2; ++j) {
    out.push_back((r * (j * j % p) + k) % p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_subgroup_set(const Group& g, const std::vector<Element>& set) {
  if (!std::binary_search(set.begin(), set.end(), g.identity())) return false;
  Element prod;
  for (const auto& u : set) {
    for (const auto& v : set) {
      g.multiply_into(u, v, prod);
      if (!std::binary_search(set.begin(), set.end(), prod)) return false;
    }
  }
  return true;
}

bool is_invariant_set(const Group& g, const std::vector<Element>& set) {
  for (const auto& u : set) {
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      if (!std::binary_search(set.begin(), set.end(), g.conjugate_unchecked(u, i))) return false;
    }
  }
  return true;
}

}  // namespace

bool eta_one_criterion(const Group& g, const Element& a, const Element& b,
                       EtaOneHypothesis hypothesis, const Limits& limits) {
  const Element ab = g.multiply(a, b);
  if (hypothesis == EtaOneHypothesis::equal_class_sizes) {
    auto sa = conjugacy_class(g, a, limits).size();
    auto sb = conjugacy_class(g, b, limits).size();
    auto sab = conjugacy_class(g, ab, limits).size();
    if (sa != sb || sb != sab) {
      fail(ErrorCode::precondition_violated,
           "hypothesis |a^G| = |b^G| = |(ab)^G| fails: sizes " + std::to_string(sa) + ", " +
               std::to_string(sb) + ", " + std::to_string(sab));
    }
  } else {
    if (centralizer(g, a, limits) != centralizer(g, b, limits)) {
      fail(ErrorCode::precondition_violated, "hypothesis C_G(a) = C_G(b) fails");
    }
  }
  auto ca = commutator_set(g, a, limits).elements;
  auto cb = commutator_set(g, b, limits).elements;
  auto cab = commutator_set(g, ab, limits).elements;
  if (ca != cab || cb != cab) return false;
  return is_subgroup_set(g, cab) && is_invariant_set(g, cab);
}

std::vector<ConjugacyClass> central_translate_classes(const ConjugacyClass& x,
                                                      const Subgroup& central,
                                                      const Limits& limits) {
  const Group& g = x.group;
  if (!central.parent().same_as(g)) {
    fail(ErrorCode::group_mismatch, "subgroup of a different group");
  }
  for (const auto& n : central.elements()) {
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      if (g.conjugate_unchecked(n, i) != n) {
        fail(ErrorCode::not_central, "element " + n.hex() + " is not central");
      }
    }
  }
  std::vector<ConjugacyClass> out;
  for (const auto& n : central.elements()) {
    Element y = g.multiply_unchecked(x.representative, n);
    bool known = std::any_of(out.begin(), out.end(),
                             [&](const ConjugacyClass& c) { return c.contains(y); });
    if (!known) out.push_back(conjugacy_class(g, y, limits));
  }
  std::sort(out.begin(), out.end(), [](const ConjugacyClass& u, const ConjugacyClass& v) {
    return u.representative < v.representative;
  });
  return out;
}

bool check_product_identity(const Group& g, const Element& a, const Element& b,
                            const Limits& limits) {
  auto lhs = product_set(conjugacy_class(g, a, limits), conjugacy_class(g, b, limits));
  const Element a_b = g.conjugate(a, b);
  const Element ab = g.multiply(a, b);
  auto left = commutator_set(g, a_b, limits).elements;
  auto right = commutator_set(g, b, limits).elements;
  std::vector<Element> rhs;
  rhs.reserve(left.size() * right.size());
  for (const auto& u : left) {
    Element abu = g.multiply_unchecked(ab, u);
    for (const auto& v : right) rhs.push_back(g.multiply_unchecked(abu, v));
  }
  std::sort(rhs.begin(), rhs.end());
  rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
  return lhs == rhs;
}

bool centralizer_conjugate_exists(const Group& g, const Element& a, const Element& b,
                                  const Limits& limits) {
  auto cb = centralizer(g, b, limits);
  if (centralizer(g, a, limits).size() != cb.size()) return false;
  for (const auto& conj : conjugacy_class(g, a, limits).elements) {
    if (centralizer(g, conj, limits) == cb) return true;
  }
  return false;
}

bool product_meets_center(const ConjugacyClass& x, const ConjugacyClass& y,
                          const Subgroup& center) {
  for (const auto& z : product_set(x, y)) {
    if (center.contains(z)) return true;
  }
  return false;
}

}  // namespace etagap
