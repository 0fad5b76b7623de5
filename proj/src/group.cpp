#include "etagap/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "etagap/cayley.hpp"

namespace etagap {

struct Group::Shared {
  std::vector<Element> generators;
  std::vector<Element> generator_inverses;
  Element identity;
  std::once_flag enumerated;
  std::vector<Element> elements;
};

Group::Group(std::shared_ptr<const GroupBackend> backend)
    : backend_(std::move(backend)), shared_(std::make_shared<Shared>()) {
  if (!backend_) fail(ErrorCode::invalid_parameter, "null group backend");
  order_ = backend_->order();
  width_ = backend_->width();
  if (order_ < 1) fail(ErrorCode::invalid_parameter, "group order must be positive");

  std::string id(width_, '\0');
  backend_->identity(reinterpret_cast<std::uint8_t*>(id.data()));
  shared_->identity = Element(std::move(id));

  for (auto& bytes : backend_->generators()) {
    Element gen(std::move(bytes));
    check(gen);
    shared_->generator_inverses.push_back(inverse(gen));
    shared_->generators.push_back(std::move(gen));
  }
  if (shared_->generators.empty()) {
    shared_->generators.push_back(shared_->identity);
    shared_->generator_inverses.push_back(shared_->identity);
  }
}

const std::vector<Element>& Group::generators() const noexcept { return shared_->generators; }

const std::vector<Element>& Group::generator_inverses() const noexcept {
  return shared_->generator_inverses;
}

const Element& Group::identity() const noexcept { return shared_->identity; }

bool Group::contains(const Element& x) const noexcept {
  return x.width() == width_ && backend_->valid(x.data());
}

void Group::check(const Element& x) const {
  if (!contains(x)) {
    fail(ErrorCode::foreign_element,
         "element " + x.hex() + " is not a valid " + std::string(kind()) + " encoding");
  }
}

void Group::multiply_into(const Element& x, const Element& y, Element& out) const {
  if (out.width() != width_) out = Element(std::string(width_, '\0'));
  backend_->multiply(x.data(), y.data(), out.mutable_data());
}

Element Group::multiply_unchecked(const Element& x, const Element& y) const {
  Element out(std::string(width_, '\0'));
  backend_->multiply(x.data(), y.data(), out.mutable_data());
  return out;
}

Element Group::multiply(const Element& x, const Element& y) const {
  check(x);
  check(y);
  return multiply_unchecked(x, y);
}

Element Group::inverse(const Element& x) const {
  check(x);
  Element out(std::string(width_, '\0'));
  backend_->inverse(x.data(), out.mutable_data());
  return out;
}

Element Group::conjugate(const Element& a, const Element& x) const {
  check(a);
  check(x);
  return multiply_unchecked(multiply_unchecked(inverse(x), a), x);
}

Element Group::conjugate_unchecked(const Element& a, std::size_t generator_index) const {
  const auto& gens = shared_->generators;
  const auto& invs = shared_->generator_inverses;
  return multiply_unchecked(multiply_unchecked(invs[generator_index], a), gens[generator_index]);
}

Element Group::commutator(const Element& a, const Element& x) const {
  return multiply_unchecked(inverse(a), conjugate(a, x));
}

Element Group::power(const Element& x, std::int64_t k) const {
  check(x);
  Element base = k < 0 ? inverse(x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  if (order_ > 0) e %= order_;
  Element result = identity();
  while (e > 0) {
    if (e & 1) result = multiply_unchecked(result, base);
    base = multiply_unchecked(base, base);
    e >>= 1;
  }
  return result;
}

namespace {

void require_enumerable(std::uint64_t order, const Limits& limits) {
  if (order > limits.order_cap) {
    fail(ErrorCode::enumeration_too_large,
         "group of order " + std::to_string(order) + " exceeds the enumeration cap of " +
             std::to_string(limits.order_cap));
  }
}

std::vector<Element> bfs_closure(const Group& g, std::span<const Element> seed,
                                 std::uint64_t cap) {
  std::unordered_set<Element, ElementHash> seen;
  std::deque<Element> queue;
  seen.insert(g.identity());
  queue.push_back(g.identity());
  Element product;
  while (!queue.empty()) {
    Element x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : seed) {
      g.multiply_into(x, s, product);
      if (seen.insert(product).second) {
        if (seen.size() > cap) {
          fail(ErrorCode::enumeration_too_large,
               "closure exceeds the enumeration cap of " + std::to_string(cap));
        }
        queue.push_back(product);
      }
    }
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<Element>& Group::elements(const Limits& limits) const {
  require_enumerable(order_, limits);
  std::call_once(shared_->enumerated, [&] {
    auto all = bfs_closure(*this, shared_->generators, order_);
    if (all.size() != order_) {
      fail(ErrorCode::format_error, "generators span " + std::to_string(all.size()) +
                                        " elements but the group order is " +
                                        std::to_string(order_));
    }
    shared_->elements = std::move(all);
  });
  return shared_->elements;
}

Subgroup::Subgroup(Group parent, std::vector<Element> sorted_elements)
    : parent_(std::move(parent)), elements_(std::move(sorted_elements)) {}

bool Subgroup::contains(const Element& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::is_normal() const {
  for (const auto& h : elements_) {
    for (std::size_t i = 0; i < parent_.generators().size(); ++i) {
      if (!contains(parent_.conjugate_unchecked(h, i))) return false;
    }
  }
  return true;
}

bool Subgroup::is_central() const {
  for (const auto& h : elements_) {
    for (std::size_t i = 0; i < parent_.generators().size(); ++i) {
      if (parent_.conjugate_unchecked(h, i) != h) return false;
    }
  }
  return true;
}

Subgroup closure(const Group& g, std::span<const Element> seed, const Limits& limits) {
  if (seed.empty()) fail(ErrorCode::invalid_parameter, "closure needs a nonempty seed");
  for (const auto& s : seed) g.check(s);
  return Subgroup(g, bfs_closure(g, seed, limits.order_cap));
}

Subgroup centralizer(const Group& g, const Element& a, const Limits& limits) {
  g.check(a);
  std::vector<Element> out;
  for (const auto& x : g.elements(limits)) {
    if (g.multiply_unchecked(a, x) == g.multiply_unchecked(x, a)) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup center(const Group& g, const Limits& limits) {
  std::vector<Element> out;
  for (const auto& z : g.elements(limits)) {
    bool central = true;
    for (std::size_t i = 0; i < g.generators().size() && central; ++i) {
      central = g.conjugate_unchecked(z, i) == z;
    }
    if (central) out.push_back(z);
  }
  return Subgroup(g, std::move(out));
}

Quotient::Quotient(Group parent, Subgroup kernel, Group group,
                   std::vector<Element> coset_representatives,
                   std::vector<std::uint32_t> coset_of_element)
    : parent_(std::move(parent)),
      kernel_(std::move(kernel)),
      group_(std::move(group)),
      representatives_(std::move(coset_representatives)),
      coset_of_(std::move(coset_of_element)) {}

Element Quotient::project(const Element& x) const {
  parent_.check(x);
  const auto& all = parent_.elements(Limits{parent_.order()});
  auto it = std::lower_bound(all.begin(), all.end(), x);
  return CayleyBackend::encode(coset_of_[static_cast<std::size_t>(it - all.begin())]);
}

const Element& Quotient::representative(const Element& q) const {
  group_.check(q);
  return representatives_[CayleyBackend::decode(q)];
}

Quotient quotient_group(const Group& g, const Subgroup& n, const Limits& limits) {
  if (!n.parent().same_as(g)) fail(ErrorCode::group_mismatch, "subgroup of a different group");
  if (!n.is_normal()) fail(ErrorCode::not_normal, "quotient by a subgroup that is not normal");
  const auto& all = g.elements(limits);
  const std::uint64_t q = g.order() / n.size();
  if (q > kQuotientTableLimit) {
    fail(ErrorCode::enumeration_too_large,
         "quotient of order " + std::to_string(q) + " exceeds the table limit");
  }

  // Cosets in ascending order of least element; then move N's coset to 0.
  std::unordered_map<Element, std::uint32_t, ElementHash> position;
  position.reserve(all.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) position.emplace(all[i], i);
  constexpr std::uint32_t kUnassigned = ~0u;
  std::vector<std::uint32_t> coset_of(all.size(), kUnassigned);
  std::vector<Element> reps;
  for (std::uint32_t i = 0; i < all.size(); ++i) {
    if (coset_of[i] != kUnassigned) continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(all[i]);
    for (const auto& k : n.elements()) {
      coset_of[position.at(g.multiply_unchecked(all[i], k))] = id;
    }
  }
  const std::uint32_t kernel_id = coset_of[position.at(g.identity())];
  std::vector<std::uint32_t> relabel(reps.size());
  {
    std::uint32_t next = 1;
    for (std::uint32_t i = 0; i < reps.size(); ++i) relabel[i] = i == kernel_id ? 0 : next++;
  }
  std::vector<Element> ordered_reps(reps.size());
  for (std::uint32_t i = 0; i < reps.size(); ++i) ordered_reps[relabel[i]] = reps[i];
  for (auto& c : coset_of) c = relabel[c];

  const auto size = static_cast<std::uint32_t>(ordered_reps.size());
  std::vector<std::uint32_t> table(static_cast<std::size_t>(size) * size);
  for (std::uint32_t i = 0; i < size; ++i) {
    for (std::uint32_t j = 0; j < size; ++j) {
      auto prod = g.multiply_unchecked(ordered_reps[i], ordered_reps[j]);
      table[static_cast<std::size_t>(i) * size + j] = coset_of[position.at(prod)];
    }
  }
  std::vector<std::uint32_t> gens;
  for (const auto& gen : g.generators()) {
    auto c = coset_of[position.at(gen)];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  if (gens.empty()) gens.push_back(0);

  Group quotient(std::make_shared<CayleyBackend>(std::move(table), std::move(gens)));
  return Quotient(g, n, std::move(quotient), std::move(ordered_reps), std::move(coset_of));
}

}  // namespace etagap
