#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "etagap/group.hpp"

namespace etagap {

/// A conjugacy class a^G. `elements` is sorted and the representative is
/// its least element.
struct ConjugacyClass {
  Group group;
  Element representative;
  std::vector<Element> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const Element& x) const;
};

/// [a,G] = { a^-1 a^g : g in G }, sorted.
struct CommutatorSet {
  Element base;
  std::vector<Element> elements;

  std::size_t size() const noexcept { return elements.size(); }
};

/// A G-invariant set split into its conjugacy classes, ascending by
/// representative.
struct ClassDecomposition {
  std::vector<Element> source;
  std::vector<ConjugacyClass> classes;

  std::size_t eta() const noexcept { return classes.size(); }
};

/// Orbit of `a` under conjugation by the generators.
ConjugacyClass conjugacy_class(const Group& g, const Element& a, const Limits& limits = {});

/// Every class of g, ascending by representative.
std::vector<ConjugacyClass> all_classes(const Group& g, const Limits& limits = {});

/// Element-to-class lookup built from a full class list.
class ClassIndex {
 public:
  explicit ClassIndex(std::span<const ConjugacyClass> classes);

  std::size_t class_of(const Element& x) const;
  std::size_t class_count() const noexcept { return class_count_; }

 private:
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  std::size_t class_count_;
};

CommutatorSet commutator_set(const Group& g, const Element& a, const Limits& limits = {});

/// Splits a G-invariant set into classes. Throws not-invariant if the set
/// is not a union of classes.
ClassDecomposition decompose(const Group& g, std::vector<Element> invariant_set,
                             const Limits& limits = {});

/// { uv : u in x, v in y }, sorted and deduplicated.
std::vector<Element> product_set(const ConjugacyClass& x, const ConjugacyClass& y);

/// x y split into classes. Throws group-mismatch for classes of different groups.
ClassDecomposition class_product(const ConjugacyClass& x, const ConjugacyClass& y,
                                 const Limits& limits = {});

/// eta(x y) through a precomputed class index instead of orbit BFS, and the
/// sorted ids of the classes met.
std::vector<std::size_t> class_product_ids(const ConjugacyClass& x, const ConjugacyClass& y,
                                           const ClassIndex& index);

/// { r i^2 + s i + t mod p : i in 0..p-1 }, sorted; obtained by completing
/// the square rather than evaluating at every i.
std::vector<std::int64_t> quadratic_image(std::int64_t r, std::int64_t s, std::int64_t t,
                                          std::int64_t p);

/// Hypothesis under which the eta = 1 criterion is applied.
enum class EtaOneHypothesis {
  /// |a^G| = |b^G| = |(ab)^G|
  equal_class_sizes,
  /// C_G(a) = C_G(b)
  equal_centralizers,
};

/// True iff [ab,G] = [a,G] = [b,G] and that set is a normal subgroup.
/// Under either hypothesis this holds exactly when a^G b^G = (ab)^G.
/// Throws precondition-violated naming the hypothesis when it fails.
bool eta_one_criterion(const Group& g, const Element& a, const Element& b,
                       EtaOneHypothesis hypothesis, const Limits& limits = {});

/// Distinct classes among { x n : n in central }. Throws not-central if some
/// element of `central` fails to commute with a generator.
std::vector<ConjugacyClass> central_translate_classes(const ConjugacyClass& x,
                                                      const Subgroup& central,
                                                      const Limits& limits = {});

/// a^G b^G == ab [a^b,G][b,G] as sets.
bool check_product_identity(const Group& g, const Element& a, const Element& b,
                            const Limits& limits = {});

/// True iff C_G(b) = C_G(a^x) for some x in G.
bool centralizer_conjugate_exists(const Group& g, const Element& a, const Element& b,
                                  const Limits& limits = {});

/// True iff x y contains a central element.
bool product_meets_center(const ConjugacyClass& x, const ConjugacyClass& y,
                          const Subgroup& center);

}  // namespace etagap
