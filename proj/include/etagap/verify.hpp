#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etagap/classes.hpp"
#include "etagap/construction.hpp"
#include "etagap/group.hpp"

namespace etagap {

struct RunOptions {
  Limits limits;
  unsigned jobs = 1;
  /// Record wall-clock time in reports. Off by default so that report
  /// files are reproducible byte for byte.
  bool timing = false;
};

struct Violation {
  Element a;
  Element b;
  std::size_t eta = 0;
  std::string expected;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Witness {
  std::string group;
  Element a;
  Element b;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SpectrumEntry {
  std::uint64_t count = 0;
  Witness witness;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

using Spectrum = std::map<std::size_t, SpectrumEntry>;

/// Adds `extra` into `into`. Counts add; an existing witness is kept, so
/// merging in corpus order keeps the earliest witness.
void merge_spectrum(Spectrum& into, const Spectrum& extra);

/// Outcome of checking one constraint over one group.
///
/// `theorem` is one of "A", "B", "size2", "wreath-square",
/// "affine-square", "wreath-mixed" or "spectrum". `group` is the group's
/// description as compact JSON.
struct TheoremReport {
  std::string theorem;
  std::string group;
  std::int64_t p = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<Violation> violations;
  Spectrum spectrum;
  std::optional<std::int64_t> elapsed_ms;

  bool consistent() const noexcept { return violations.empty(); }

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// Compact JSON describing a group source that is not a construction, e.g.
/// {"source":"cayley-table","path":"d4.tbl"}.
std::string source_label(std::string_view source, std::string_view path);

/// Classes of size exactly `size`, ascending by representative.
std::vector<ConjugacyClass> classes_of_size(const Group& g, std::size_t size,
                                            const Limits& limits = {});

/// Every ordered pair of size-p classes: either eta = 1 (and the product is
/// (ab)^G) or eta >= (p+1)/2. Tallies eta values into the spectrum.
TheoremReport verify_theorem_a(const Group& g, std::int64_t p, const std::string& group_label,
                               const RunOptions& options = {});

/// Every size-p class square: either eta = 1 with [a,G] = [a^2,G] a normal
/// subgroup, or eta = (p+1)/2 with every class of size p.
TheoremReport verify_theorem_b(const Group& g, std::int64_t p, const std::string& group_label,
                               const RunOptions& options = {});

/// Every ordered pair of size-2 classes has eta in {1, 2}.
TheoremReport verify_size_two(const Group& g, const std::string& group_label,
                              const RunOptions& options = {});

/// One reproduced worked example with the measured quantities.
struct Reproduction {
  TheoremReport report;
  std::size_t class_size = 0;
  std::size_t eta = 0;
  std::vector<std::size_t> class_sizes;
};

/// Worked examples at prime p, in order:
///   wreath over C_p: |a^G| = p, eta(a^G a^G) = (p+1)/2
///   wreath over the extraspecial group of order p^3: |a^G| = p^2, same eta
///   wreath over C_p with b = b-double: eta(a^G b^G) = p - 1
///   affine wreath: |a^G| = p, a^G a^G = (a^2)^G u (c,c,e,...,e)^G
/// Only orbits are enumerated, so the orders of the wreath groups are not
/// bounded by the enumeration cap; orbits are.
std::vector<Reproduction> reproduce_examples(std::int64_t p, const RunOptions& options = {});

struct SpectrumReport {
  std::int64_t p = 0;
  Spectrum entries;
  std::uint64_t scanned = 0;
  std::vector<TheoremReport> per_group;
  /// Set when some group produced 1 < eta < (p+1)/2; the scan stops there.
  std::optional<TheoremReport> counterexample;
};

/// Tallies eta over ordered pairs of size-p classes across corpus(p, max_order).
SpectrumReport eta_spectrum(std::int64_t p, std::uint64_t max_order,
                            const RunOptions& options = {});

bool is_power_of(std::uint64_t n, std::int64_t p);

}  // namespace etagap
