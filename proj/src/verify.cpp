#include "etagap/verify.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

#include "etagap/parallel.hpp"

namespace etagap {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(Clock::now()) {}

  std::optional<std::int64_t> elapsed_ms() const {
    if (!enabled_) return std::nullopt;
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

 private:
  bool enabled_;
  Clock::time_point start_;
};

void require_odd_p_group(const Group& g, std::int64_t p) {
  if (p == 2) fail(ErrorCode::even_prime, "this check needs an odd prime, got p = 2");
  if (!is_prime(p)) fail(ErrorCode::invalid_prime, std::to_string(p) + " is not prime");
  if (!is_power_of(g.order(), p)) {
    fail(ErrorCode::not_a_p_group, "group of order " + std::to_string(g.order()) +
                                       " is not a " + std::to_string(p) + "-group");
  }
}

void tally(Spectrum& spectrum, std::size_t eta, const Witness& witness) {
  auto& entry = spectrum[eta];
  if (entry.count++ == 0) entry.witness = witness;
}

/// eta of every ordered pair (x, y) of `classes`, row-major, with a flag
/// recording whether eta = 1 products are exactly (ab)^G.
struct PairOutcome {
  std::size_t eta = 0;
  bool single_is_ab = true;
};

std::vector<PairOutcome> all_pair_products(const Group& g, std::span<const ConjugacyClass> classes,
                                           const ClassIndex& index, unsigned jobs) {
  const std::size_t n = classes.size();
  std::vector<PairOutcome> out(n * n);
  parallel_for(n, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto ids = class_product_ids(classes[i], classes[j], index);
      PairOutcome o;
      o.eta = ids.size();
      if (o.eta == 1) {
        auto ab = g.multiply_unchecked(classes[i].representative, classes[j].representative);
        o.single_is_ab = ids.front() == index.class_of(ab);
      }
      out[i * n + j] = o;
    }
  });
  return out;
}

std::string describe_sizes(const ClassDecomposition& d) {
  std::string s;
  for (const auto& c : d.classes) s += (s.empty() ? "" : ",") + std::to_string(c.size());
  return "[" + s + "]";
}

}  // namespace

void merge_spectrum(Spectrum& into, const Spectrum& extra) {
  for (const auto& [eta, entry] : extra) {
    auto& target = into[eta];
    if (target.count == 0) target.witness = entry.witness;
    target.count += entry.count;
  }
}

std::string source_label(std::string_view source, std::string_view path) {
  nlohmann::ordered_json j;
  j["source"] = source;
  j["path"] = path;
  return j.dump();
}

bool is_power_of(std::uint64_t n, std::int64_t p) {
  if (p < 2 || n == 0) return false;
  while (n % static_cast<std::uint64_t>(p) == 0) n /= static_cast<std::uint64_t>(p);
  return n == 1;
}

std::vector<ConjugacyClass> classes_of_size(const Group& g, std::size_t size,
                                            const Limits& limits) {
  std::vector<ConjugacyClass> out;
  for (auto& c : all_classes(g, limits))
    if (c.size() == size) out.push_back(std::move(c));
  return out;
}

TheoremReport verify_theorem_a(const Group& g, std::int64_t p, const std::string& group_label,
                               const RunOptions& options) {
  require_odd_p_group(g, p);
  Stopwatch clock(options.timing);
  const auto classes = all_classes(g, options.limits);
  const ClassIndex index(classes);
  std::vector<ConjugacyClass> qualifying;
  for (const auto& c : classes)
    if (c.size() == static_cast<std::size_t>(p)) qualifying.push_back(c);

  const auto outcomes = all_pair_products(g, qualifying, index, options.jobs);
  const std::size_t bound = static_cast<std::size_t>((p + 1) / 2);
  TheoremReport report{"A", group_label, p, outcomes.size(), {}, {}, std::nullopt};
  const std::size_t n = qualifying.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& o = outcomes[i * n + j];
      const auto& a = qualifying[i].representative;
      const auto& b = qualifying[j].representative;
      tally(report.spectrum, o.eta, Witness{group_label, a, b});
      bool ok = o.eta == 1 ? o.single_is_ab : o.eta >= bound;
      if (!ok) {
        // Re-derive through orbit decomposition before reporting.
        auto eta = class_product(qualifying[i], qualifying[j], options.limits).eta();
        report.violations.push_back(
            {a, b, eta, "eta = 1 with product (ab)^G, or eta >= " + std::to_string(bound)});
      }
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

TheoremReport verify_theorem_b(const Group& g, std::int64_t p, const std::string& group_label,
                               const RunOptions& options) {
  require_odd_p_group(g, p);
  Stopwatch clock(options.timing);
  const auto qualifying = classes_of_size(g, static_cast<std::size_t>(p), options.limits);
  const std::size_t half = static_cast<std::size_t>((p + 1) / 2);

  struct Outcome {
    std::size_t eta = 0;
    bool ok = false;
  };
  std::vector<Outcome> outcomes(qualifying.size());
  parallel_for(qualifying.size(), options.jobs, [&](std::size_t i) {
    const auto& x = qualifying[i];
    auto d = class_product(x, x, options.limits);
    Outcome o{d.eta(), false};
    if (o.eta == 1) {
      const auto& a = x.representative;
      auto ca = commutator_set(g, a, options.limits).elements;
      auto ca2 = commutator_set(g, g.multiply_unchecked(a, a), options.limits).elements;
      if (ca == ca2) {
        auto sub = closure(g, ca, options.limits);
        o.ok = sub.elements() == ca && sub.is_normal();
      }
    } else if (o.eta == half) {
      o.ok = std::all_of(d.classes.begin(), d.classes.end(), [&](const ConjugacyClass& c) {
        return c.size() == static_cast<std::size_t>(p);
      });
    }
    outcomes[i] = o;
  });

  TheoremReport report{"B", group_label, p, qualifying.size(), {}, {}, std::nullopt};
  for (std::size_t i = 0; i < qualifying.size(); ++i) {
    const auto& a = qualifying[i].representative;
    tally(report.spectrum, outcomes[i].eta, Witness{group_label, a, a});
    if (!outcomes[i].ok) {
      report.violations.push_back(
          {a, a, outcomes[i].eta,
           "eta = 1 with [a,G] = [a^2,G] a normal subgroup, or eta = " + std::to_string(half) +
               " with all classes of size " + std::to_string(p)});
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

TheoremReport verify_size_two(const Group& g, const std::string& group_label,
                              const RunOptions& options) {
  Stopwatch clock(options.timing);
  const auto classes = all_classes(g, options.limits);
  const ClassIndex index(classes);
  std::vector<ConjugacyClass> qualifying;
  for (const auto& c : classes)
    if (c.size() == 2) qualifying.push_back(c);
  const auto outcomes = all_pair_products(g, qualifying, index, options.jobs);
  TheoremReport report{"size2", group_label, 2, outcomes.size(), {}, {}, std::nullopt};
  const std::size_t n = qualifying.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& o = outcomes[i * n + j];
      const auto& a = qualifying[i].representative;
      const auto& b = qualifying[j].representative;
      tally(report.spectrum, o.eta, Witness{group_label, a, b});
      bool ok = (o.eta == 1 && o.single_is_ab) || o.eta == 2;
      if (!ok) {
        auto eta = class_product(qualifying[i], qualifying[j], options.limits).eta();
        report.violations.push_back({a, b, eta, "eta = 1 with product (ab)^G, or eta = 2"});
      }
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

namespace {

Reproduction reproduce_one(const std::string& theorem, const ConstructionSpec& spec,
                           std::string_view role_b, std::int64_t p, std::size_t want_size,
                           std::size_t want_eta, const RunOptions& options) {
  Stopwatch clock(options.timing);
  const Group g = build(spec, options.limits);
  const std::string label = spec.to_string();
  const Element a = distinguished_element(g, spec, "a-standard");
  const Element b = distinguished_element(g, spec, role_b);
  const auto xa = conjugacy_class(g, a, options.limits);
  const auto xb = role_b == "a-standard" ? xa : conjugacy_class(g, b, options.limits);
  const auto d = class_product(xa, xb, options.limits);

  Reproduction r;
  r.class_size = xa.size();
  r.eta = d.eta();
  for (const auto& c : d.classes) r.class_sizes.push_back(c.size());
  r.report = TheoremReport{theorem, label, p, 1, {}, {}, std::nullopt};
  tally(r.report.spectrum, r.eta, Witness{label, a, b});
  if (r.class_size != want_size || r.eta != want_eta) {
    r.report.violations.push_back(
        {a, b, r.eta,
         "|a^G| = " + std::to_string(want_size) + " and eta = " + std::to_string(want_eta) +
             " (observed |a^G| = " + std::to_string(r.class_size) + ")"});
  }

  if (spec.kind == ConstructionKind::wreath_cyclic) {
    // The base element must satisfy g0^G0 g0^G0 = (g0^2)^G0.
    const Group base = build(*spec.base, options.limits);
    const Element g0 = spec.base->kind == ConstructionKind::extraspecial
                           ? distinguished_element(base, *spec.base, "noncentral-witness")
                           : base.generators().front();
    const auto x0 = conjugacy_class(base, g0, options.limits);
    const auto d0 = class_product(x0, x0, options.limits);
    if (d0.eta() != 1 || !d0.classes.front().contains(base.multiply(g0, g0))) {
      r.report.violations.push_back(
          {a, b, r.eta, "base element with g0^G0 g0^G0 = (g0^2)^G0 (observed eta " +
                            std::to_string(d0.eta()) + " in the base)"});
    }
  }
  if (spec.kind == ConstructionKind::affine_wreath) {
    // a^G a^G = (a^2)^G u (c,c,e,...,e)^G with sizes p and p(p-1)/2.
    const auto square = conjugacy_class(g, g.multiply(a, a), options.limits);
    const auto pair = conjugacy_class(g, distinguished_element(g, spec, "b-double"), options.limits);
    std::vector<std::vector<Element>> want{square.elements, pair.elements};
    std::sort(want.begin(), want.end());
    std::vector<std::vector<Element>> got;
    for (const auto& c : d.classes) got.push_back(c.elements);
    std::sort(got.begin(), got.end());
    const auto up = static_cast<std::size_t>(p);
    if (got != want || square.size() != up || pair.size() != up * (up - 1) / 2) {
      r.report.violations.push_back(
          {a, b, r.eta, "a^G a^G = (a^2)^G u (c,c,e,...,e)^G with class sizes " +
                            std::to_string(up) + " and " + std::to_string(up * (up - 1) / 2) +
                            " (observed " + describe_sizes(d) + ")"});
    }
  }
  r.report.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace

std::vector<Reproduction> reproduce_examples(std::int64_t p, const RunOptions& options) {
  if (p == 2) fail(ErrorCode::even_prime, "worked examples need an odd prime");
  if (!is_prime(p) || p > 251) fail(ErrorCode::invalid_prime, std::to_string(p) + " is not an odd prime below 256");
  using S = ConstructionSpec;
  const auto up = static_cast<std::size_t>(p);
  const std::size_t half = (up + 1) / 2;
  std::vector<Reproduction> out;
  out.push_back(reproduce_one("wreath-square", S::wreath_cyclic(S::cyclic(p), p), "a-standard", p,
                              up, half, options));
  out.push_back(reproduce_one("wreath-square", S::wreath_cyclic(S::extraspecial(p, 1), p),
                              "a-standard", p, up * up, half, options));
  out.push_back(reproduce_one("wreath-mixed", S::wreath_cyclic(S::cyclic(p), p), "b-double", p, up,
                              up - 1, options));
  out.push_back(reproduce_one("affine-square", S::affine_wreath(p), "a-standard", p, up, 2,
                              options));
  return out;
}

SpectrumReport eta_spectrum(std::int64_t p, std::uint64_t max_order, const RunOptions& options) {
  if (p == 2) fail(ErrorCode::even_prime, "the spectrum search needs an odd prime");
  if (!is_prime(p)) fail(ErrorCode::invalid_prime, std::to_string(p) + " is not prime");
  SpectrumReport out;
  out.p = p;
  for (const auto& spec : corpus(p, max_order)) {
    const Group g = build(spec, options.limits);
    auto report = verify_theorem_a(g, p, spec.to_string(), options);
    report.theorem = "spectrum";
    out.scanned += report.pairs_checked;
    merge_spectrum(out.entries, report.spectrum);
    bool violated = !report.consistent();
    out.per_group.push_back(report);
    if (violated) {
      out.counterexample = std::move(report);
      break;
    }
  }
  return out;
}

}  // namespace etagap
