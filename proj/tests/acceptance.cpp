// Acceptance suite: one PASS/FAIL line per criterion, then a determinism
// comparison of the report files written at one and eight worker threads.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "etagap/classes.hpp"
#include "etagap/construction.hpp"
#include "etagap/report.hpp"
#include "etagap/verify.hpp"
#include "lemma_checks.hpp"
#include "oracle.hpp"

using namespace etagap;
using Json = nlohmann::ordered_json;

namespace {

constexpr double kReproduceBudgetSeconds = 60.0;
constexpr double kTheoremBudgetSeconds = 600.0;
constexpr double kQuadraticBudgetSeconds = 10.0;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << "s";
  return out.str();
}

// Criterion 1: wreath squares have |a^G| = p^n and eta = (p+1)/2.
Verdict wreath_squares(const RunOptions& options, std::ostream& report) {
  Verdict v;
  for (std::int64_t p : {3, 5}) {
    Timer t;
    auto runs = reproduce_examples(p, options);
    double elapsed = t.seconds();
    const auto up = static_cast<std::size_t>(p);
    const auto& n1 = runs.at(0);
    report << to_json_line(n1.report) << '\n';
    v.require(n1.class_size == up && n1.eta == (up + 1) / 2,
              "p=" + std::to_string(p) + " n=1: |a^G|=" + std::to_string(n1.class_size) +
                  " eta=" + std::to_string(n1.eta));
    if (p == 3) {
      const auto& n2 = runs.at(1);
      report << to_json_line(n2.report) << '\n';
      auto spec = ConstructionSpec::wreath_cyclic(ConstructionSpec::extraspecial(3, 1), 3);
      v.require(predicted_order(spec) == 59049, "base order 3^10");
      v.require(n2.class_size == 9 && n2.eta == 2,
                "p=3 n=2: |a^G|=" + std::to_string(n2.class_size) + " eta=" + std::to_string(n2.eta));
      v.require(n2.report.consistent(), "p=3 n=2 base hypothesis");

      // Full-sweep confirmation on the order-81 group.
      auto s = ConstructionSpec::wreath_cyclic(ConstructionSpec::cyclic(3), 3);
      auto g = build(s);
      auto a = distinguished_element(g, s, "a-standard");
      v.require(oracle::class_of(g, a).size() == 3 && oracle::eta_of_product(g, a, a) == 2,
                "brute force p=3 n=1");
    }
    v.require(elapsed < kReproduceBudgetSeconds, "p=" + std::to_string(p) + " took " + fmt_seconds(elapsed));
  }
  return v;
}

// Criterion 2: the affine square is (a^2)^G u (c,c,e,...,e)^G.
Verdict affine_square(const RunOptions& options, std::ostream& report) {
  Verdict v;
  for (std::int64_t p : {3, 5}) {
    Timer t;
    auto spec = ConstructionSpec::affine_wreath(p);
    auto runs = reproduce_examples(p, options);
    const auto& r = runs.at(3);
    report << to_json_line(r.report) << '\n';
    const auto up = static_cast<std::size_t>(p);
    std::string tag = "p=" + std::to_string(p);
    v.require(r.class_size == up && r.eta == 2,
              tag + ": |a^G|=" + std::to_string(r.class_size) + " eta=" + std::to_string(r.eta));
    v.require(r.report.consistent(), tag + ": class listing");

    auto g = build(spec);
    v.require(g.order() == (p == 3 ? 162u : 3125u * 20u), tag + ": order");
    auto a = distinguished_element(g, spec, "a-standard");
    auto cc = distinguished_element(g, spec, "b-double");
    auto xa = oracle::class_of(g, a);
    auto product = oracle::product(xa, xa, g);
    auto square = oracle::class_of(g, g.multiply(a, a));
    auto pair = oracle::class_of(g, cc);
    std::set<Element> both(square.begin(), square.end());
    both.insert(pair.begin(), pair.end());
    v.require(std::vector<Element>(both.begin(), both.end()) == product && square != pair,
              tag + ": brute-force product differs");
    v.require(square.size() == up && pair.size() == up * (up - 1) / 2,
              tag + ": brute-force sizes " + std::to_string(square.size()) + "," +
                  std::to_string(pair.size()));
    v.require(t.seconds() < kReproduceBudgetSeconds, tag + " took " + fmt_seconds(t.seconds()));
  }
  return v;
}

// Criterion 3: the mixed wreath pair (a, b-double) gives eta = p - 1.
Verdict wreath_mixed(const RunOptions& options, std::ostream& report) {
  Verdict v;
  for (std::int64_t p : {3, 5}) {
    auto runs = reproduce_examples(p, options);
    const auto& r = runs.at(2);
    report << to_json_line(r.report) << '\n';
    auto spec = ConstructionSpec::wreath_cyclic(ConstructionSpec::cyclic(p), p);
    auto g = build(spec);
    auto brute = oracle::eta_of_product(g, distinguished_element(g, spec, "a-standard"),
                                        distinguished_element(g, spec, "b-double"));
    v.require(brute == r.eta, "p=" + std::to_string(p) + ": brute force gives " + std::to_string(brute));
    v.require(r.eta == static_cast<std::size_t>(p - 1),
              "p=" + std::to_string(p) + ": eta=" + std::to_string(r.eta) + ", expected " +
                  std::to_string(p - 1));
  }
  return v;
}

struct Corpus {
  std::int64_t p;
  std::uint64_t max_order;
};

const std::vector<Corpus> kTheoremCorpora{{3, 729}, {5, 625}};

// Criterion 4: theorem A over both corpora.
Verdict theorem_a(const RunOptions& options, std::ostream& report) {
  Verdict v;
  Timer t;
  std::uint64_t pairs = 0;
  for (auto [p, max_order] : kTheoremCorpora) {
    for (const auto& spec : corpus(p, max_order)) {
      auto r = verify_theorem_a(build(spec, options.limits), p, spec.to_string(), options);
      report << to_json_line(r) << '\n';
      pairs += r.pairs_checked;
      v.require(r.consistent(), spec.to_string() + ": " + std::to_string(r.violations.size()) + " violations");
      for (const auto& [eta, entry] : r.spectrum) {
        v.require(!(eta > 1 && 2 * eta < static_cast<std::size_t>(p + 1)),
                  spec.to_string() + ": eta " + std::to_string(eta) + " in the gap");
      }
    }
  }
  v.require(pairs > 0, "no pairs checked");
  v.require(t.seconds() < kTheoremBudgetSeconds, "took " + fmt_seconds(t.seconds()));
  if (v.pass) v.detail = std::to_string(pairs) + " pairs, " + fmt_seconds(t.seconds());
  return v;
}

// Criterion 5: theorem B over both corpora.
Verdict theorem_b(const RunOptions& options, std::ostream& report) {
  Verdict v;
  Timer t;
  std::uint64_t classes = 0;
  for (auto [p, max_order] : kTheoremCorpora) {
    for (const auto& spec : corpus(p, max_order)) {
      auto r = verify_theorem_b(build(spec, options.limits), p, spec.to_string(), options);
      report << to_json_line(r) << '\n';
      classes += r.pairs_checked;
      v.require(r.consistent(), spec.to_string() + ": " + std::to_string(r.violations.size()) + " violations");
      for (const auto& [eta, entry] : r.spectrum) {
        v.require(eta == 1 || 2 * eta == static_cast<std::size_t>(p + 1),
                  spec.to_string() + ": eta " + std::to_string(eta));
      }
    }
  }
  v.require(classes > 0, "no classes checked");
  v.require(t.seconds() < kTheoremBudgetSeconds, "took " + fmt_seconds(t.seconds()));
  if (v.pass) v.detail = std::to_string(classes) + " classes, " + fmt_seconds(t.seconds());
  return v;
}

// Criterion 6: size-two classes over the 2-group corpus.
Verdict size_two(const RunOptions& options, std::ostream& report) {
  Verdict v;
  std::set<std::string> covered;
  for (const auto& spec : corpus(2, 128)) {
    covered.insert(spec.to_string());
    auto r = verify_size_two(build(spec, options.limits), spec.to_string(), options);
    report << to_json_line(r) << '\n';
    v.require(r.consistent(), spec.to_string() + " has violations");
    for (const auto& [eta, entry] : r.spectrum) v.require(eta == 1 || eta == 2, "eta " + std::to_string(eta));
  }
  for (std::int64_t n : {4, 8, 16, 32}) {
    auto d = ConstructionSpec::dihedral(n);
    v.require(covered.count(d.to_string()) == 1, "missing " + d.to_string());
    auto dc = ConstructionSpec::direct_product({d, ConstructionSpec::cyclic(2)});
    v.require(covered.count(dc.to_string()) == 1, "missing " + dc.to_string());
  }
  auto q = ConstructionSpec::quaternion8();
  v.require(covered.count(q.to_string()) == 1, "missing quaternion8");
  v.require(covered.count(ConstructionSpec::direct_product({q, ConstructionSpec::cyclic(2)}).to_string()) == 1,
            "missing quaternion8 x C2");

  auto d4 = oracle::d4_group();
  auto t = oracle::d4_table();
  auto r = conjugacy_class(d4, CayleyBackend::encode(t.r));
  auto s = conjugacy_class(d4, CayleyBackend::encode(t.s));
  auto rr = class_product(r, r), rs = class_product(r, s);
  report << decomposition_record("{\"cayley-table\":\"D4\"}", r.representative, r.representative, rr).dump() << '\n';
  report << decomposition_record("{\"cayley-table\":\"D4\"}", r.representative, s.representative, rs).dump() << '\n';
  v.require(rr.eta() == 2 && rs.eta() == 1, "D4 witnesses");
  return v;
}

// Criterion 7: completing the square agrees with direct evaluation.
Verdict quadratic(const RunOptions&, std::ostream& report) {
  Verdict v;
  Timer t;
  for (std::int64_t p : {3, 5, 7, 11}) {
    std::map<std::size_t, std::uint64_t> sizes;
    for (std::int64_t r = 0; r < p; ++r)
      for (std::int64_t s = 0; s < p; ++s)
        for (std::int64_t c = 0; c < p; ++c) {
          auto fast = quadratic_image(r, s, c, p);
          auto brute = oracle::quadratic_image(r, s, c, p);
          auto n = fast.size();
          v.require(std::vector<std::int64_t>(brute.begin(), brute.end()) == fast,
                    "mismatch at p=" + std::to_string(p));
          v.require(n == 1 || 2 * n >= static_cast<std::size_t>(p + 1), "size " + std::to_string(n));
          ++sizes[n];
        }
    Json j;
    j["p"] = p;
    j["triples"] = p * p * p;
    for (auto [n, count] : sizes) j["sizes"][std::to_string(n)] = count;
    report << j.dump() << '\n';
  }
  v.require(t.seconds() < kQuadraticBudgetSeconds, "took " + fmt_seconds(t.seconds()));
  return v;
}

// Criterion 8: lemma properties.
Verdict lemma_suite(const RunOptions&, std::ostream& report) {
  Verdict v;
  std::map<std::string, lemmas::Tally> tallies;
  std::vector<ConstructionSpec> groups;
  for (auto [p, max_order] : std::vector<Corpus>{{3, 729}, {5, 625}, {2, 128}})
    for (const auto& spec : corpus(p, max_order)) groups.push_back(spec);

  std::uint64_t seed = 1;
  for (const auto& spec : groups) {
    auto g = build(spec);
    auto label = spec.to_string();
    tallies["product-identity"].merge(lemmas::product_identity(g, label, 500, seed++));
    tallies["central-translates"].merge(lemmas::translate_count(g, label, center(g)));
    if (g.order() % 2 == 1) tallies["center-avoidance"].merge(lemmas::center_avoidance(g, label));
    if (g.order() <= 512) tallies["centralizer-conjugacy"].merge(lemmas::centralizer_conjugacy(g, label));
    if (g.order() % 2 == 0) tallies["size-two-centralizers"].merge(lemmas::size_two_equal_centralizers(g, label));
    if (g.order() <= 243 && g.order() % 2 == 1) {
      std::int64_t p = g.order() % 3 == 0 ? 3 : 5;
      tallies["quotient-monotonicity"].merge(lemmas::quotient_monotonicity(g, label, p));
    }
  }
  std::vector<ConstructionSpec> factors;
  for (const auto& spec : corpus(3, 27)) factors.push_back(spec);
  for (const auto& spec : corpus(2, 8)) factors.push_back(spec);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (predicted_order(factors[i]) * predicted_order(factors[j]) > 729) continue;
      tallies["direct-product"].merge(lemmas::direct_product_multiplicativity(factors[i], factors[j], 4));
    }

  for (const auto& [name, t] : tallies) {
    Json j;
    j["property"] = name;
    j["checked"] = t.checked;
    j["failures"] = t.failures;
    j["first_failure"] = t.first_failure;
    report << j.dump() << '\n';
    v.require(t.ok(), name + ": " + std::to_string(t.failures) + "/" + std::to_string(t.checked) +
                          (t.first_failure.empty() ? "" : " first " + t.first_failure));
  }
  v.require(tallies.size() == 7, "missing properties");
  return v;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Verdict(const RunOptions&, std::ostream&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "wreath squares: |a^G| = p^n, eta = (p+1)/2", wreath_squares},
      {2, "affine square: eta = 2, classes (a^2)^G and (c,c,e,...)^G", affine_square},
      {3, "mixed wreath pair: eta = p - 1 at p = 3, 5", wreath_mixed},
      {4, "theorem A over corpus(3, 729) and corpus(5, 625)", theorem_a},
      {5, "theorem B over corpus(3, 729) and corpus(5, 625)", theorem_b},
      {6, "size-two classes over corpus(2, 128)", size_two},
      {7, "quadratic image: formula vs enumeration, p in {3,5,7,11}", quadratic},
      {8, "lemma property suite", lemma_suite},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "acceptance_reports";
  std::filesystem::create_directories(dir);

  int failed = 0;
  std::vector<std::string> files;
  for (unsigned jobs : {1u, 8u}) {
    RunOptions options;
    options.jobs = jobs;
    auto path = dir / ("reports_jobs" + std::to_string(jobs) + ".jsonl");
    std::ofstream report(path, std::ios::binary | std::ios::trunc);
    for (const auto& c : criteria()) {
      report << "# criterion " << c.id << '\n';
      Verdict v;
      try {
        v = c.run(options, report);
      } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
      }
      if (jobs == 1) {
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
        if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
        std::cout << std::endl;
        failed += v.pass ? 0 : 1;
      }
    }
    report.close();
    std::ifstream in(path, std::ios::binary);
    files.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  bool same = files[0] == files[1] && !files[0].empty();
  std::cout << (same ? "PASS" : "FAIL") << " criterion 9: report files identical at 1 and 8 jobs ("
            << files[0].size() << " bytes)" << std::endl;
  failed += same ? 0 : 1;
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
