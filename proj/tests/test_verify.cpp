#include <set>
#include <sstream>

#include "doctest.h"

#include "etagap/construction.hpp"
#include "etagap/report.hpp"
#include "etagap/verify.hpp"
#include "oracle.hpp"

using namespace etagap;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an etagap::Error");
  return ErrorCode::format_error;
}

std::set<std::size_t> etas(const TheoremReport& r) {
  std::set<std::size_t> out;
  for (const auto& [eta, entry] : r.spectrum) out.insert(eta);
  return out;
}

std::uint64_t count(const TheoremReport& r) {
  std::uint64_t n = 0;
  for (const auto& [eta, entry] : r.spectrum) n += entry.count;
  return n;
}

TheoremReport run_a(const ConstructionSpec& spec, std::int64_t p, unsigned jobs = 1) {
  RunOptions o;
  o.jobs = jobs;
  return verify_theorem_a(build(spec), p, spec.to_string(), o);
}

}  // namespace

TEST_CASE("theorem A examples") {
  auto e = run_a(ConstructionSpec::extraspecial(3, 1), 3);
  CHECK(e.consistent());
  for (auto eta : etas(e)) CHECK((eta >= 1 && eta <= 3));
  CHECK(e.pairs_checked == 64);

  for (const auto& spec : corpus(5, 625)) {
    auto r = run_a(spec, 5);
    CHECK(r.consistent());
    CHECK(etas(r).count(2) == 0);
    CHECK(count(r) == r.pairs_checked);
  }

  auto w = run_a(ConstructionSpec::wreath_cyclic(ConstructionSpec::cyclic(3), 3), 3);
  CHECK(w.consistent());
  CHECK(etas(w).count(2) == 1);
}

TEST_CASE("theorem A pair counts and etas match a brute-force sweep") {
  for (const auto& spec : {ConstructionSpec::extraspecial(3, 1),
                           ConstructionSpec::wreath_cyclic(ConstructionSpec::cyclic(3), 3)}) {
    auto g = build(spec);
    std::set<std::vector<Element>> size_p;
    for (const auto& x : g.elements()) {
      auto c = oracle::class_of(g, x);
      if (c.size() == 3) size_p.insert(c);
    }
    std::map<std::size_t, std::uint64_t> brute;
    for (const auto& x : size_p)
      for (const auto& y : size_p) ++brute[oracle::eta(g, oracle::product(x, y, g))];
    auto r = run_a(spec, 3);
    CHECK(r.pairs_checked == size_p.size() * size_p.size());
    std::map<std::size_t, std::uint64_t> got;
    for (const auto& [eta, entry] : r.spectrum) got[eta] = entry.count;
    CHECK(got == brute);
  }
}

TEST_CASE("theorem A preconditions") {
  auto g = build(ConstructionSpec::cyclic(9));
  CHECK(code_of([&] { verify_theorem_a(g, 2, "x"); }) == ErrorCode::even_prime);
  CHECK(code_of([&] { verify_theorem_a(g, 5, "x"); }) == ErrorCode::not_a_p_group);
  CHECK(code_of([&] { verify_theorem_a(g, 9, "x"); }) == ErrorCode::invalid_prime);
  CHECK(code_of([&] { verify_theorem_b(build(ConstructionSpec::dihedral(3)), 3, "x"); }) ==
        ErrorCode::not_a_p_group);
}

TEST_CASE("theorem B examples") {
  RunOptions o;
  auto es = ConstructionSpec::extraspecial(3, 1);
  auto e = verify_theorem_b(build(es), 3, es.to_string(), o);
  CHECK(e.consistent());
  CHECK(etas(e) == std::set<std::size_t>{1});

  auto w3 = ConstructionSpec::wreath_cyclic(ConstructionSpec::cyclic(3), 3);
  auto r3 = verify_theorem_b(build(w3), 3, w3.to_string(), o);
  CHECK(r3.consistent());
  CHECK(etas(r3).count(2) == 1);

  auto w5 = ConstructionSpec::wreath_cyclic(ConstructionSpec::cyclic(5), 5);
  auto r5 = verify_theorem_b(build(w5), 5, w5.to_string(), o);
  CHECK(r5.consistent());
  CHECK(etas(r5).count(3) == 1);
  for (auto eta : etas(r5)) CHECK((eta == 1 || eta == 3));
}

TEST_CASE("theorem B eta-one cases agree with theorem A") {
  for (const auto& spec : corpus(3, 243)) {
    auto g = build(spec);
    auto a = verify_theorem_a(g, 3, spec.to_string());
    auto b = verify_theorem_b(g, 3, spec.to_string());
    CHECK(a.consistent());
    CHECK(b.consistent());
    if (b.spectrum.count(1)) {
      const auto& w = b.spectrum.at(1).witness;
      auto x = conjugacy_class(g, w.a);
      auto d = class_product(x, x);
      CHECK(d.eta() == 1);
      CHECK(d.classes[0].contains(g.multiply(w.a, w.a)));
    }
  }
}

TEST_CASE("size-two examples") {
  auto d4 = oracle::d4_group();
  auto t = oracle::d4_table();
  auto r = conjugacy_class(d4, CayleyBackend::encode(t.r));
  auto s = conjugacy_class(d4, CayleyBackend::encode(t.s));
  CHECK(class_product(r, r).eta() == 2);
  CHECK(class_product(r, s).eta() == 1);
  auto rep = verify_size_two(d4, "D4");
  CHECK(rep.consistent());
  CHECK(etas(rep) == std::set<std::size_t>{1, 2});
  CHECK(rep.pairs_checked == 9);

  auto q = verify_size_two(build(ConstructionSpec::quaternion8()), "Q8");
  CHECK(q.consistent());
  CHECK(q.pairs_checked == 9);
}

TEST_CASE("reproductions") {
  auto r5 = reproduce_examples(5);
  REQUIRE(r5.size() == 4);
  CHECK(r5[0].class_size == 5);
  CHECK(r5[0].eta == 3);
  CHECK(r5[1].class_size == 25);
  CHECK(r5[1].eta == 3);
  CHECK(r5[2].eta == 4);
  CHECK(r5[3].class_size == 5);
  CHECK(r5[3].eta == 2);
  CHECK(r5[3].class_sizes == std::vector<std::size_t>{5, 10});
  for (const auto& r : r5) CHECK(r.report.consistent());

  auto r3 = reproduce_examples(3);
  REQUIRE(r3.size() == 4);
  CHECK(r3[0].eta == 2);
  CHECK(r3[1].class_size == 9);
  CHECK(r3[1].eta == 2);
  CHECK(r3[3].eta == 2);
  CHECK(r3[3].class_sizes == std::vector<std::size_t>{3, 3});
}

TEST_CASE("mixed wreath pair at p = 3 matches brute force") {
  auto spec = ConstructionSpec::wreath_cyclic(ConstructionSpec::cyclic(3), 3);
  auto g = build(spec);
  auto a = distinguished_element(g, spec, "a-standard");
  auto b = distinguished_element(g, spec, "b-double");
  auto brute = oracle::eta_of_product(g, a, b);
  auto r3 = reproduce_examples(3);
  CHECK(r3[2].eta == brute);
  CHECK(r3[2].report.consistent() == (brute == 2));
}

TEST_CASE("reproductions are identical across runs and thread counts") {
  RunOptions serial, wide;
  wide.jobs = 8;
  auto x = reproduce_examples(5, serial), y = reproduce_examples(5, wide);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(to_json_line(x[i].report) == to_json_line(y[i].report));
}

TEST_CASE("verification is identical across thread counts") {
  for (const auto& spec : corpus(3, 729)) {
    CHECK(to_json_line(run_a(spec, 3, 1)) == to_json_line(run_a(spec, 3, 8)));
  }
}

TEST_CASE("spectrum examples") {
  auto s3 = eta_spectrum(3, 243);
  CHECK_FALSE(s3.counterexample);
  for (const auto& [eta, entry] : s3.entries) CHECK((eta >= 1 && eta <= 3));

  auto s5 = eta_spectrum(5, 625);
  CHECK_FALSE(s5.counterexample);
  CHECK(s5.entries.count(2) == 0);
  CHECK(s5.entries.count(1) == 1);
}

TEST_CASE("spectrum witnesses recompute to their eta") {
  auto s = eta_spectrum(3, 729);
  for (const auto& [eta, entry] : s.entries) {
    auto g = build(ConstructionSpec::parse(entry.witness.group));
    auto d = class_product(conjugacy_class(g, entry.witness.a), conjugacy_class(g, entry.witness.b));
    CHECK(d.eta() == eta);
  }
}

TEST_CASE("spectrum tallies are additive over corpus partitions") {
  auto whole = eta_spectrum(3, 729);
  Spectrum left, right;
  std::uint64_t scanned = 0;
  for (std::size_t i = 0; i < whole.per_group.size(); ++i) {
    merge_spectrum(i % 2 ? left : right, whole.per_group[i].spectrum);
    scanned += whole.per_group[i].pairs_checked;
  }
  Spectrum merged = left;
  merge_spectrum(merged, right);
  CHECK(scanned == whole.scanned);
  REQUIRE(merged.size() == whole.entries.size());
  for (const auto& [eta, entry] : whole.entries) CHECK(merged.at(eta).count == entry.count);
}

TEST_CASE("report records round-trip through the parser") {
  auto spec = ConstructionSpec::wreath_cyclic(ConstructionSpec::cyclic(3), 3);
  auto r = run_a(spec, 3);
  CHECK(parse_report_line(to_json_line(r)) == r);

  TheoremReport fake{"A", spec.to_string(), 3, 4, {}, {}, std::int64_t{17}};
  fake.violations.push_back({Element::from_hex("00010203"), Element::from_hex("ff"), 5, "eta >= 2"});
  fake.spectrum[5] = SpectrumEntry{2, Witness{spec.to_string(), Element::from_hex("00"), Element::from_hex("01")}};
  CHECK(parse_report_line(to_json_line(fake)) == fake);

  auto j = nlohmann::json::parse(to_json_line(r));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::set<std::string> got(keys.begin(), keys.end());
  CHECK(got == std::set<std::string>{"theorem", "group", "p", "pairs_checked", "violations",
                                     "spectrum", "elapsed_ms"});
  CHECK(j["elapsed_ms"].is_null());
  CHECK(j["group"]["kind"] == "wreath-cyclic");

  CHECK_THROWS_AS(parse_report_line("{\"theorem\":1}"), Error);
  CHECK_THROWS_AS(parse_report_line("not json"), Error);
}

TEST_CASE("decomposition records") {
  auto d4 = oracle::d4_group();
  auto t = oracle::d4_table();
  auto r = conjugacy_class(d4, CayleyBackend::encode(t.r));
  auto rec = decomposition_record("{\"cayley-table\":\"d4.tbl\"}", r.representative,
                                  r.representative, class_product(r, r));
  CHECK(rec["eta"] == 2);
  CHECK(rec["classes"].size() == 2);
  CHECK(rec["classes"][0]["rep"] == "00000000");
  CHECK(rec["classes"][1]["size"] == 1);
  CHECK(rec["a"] == r.representative.hex());
}

TEST_CASE("spectrum csv") {
  auto s = eta_spectrum(3, 81);
  std::ostringstream out;
  write_spectrum_csv(out, 3, s.entries);
  std::istringstream in(out.str());
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    CHECK(line.rfind("3,", 0) == 0);
    CHECK(std::count(line.begin(), line.end(), ',') >= 5);
    ++rows;
  }
  CHECK(rows == s.entries.size());
}
