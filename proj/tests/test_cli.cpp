#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "etagap/cli.hpp"
#include "etagap/report.hpp"
#include "etagap/structured.hpp"
#include "etagap/word.hpp"
#include "oracle.hpp"

using namespace etagap;
namespace fs = std::filesystem;

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

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "etagap_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  auto path = scratch() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const RunConfig& config) {
  std::ostringstream out, err;
  int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("element words") {
  auto c5 = build(ConstructionSpec::cyclic(5));
  CHECK(parse_element_word(c5, "e") == c5.identity());
  CHECK(parse_element_word(c5, "g0^5") == c5.identity());
  CHECK(parse_element_word(c5, "g0^-1") == c5.inverse(c5.generators()[0]));
  CHECK(parse_element_word(c5, " g0 * g0 ") == c5.multiply(c5.generators()[0], c5.generators()[0]));

  auto d4 = oracle::d4_group();
  auto t = oracle::d4_table();
  CHECK(parse_element_word(d4, "g1*g0*g1") == CayleyBackend::encode(t.r3));
  CHECK(parse_element_word(d4, "g0^2*e") == CayleyBackend::encode(t.r2));

  CHECK(code_of([&] { parse_element_word(d4, "g2"); }) == ErrorCode::unknown_generator);
  CHECK(code_of([&] { parse_element_word(d4, "h0"); }) == ErrorCode::parse_error);
  CHECK(code_of([&] { parse_element_word(d4, "g0**g1"); }) == ErrorCode::parse_error);
  CHECK(code_of([&] { parse_element_word(d4, "g0^"); }) == ErrorCode::parse_error);
  CHECK(code_of([&] { parse_element_word(d4, ""); }) == ErrorCode::parse_error);
  try {
    parse_element_word(d4, "g0*g1*x");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
}

TEST_CASE("product on the affine example gives eta 2") {
  RunConfig c;
  c.command = "product";
  c.group_path = write_file("affine3.spec", R"({"kind":"affine-wreath","p":3})");
  c.a = "g0";
  c.b = "g0";
  auto r = run_cli(c);
  CHECK(r.code == 0);
  auto recs = lines(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["eta"] == 2);
  CHECK(recs[0]["group"]["kind"] == "affine-wreath");
  CHECK(recs[0]["classes"].size() == 2);

  c.a = "@a-standard";
  c.b = "@b-double";
  CHECK(run_cli(c).code == 0);
}

TEST_CASE("classes on the trivial group") {
  RunConfig c;
  c.command = "classes";
  c.group_path = write_file("trivial.spec", R"({"kind":"cyclic","n":1})");
  auto r = run_cli(c);
  CHECK(r.code == 0);
  auto recs = lines(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["size"] == 1);
}

TEST_CASE("classes from table and permutation files") {
  RunConfig c;
  c.command = "classes";
  std::ostringstream table;
  auto t = oracle::d4_table();
  table << "8\n";
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) table << t.table[i * 8 + j] << (j == 7 ? '\n' : ' ');
  }
  c.group_path = write_file("d4.tbl", table.str());
  auto r = run_cli(c);
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 5);

  c.group_path = write_file("d4.perm", "4\n1 2 3 0\n0 3 2 1\n");
  r = run_cli(c);
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 5);

  c.group_path = write_file("bad.tbl", "2\n0 1\n1 1\n");
  r = run_cli(c);
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error[format-error]", 0) == 0);
}

TEST_CASE("verify over a corpus exits 0") {
  RunConfig c;
  c.command = "verify";
  c.theorem = "a";
  c.corpus = true;
  c.p = 3;
  c.max_order = 243;
  auto r = run_cli(c);
  CHECK(r.code == 0);
  auto recs = lines(r.out);
  CHECK(recs.size() == corpus(3, 243).size());
  for (const auto& rec : recs) {
    CHECK(rec["theorem"] == "A");
    CHECK(rec["violations"].empty());
    CHECK(parse_report_line(rec.dump()).pairs_checked == rec["pairs_checked"]);
  }

  c.theorem = "size2";
  c.p.reset();
  c.max_order = 64;
  CHECK(run_cli(c).code == 0);
}

TEST_CASE("reproduce exit status follows the violations") {
  RunConfig c;
  c.command = "reproduce";
  c.p = 5;
  auto r = run_cli(c);
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 4);

  c.p = 3;
  r = run_cli(c);
  bool any = false;
  for (const auto& rec : lines(r.out)) any = any || !rec["violations"].empty();
  CHECK(r.code == (any ? 2 : 0));
}

TEST_CASE("usage and input errors exit 1 with a code") {
  RunConfig c;
  c.command = "dance";
  auto r = run_cli(c);
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error[invalid-parameter]", 0) == 0);

  c.command = "classes";
  c.format = "csv";
  c.group_path = write_file("c3.spec", R"({"kind":"cyclic","n":3})");
  CHECK(run_cli(c).code == 1);

  c.format = "jsonl";
  c.group_path = (scratch() / "missing.spec").string();
  CHECK(run_cli(c).code == 1);

  RunConfig v;
  v.command = "verify";
  v.theorem = "a";
  v.p = 5;
  v.group_path = write_file("c9.spec", R"({"kind":"cyclic","n":9})");
  r = run_cli(v);
  CHECK(r.code == 1);
  CHECK(r.err.find("not-a-p-group") != std::string::npos);

  RunConfig big;
  big.command = "inspect";
  big.group_path = write_file("big.spec", R"({"kind":"cyclic","n":1000})");
  big.cap = 10;
  CHECK(run_cli(big).code == 0);
  big.command = "classes";
  r = run_cli(big);
  CHECK(r.code == 1);
  CHECK(r.err.find("enumeration-too-large") != std::string::npos);
}

TEST_CASE("spectrum output formats and determinism") {
  RunConfig c;
  c.command = "spectrum";
  c.p = 3;
  c.max_order = 243;
  c.out_path = (scratch() / "s1.jsonl").string();
  CHECK(run_cli(c).code == 0);
  c.jobs = 8;
  c.out_path = (scratch() / "s8.jsonl").string();
  CHECK(run_cli(c).code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  auto one = slurp((scratch() / "s1.jsonl").string());
  CHECK(!one.empty());
  CHECK(one == slurp((scratch() / "s8.jsonl").string()));
  auto recs = lines(one);
  CHECK(recs.back()["group"]["corpus"]["p"] == 3);

  c.out_path.reset();
  c.format = "csv";
  auto r = run_cli(c);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p,eta,count,witness_group,witness_a,witness_b\n", 0) == 0);
}

TEST_CASE("inspect reports the role element") {
  RunConfig c;
  c.command = "inspect";
  c.group_path = write_file("e27.spec", R"({"kind":"extraspecial-exponent-p","p":3,"l":1,"role":"noncentral-witness"})");
  auto r = run_cli(c);
  CHECK(r.code == 0);
  auto rec = lines(r.out).at(0);
  CHECK(rec["order"] == 27);
  CHECK(rec["center_size"] == 3);
  CHECK(rec["class_count"] == 11);
  CHECK(rec["role_element"] == "000100");
}
