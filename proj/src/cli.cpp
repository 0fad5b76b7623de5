#include "etagap/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "etagap/cayley.hpp"
#include "etagap/classes.hpp"
#include "etagap/permutation.hpp"
#include "etagap/report.hpp"
#include "etagap/verify.hpp"
#include "etagap/word.hpp"

namespace etagap {

namespace {

using Json = nlohmann::ordered_json;

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Counts non-blank lines after the header and compares with the header value.
bool looks_like_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long long n = -1, rows = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (n < 0) {
      std::istringstream(line) >> n;
    } else {
      ++rows;
    }
  }
  return n > 0 && rows == n;
}

[[noreturn]] void usage(const std::string& message) { fail(ErrorCode::invalid_parameter, message); }

class Output {
 public:
  Output(const RunConfig& config, std::ostream& fallback) : out_(&fallback) {
    if (config.out_path) {
      file_.open(*config.out_path, std::ios::binary | std::ios::trunc);
      if (!file_) fail(ErrorCode::format_error, "cannot open output file " + *config.out_path);
      out_ = &file_;
    }
  }

  std::ostream& stream() { return *out_; }
  void line(const Json& j) { *out_ << j.dump() << '\n'; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

RunOptions options_of(const RunConfig& config) {
  RunOptions o;
  o.limits.order_cap = config.cap;
  o.jobs = config.jobs == 0 ? 1 : config.jobs;
  o.timing = config.timing;
  return o;
}

std::int64_t need_p(const RunConfig& config) {
  if (!config.p) usage("--p is required for '" + config.command + "'");
  return *config.p;
}

LoadedGroup need_group(const RunConfig& config) {
  if (!config.group_path) usage("--group is required for '" + config.command + "'");
  if (config.corpus) usage("give either --group or --corpus, not both");
  return load_group(*config.group_path, Limits{config.cap});
}

int cmd_classes(const RunConfig& config, Output& out) {
  auto loaded = need_group(config);
  for (const auto& c : all_classes(loaded.group, Limits{config.cap})) {
    Json j;
    j["group"] = Json::parse(loaded.label);
    j["rep"] = c.representative.hex();
    j["size"] = c.size();
    out.line(j);
  }
  return 0;
}

int cmd_product(const RunConfig& config, Output& out) {
  auto loaded = need_group(config);
  if (!config.a || !config.b) usage("product needs --a and --b");
  const Limits limits{config.cap};
  Element a = select_element(loaded, *config.a);
  Element b = select_element(loaded, *config.b);
  auto d = class_product(conjugacy_class(loaded.group, a, limits),
                         conjugacy_class(loaded.group, b, limits), limits);
  out.line(decomposition_record(loaded.label, a, b, d));
  return 0;
}

int cmd_inspect(const RunConfig& config, Output& out) {
  auto loaded = need_group(config);
  const Group& g = loaded.group;
  Json j;
  j["group"] = Json::parse(loaded.label);
  j["kind"] = g.kind();
  j["order"] = g.order();
  j["generators"] = Json::array();
  for (const auto& gen : g.generators()) j["generators"].push_back(gen.hex());
  j["identity"] = g.identity().hex();
  if (g.order() <= config.cap) {
    const Limits limits{config.cap};
    j["center_size"] = center(g, limits).size();
    auto classes = all_classes(g, limits);
    j["class_count"] = classes.size();
    std::map<std::size_t, std::size_t> sizes;
    for (const auto& c : classes) ++sizes[c.size()];
    j["class_sizes"] = Json::object();
    for (auto [size, count] : sizes) j["class_sizes"][std::to_string(size)] = count;
  }
  if (loaded.spec && loaded.spec->role) {
    j["role"] = *loaded.spec->role;
    j["role_element"] = distinguished_element(g, *loaded.spec, *loaded.spec->role).hex();
  }
  out.line(j);
  return 0;
}

int emit_reports(const std::vector<TheoremReport>& reports, Output& out) {
  bool violated = false;
  for (const auto& r : reports) {
    out.line(to_json(r));
    violated = violated || !r.consistent();
  }
  return violated ? 2 : 0;
}

int cmd_verify(const RunConfig& config, Output& out) {
  if (!config.theorem) usage("verify needs --theorem {a|b|size2}");
  const std::string& which = *config.theorem;
  if (which != "a" && which != "b" && which != "size2") {
    usage("--theorem must be one of a, b, size2");
  }
  const RunOptions options = options_of(config);
  auto check = [&](const Group& g, const std::string& label) {
    if (which == "size2") return verify_size_two(g, label, options);
    std::int64_t p = need_p(config);
    return which == "a" ? verify_theorem_a(g, p, label, options)
                        : verify_theorem_b(g, p, label, options);
  };
  std::vector<TheoremReport> reports;
  if (config.corpus) {
    if (config.group_path) usage("give either --group or --corpus, not both");
    if (!config.max_order) usage("--corpus needs --max-order");
    std::int64_t p = which == "size2" ? config.p.value_or(2) : need_p(config);
    for (const auto& spec : corpus(p, *config.max_order)) {
      reports.push_back(check(build(spec, options.limits), spec.to_string()));
    }
  } else {
    auto loaded = need_group(config);
    reports.push_back(check(loaded.group, loaded.label));
  }
  return emit_reports(reports, out);
}

int cmd_reproduce(const RunConfig& config, Output& out) {
  std::vector<TheoremReport> reports;
  for (auto& r : reproduce_examples(need_p(config), options_of(config))) {
    reports.push_back(std::move(r.report));
  }
  return emit_reports(reports, out);
}

int cmd_spectrum(const RunConfig& config, Output& out) {
  if (config.group_path) usage("spectrum always scans the corpus; drop --group");
  if (!config.max_order) usage("spectrum needs --max-order");
  const std::int64_t p = need_p(config);
  auto result = eta_spectrum(p, *config.max_order, options_of(config));
  if (config.format == "csv") {
    out.stream() << "p,eta,count,witness_group,witness_a,witness_b\n";
    write_spectrum_csv(out.stream(), p, result.entries);
  } else {
    for (const auto& r : result.per_group) out.line(to_json(r));
    TheoremReport total{"spectrum", "", p, result.scanned, {}, result.entries, std::nullopt};
    Json corpus_label;
    corpus_label["corpus"] = {{"p", p}, {"max_order", *config.max_order}};
    total.group = corpus_label.dump();
    if (result.counterexample) total.violations = result.counterexample->violations;
    out.line(to_json(total));
  }
  return result.counterexample ? 2 : 0;
}

}  // namespace

LoadedGroup load_group(const std::string& path, const Limits& limits) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::format_error, "cannot read group file " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");

  bool is_spec = ends_with(path, ".json") || ends_with(path, ".spec") ||
                 (first != std::string::npos && text[first] == '{');
  if (is_spec) {
    auto spec = ConstructionSpec::parse(text);
    return LoadedGroup{build(spec, limits), spec, spec.to_string()};
  }
  bool is_table = ends_with(path, ".tbl") || ends_with(path, ".cayley");
  bool is_perm = ends_with(path, ".perm");
  if (!is_table && !is_perm) is_table = looks_like_table(text);
  std::istringstream in(text);
  if (is_table) return LoadedGroup{read_cayley_table(in), std::nullopt, source_label("cayley-table", path)};
  return LoadedGroup{read_permutation_group(in, limits), std::nullopt, source_label("permutation", path)};
}

Element select_element(const LoadedGroup& loaded, const std::string& selector) {
  if (!selector.empty() && selector.front() == '@') {
    if (!loaded.spec) {
      fail(ErrorCode::unsupported_role, "role selectors need a construction-spec group");
    }
    return distinguished_element(loaded.group, *loaded.spec, selector.substr(1));
  }
  return parse_element_word(loaded.group, selector);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "jsonl" && config.format != "csv") usage("--format must be jsonl or csv");
    if (config.format == "csv" && config.command != "spectrum") {
      usage("csv output is only available for spectrum tallies");
    }
    if (config.cap > Limits{}.order_cap) {
      err << "warning: enumeration cap raised to " << config.cap
          << " elements; full enumeration may need several GB of memory\n";
    }
    Output output(config, out);
    if (config.command == "classes") return cmd_classes(config, output);
    if (config.command == "product") return cmd_product(config, output);
    if (config.command == "verify") return cmd_verify(config, output);
    if (config.command == "reproduce") return cmd_reproduce(config, output);
    if (config.command == "spectrum") return cmd_spectrum(config, output);
    if (config.command == "inspect") return cmd_inspect(config, output);
    usage("unknown command '" + config.command + "'");
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace etagap
