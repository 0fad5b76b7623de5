#include "etagap/report.hpp"

namespace etagap {

namespace {

using Json = nlohmann::ordered_json;

Json label_json(const std::string& label) {
  try {
    return Json::parse(label);
  } catch (const Json::parse_error&) {
    return Json(label);
  }
}

std::string label_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorCode::parse_error, std::string("report record lacks field '") + key + "'");
  }
  return j.at(key);
}

template <class T>
T typed(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::type_error&) {
    fail(ErrorCode::parse_error, std::string("report field '") + key + "' has the wrong type");
  }
}

Json witness_json(const Witness& w) {
  Json j;
  j["group"] = label_json(w.group);
  j["a"] = w.a.hex();
  j["b"] = w.b.hex();
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const TheoremReport& report) {
  Json j;
  j["theorem"] = report.theorem;
  j["group"] = label_json(report.group);
  j["p"] = report.p;
  j["pairs_checked"] = report.pairs_checked;
  j["violations"] = Json::array();
  for (const auto& v : report.violations) {
    Json r;
    r["a"] = v.a.hex();
    r["b"] = v.b.hex();
    r["eta"] = v.eta;
    r["expected"] = v.expected;
    j["violations"].push_back(std::move(r));
  }
  j["spectrum"] = Json::object();
  for (const auto& [eta, entry] : report.spectrum) {
    Json e;
    e["count"] = entry.count;
    e["witness"] = witness_json(entry.witness);
    j["spectrum"][std::to_string(eta)] = std::move(e);
  }
  j["elapsed_ms"] = report.elapsed_ms ? Json(*report.elapsed_ms) : Json(nullptr);
  return j;
}

TheoremReport theorem_report_from_json(const nlohmann::ordered_json& j) {
  TheoremReport r;
  r.theorem = typed<std::string>(j, "theorem");
  r.group = label_text(field(j, "group"));
  r.p = typed<std::int64_t>(j, "p");
  r.pairs_checked = typed<std::uint64_t>(j, "pairs_checked");
  for (const auto& v : field(j, "violations")) {
    r.violations.push_back({Element::from_hex(typed<std::string>(v, "a")),
                            Element::from_hex(typed<std::string>(v, "b")),
                            typed<std::size_t>(v, "eta"), typed<std::string>(v, "expected")});
  }
  for (const auto& [key, e] : field(j, "spectrum").items()) {
    std::size_t eta = 0;
    try {
      eta = static_cast<std::size_t>(std::stoull(key));
    } catch (const std::exception&) {
      fail(ErrorCode::parse_error, "spectrum key '" + key + "' is not an integer");
    }
    const auto& w = field(e, "witness");
    r.spectrum[eta] = SpectrumEntry{
        typed<std::uint64_t>(e, "count"),
        Witness{label_text(field(w, "group")), Element::from_hex(typed<std::string>(w, "a")),
                Element::from_hex(typed<std::string>(w, "b"))}};
  }
  const auto& elapsed = field(j, "elapsed_ms");
  if (!elapsed.is_null()) r.elapsed_ms = typed<std::int64_t>(j, "elapsed_ms");
  return r;
}

nlohmann::ordered_json decomposition_record(const std::string& group_label, const Element& a,
                                            const Element& b, const ClassDecomposition& d) {
  Json j;
  j["group"] = label_json(group_label);
  j["a"] = a.hex();
  j["b"] = b.hex();
  j["eta"] = d.eta();
  j["classes"] = Json::array();
  for (const auto& c : d.classes) {
    Json r;
    r["rep"] = c.representative.hex();
    r["size"] = c.size();
    j["classes"].push_back(std::move(r));
  }
  return j;
}

std::string to_json_line(const TheoremReport& report) { return to_json(report).dump(); }

TheoremReport parse_report_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("report line: ") + e.what());
  }
  return theorem_report_from_json(j);
}

void write_spectrum_csv(std::ostream& out, std::int64_t p, const Spectrum& spectrum) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  for (const auto& [eta, entry] : spectrum) {
    out << p << ',' << eta << ',' << entry.count << ',' << quote(entry.witness.group) << ','
        << entry.witness.a.hex() << ',' << entry.witness.b.hex() << '\n';
  }
}

}  // namespace etagap
