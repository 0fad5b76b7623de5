#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "etagap/classes.hpp"
#include "etagap/verify.hpp"

namespace etagap {

/// {"theorem","group","p","pairs_checked","violations","spectrum","elapsed_ms"}
nlohmann::ordered_json to_json(const TheoremReport& report);
TheoremReport theorem_report_from_json(const nlohmann::ordered_json& j);

/// {"group","a","b","eta","classes":[{"rep","size"}]}
nlohmann::ordered_json decomposition_record(const std::string& group_label, const Element& a,
                                            const Element& b, const ClassDecomposition& d);

/// One JSON document per line.
std::string to_json_line(const TheoremReport& report);
TheoremReport parse_report_line(std::string_view line);

/// Flat spectrum tallies: p,eta,count,witness_group,witness_a,witness_b
void write_spectrum_csv(std::ostream& out, std::int64_t p, const Spectrum& spectrum);

}  // namespace etagap
