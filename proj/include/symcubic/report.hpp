#pragma once
// JSON renderings of results, shared by the CLI and the Python module.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symcubic/autiso.hpp"
#include "symcubic/verify.hpp"

namespace symcubic {

using Json = nlohmann::ordered_json;

extern const char* const kVersion;

Json to_json(const Collineation& g);
Json to_json(const Fingerprint& fp);
Json to_json(const GaloisImage& g);

Json field_info(const Field& f);
Json singular_report(const CubicForm& f, int depth);
Json lines_report(const LineConfig& c);
Json galois_report(const LineConfig& c);
Json aut_report(const AutReport& r);
Json weyl_table();
Json isom_report(const std::optional<IsoWitness>& w, int splitting1, int splitting2);
Json verify_report(const std::vector<SuiteResult>& suites);

} // namespace symcubic
