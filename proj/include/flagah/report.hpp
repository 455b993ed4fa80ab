#pragma once

#include <json.hpp>

#include "flagah/submanifold.hpp"

namespace flagah {

using Json = nlohmann::json;

// JSON documents are deterministic: keys are sorted by the json object type,
// all numbers are emitted as exact strings, no floats unless approx is set.

Json flag_json(const FlagManifold& f);
Json structure_json(const AHStructure& s, bool approx = false);
Json class_report_json(const ClassReport& r);
Json ask_certificate_json(const AskCertificate& c);
Json sub_certificate_json(const SubCertificate& c);
Json submanifold_json(const Submanifold& d);

// n_{alpha,beta} table over all root pairs with alpha+beta in R
Json n_table_json(const WeylBasis& wb);
// r_{alpha,beta} over pairs with alpha+beta in R_Theta
Json r_table_json(const AHStructure& s);
Json summands_json(const FlagManifold& f);

std::string render_text(const Json& j, int indent = 0);

}  // namespace flagah
