#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "locones/lawlor_criterion.hpp"
#include "locones/sphere_moments.hpp"

namespace locones {

using ordered_json = nlohmann::ordered_json;

std::string tool_version();

ordered_json report_json(const CriterionReport& r);
void write_report_text(std::ostream& os, const CriterionReport& r);

std::string to_string(const ScaledValue& v);
ordered_json gram_json(Family family, int n, const GramMatrix& g);

ordered_json sff_json(const SffTensor& numeric, const SffTensor& closed);

}  // namespace locones
