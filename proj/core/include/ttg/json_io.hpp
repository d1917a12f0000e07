#pragma once

#include <json.hpp>

#include "ttg/burnside.hpp"
#include "ttg/isotropy.hpp"
#include "ttg/semifree.hpp"

namespace ttg {

using nlohmann::json;

json class_set_json(const ClassSet& s);
json clopen_json(const ClopenSet& u);
json phi_json(const PhiSpace& p);
json marks_json(const MarksMatrix& m);
json burnside_element_json(const BurnsideElement& e);

json wide_sphere_json(const semifree::WideSphere& w);
// Parses the documented file shape; inside the window an omitted degree takes
// the value of the nearest specified degree above it. The result is raw,
// i.e. not yet validated.
semifree::WideSphere wide_sphere_from_json(const json& j);

}  // namespace ttg
