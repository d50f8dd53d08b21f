#pragma once

#include <json.hpp>

#include "hankel/catalog.hpp"
#include "hankel/detector.hpp"
#include "hankel/hankel_matrix.hpp"
#include "hankel/recurrence.hpp"

namespace hankel {

using json = nlohmann::json;

// {"alpha":"p/q","beta":"p/q","gamma":"p/q","a0":"p/q"}
json spec_to_json(const RecurrenceSpec& spec);
RecurrenceSpec spec_from_json(const json& j);

// {"n":..., "k":..., "rows":[["p/q",...],...]}
json matrix_to_json(const HankelMatrix& m);
HankelMatrix matrix_from_json(const json& j);

// term files: JSON array of "p/q" strings, origin 0
json window_to_json(const SequenceWindow& w);
SequenceWindow window_from_json(const json& j);

json transform_to_json(const TransformValue& tv);

// factorizations as [["p", exp], ...]
json factorization_to_json(const Factorization& f);
json report_to_json(const FactorizationReport& r);
json verdict_to_json(const DetectorVerdict& v);

json verify_report_to_json(const VerifyReport& r);

} // namespace hankel
