#ifndef QCADD_REPORT_HPP
#define QCADD_REPORT_HPP

#include <json.hpp>

#include "qcadd/bounds.hpp"
#include "qcadd/codes.hpp"
#include "qcadd/distance.hpp"
#include "qcadd/duality.hpp"
#include "qcadd/search.hpp"
#include "qcadd/tables.hpp"

namespace qcadd {

using json = nlohmann::json;

json to_json(const Gf2Poly& p);
json to_json(const BinaryCode& c);
json to_json(const AdditiveCode& c);
json to_json(const DistanceReport& r);
json to_json(const BoundReport& r);
json to_json(const GramReport& r);
json to_json(const QcLcdCriterion& r);
json to_json(const VerificationReport& r);
json to_json(const SearchHit& h);

}  // namespace qcadd

#endif
