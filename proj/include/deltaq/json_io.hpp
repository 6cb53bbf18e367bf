#pragma once

#include "json.hpp"

#include "deltaq/dyck.hpp"
#include "deltaq/involution.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/sequences.hpp"
#include "deltaq/symfunc.hpp"
#include "deltaq/tpoly.hpp"

namespace deltaq {

using nlohmann::json;

// Wire formats. Big integers travel as decimal strings so no precision is
// lost; readers also accept plain JSON integers. Malformed input throws
// std::invalid_argument.

json to_json(const Partition& p);                 // [3,2,2,1]
json to_json(const TPoly& p);                     // ["1","1"], lowest degree first
json to_json(const TLaurent& p);                  // {"offset":o,"coeffs":[...]}
json to_json(const TRat& r);                      // TPoly when polynomial, else {"num","den"}
json to_json(const SymFuncExpr& e);               // {"degree","basis","terms":[{"partition","coeff"}]}
json to_json(const DecoratedDyckPath& d);         // {"area_seq","decorated_rows"}
json to_json(const MSequence& s);                 // {"pairs":[[a,b],...]}
json to_json(const OSPSequence& s);               // {"pairs":[[a,[...]],...]}
json to_json(const LabeledDiagram& t);            // {"lambda","stacks":[{"row_len","above","labels"}]}

Partition partition_from_json(const json& j);
TPoly tpoly_from_json(const json& j);
TRat trat_from_json(const json& j);
SymFuncExpr symfunc_from_json(const json& j);
DecoratedDyckPath decorated_path_from_json(const json& j);
MSequence msequence_from_json(const json& j);
LabeledDiagram diagram_from_json(const json& j);

/// Parses text, rethrowing syntax errors as std::invalid_argument.
json parse_json_text(const std::string& text);

}  // namespace deltaq
