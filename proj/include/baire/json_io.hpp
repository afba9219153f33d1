#pragma once

// JSON forms of the exchanged objects. Generated ops and generated point
// tails have no JSON form. Reading throws SchemaError on any shape problem.

#include <json.hpp>

#include "baire/bars_fans.hpp"
#include "baire/brouwer.hpp"
#include "baire/formal_space.hpp"
#include "baire/seq.hpp"

namespace baire::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const FinSeq& a);
FinSeq finseq_from_json(const Json& j);

/// Pattern components: a natural for an exact entry, {"atLeast": k} for an
/// open one.
Json to_json(const AddrPattern& p);
AddrPattern pattern_from_json(const Json& j);

/// {"prefix": [...], "tail": "zeros" | {"cycle": [...]}}
Json to_json(const Point& p);
Point point_from_json(const Json& j);

/// {"leaf": v} | {"sup": {"children": [...], "default": op}}
Json to_json(const BrouwerOp& op);
BrouwerOp op_from_json(const Json& j);

/// {"root": [...], "shape": op}
Json to_json(const CovWitness& w);
CovWitness cov_from_json(const Json& j);

/// {"witness": cov, "values": [{"addr": [...], "n": v}, ...]}. Maps without
/// a table have no JSON form.
Json to_json(const FormalMap& r);
FormalMap map_from_json(const Json& j);

/// {"kind":"full_binary"} | {"kind":"bounded","widths":[...],"tailWidth":w}
/// | {"kind":"explicit","nodes":[...],"full":[...]}
Json to_json(const FanTree& t);
FanTree make_fan(const Json& spec);

/// Parses text, mapping syntax errors to SchemaError.
Json parse(const std::string& text);

}  // namespace baire::json_io
