#include "baire/json_io.hpp"

namespace baire::json_io {

namespace {

Nat natural(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw SchemaError(std::string(what) + " must be a natural number");
  }
  return j.get<Nat>();
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string(what) + " needs field \"" + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const FinSeq& a) {
  Json j = Json::array();
  for (Nat v : a.items()) j.push_back(v);
  return j;
}

FinSeq finseq_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("finite sequence must be an array of naturals");
  std::vector<Nat> xs;
  xs.reserve(j.size());
  for (const auto& v : j) xs.push_back(natural(v, "sequence entry"));
  return FinSeq(std::move(xs));
}

Json to_json(const AddrPattern& p) {
  Json j = Json::array();
  for (const auto& s : p.steps()) {
    if (s.open) {
      j.push_back(Json{{"atLeast", s.lo}});
    } else {
      j.push_back(s.lo);
    }
  }
  return j;
}

AddrPattern pattern_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("address must be an array");
  std::vector<PatternStep> steps;
  for (const auto& v : j) {
    if (v.is_object()) {
      steps.push_back({natural(field(v, "atLeast", "open address component"), "atLeast"), true});
    } else {
      steps.push_back({natural(v, "address entry"), false});
    }
  }
  return AddrPattern(std::move(steps));
}

Json to_json(const Point& p) {
  if (p.is_generated()) throw SchemaError("points with generated tails have no JSON form");
  Json j;
  j["prefix"] = to_json(p.prefix());
  if (const auto* c = p.cycle_tail()) {
    j["tail"] = Json{{"cycle", to_json(c->period)}};
  } else {
    j["tail"] = "zeros";
  }
  return j;
}

Point point_from_json(const Json& j) {
  const FinSeq prefix = finseq_from_json(field(j, "prefix", "point"));
  if (!j.contains("tail")) return Point::zeros(prefix);
  const auto& tail = j.at("tail");
  if (tail.is_string() && tail.get<std::string>() == "zeros") return Point::zeros(prefix);
  if (tail.is_object() && tail.contains("cycle")) {
    const FinSeq period = finseq_from_json(tail.at("cycle"));
    if (period.empty()) throw SchemaError("cycle tail must be non-empty");
    return Point::cycle(prefix, period);
  }
  throw SchemaError("point tail must be \"zeros\" or {\"cycle\": [...]}");
}

Json to_json(const BrouwerOp& op) {
  if (op.is_leaf()) return Json{{"leaf", op.leaf_value()}};
  if (op.is_generated_node()) throw SchemaError("generated ops have no JSON form");
  Json kids = Json::array();
  for (const auto& c : op.explicit_children()) kids.push_back(to_json(c));
  Json body;
  body["children"] = std::move(kids);
  body["default"] = to_json(op.default_child());
  return Json{{"sup", std::move(body)}};
}

BrouwerOp op_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("brouwer op must be an object");
  if (j.contains("leaf")) {
    const Nat v = natural(j.at("leaf"), "leaf value");
    if (v == 0) throw SchemaError("leaf values must be >= 1");
    return BrouwerOp::leaf(v);
  }
  if (j.contains("sup")) {
    const auto& body = j.at("sup");
    std::vector<BrouwerOp> kids;
    if (body.is_object() && body.contains("children")) {
      const auto& cs = body.at("children");
      if (!cs.is_array()) throw SchemaError("sup children must be an array");
      for (const auto& c : cs) kids.push_back(op_from_json(c));
    }
    return BrouwerOp::sup(std::move(kids), op_from_json(field(body, "default", "sup node")));
  }
  throw SchemaError("brouwer op must be {\"leaf\": v} or {\"sup\": {...}}");
}

Json to_json(const CovWitness& w) {
  Json j;
  j["root"] = to_json(w.root());
  j["shape"] = to_json(w.shape());
  return j;
}

CovWitness cov_from_json(const Json& j) {
  return CovWitness(finseq_from_json(field(j, "root", "cover witness")),
                    op_from_json(field(j, "shape", "cover witness")));
}

Json to_json(const FormalMap& r) {
  if (!r.table()) throw SchemaError("rule-only formal maps have no JSON form");
  Json values = Json::array();
  for (const auto& e : *r.table()) {
    Json row;
    row["addr"] = to_json(e.addr);
    row["n"] = e.n;
    values.push_back(std::move(row));
  }
  Json j;
  j["witness"] = to_json(r.witness());
  j["values"] = std::move(values);
  return j;
}

FormalMap map_from_json(const Json& j) {
  CovWitness w = cov_from_json(field(j, "witness", "formal map"));
  const auto& values = field(j, "values", "formal map");
  if (!values.is_array()) throw SchemaError("formal map values must be an array");
  std::vector<MapEntry> table;
  for (const auto& row : values) {
    table.push_back({pattern_from_json(field(row, "addr", "map value")), natural(field(row, "n", "map value"), "n")});
  }
  return FormalMap::from_table(std::move(w), std::move(table));
}

Json to_json(const FanTree& t) {
  Json j;
  switch (t.kind()) {
    case FanTree::Kind::full_binary:
      j["kind"] = "full_binary";
      break;
    case FanTree::Kind::bounded: {
      j["kind"] = "bounded";
      Json ws = Json::array();
      for (Nat w : t.widths()) ws.push_back(w);
      j["widths"] = std::move(ws);
      j["tailWidth"] = t.tail_width();
      break;
    }
    case FanTree::Kind::explicit_table: {
      j["kind"] = "explicit";
      Json nodes = Json::array();
      for (const auto& a : t.nodes()) nodes.push_back(to_json(a));
      Json full = Json::array();
      for (const auto& a : t.full()) full.push_back(to_json(a));
      j["nodes"] = std::move(nodes);
      j["full"] = std::move(full);
      break;
    }
    case FanTree::Kind::custom:
      throw SchemaError("custom fans have no JSON form");
  }
  return j;
}

FanTree make_fan(const Json& spec) {
  const auto& kind = field(spec, "kind", "fan spec");
  if (!kind.is_string()) throw SchemaError("fan kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "full_binary") return FanTree::full_binary();
  if (k == "bounded") {
    const FinSeq widths = finseq_from_json(field(spec, "widths", "bounded fan"));
    const Nat tail = spec.contains("tailWidth") ? natural(spec.at("tailWidth"), "tailWidth") : 1;
    return FanTree::bounded_by(widths.vec(), tail);
  }
  if (k == "explicit") {
    std::vector<FinSeq> nodes;
    std::vector<FinSeq> full;
    const auto& ns = field(spec, "nodes", "explicit fan");
    if (!ns.is_array()) throw SchemaError("explicit fan nodes must be an array");
    for (const auto& a : ns) nodes.push_back(finseq_from_json(a));
    if (spec.contains("full")) {
      if (!spec.at("full").is_array()) throw SchemaError("explicit fan full markers must be an array");
      for (const auto& a : spec.at("full")) full.push_back(finseq_from_json(a));
    }
    return FanTree::explicit_table(std::move(nodes), std::move(full));
  }
  throw SchemaError("unknown fan kind \"" + k + "\"");
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace baire::json_io
