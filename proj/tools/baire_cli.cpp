// baire: JSON front end for the formal Baire space engine.
//
//   baire eval     --op OP --point PT
//   baire bar      --op OP [--limit N] [--cutoff N]
//   baire modulus  --op OP [--fan FAN] [--budget N]
//   baire convert  --to cov|map|brouwer --input X
//   baire check    [--suite NAME|all] [--seed S] [--count N] [--samples N]
//   baire cbar     --op OP [--from brouwer|function] --addrs [A, ...]
//
// Every JSON argument is inline text or a file path. Exit codes: 0 ok,
// 1 property violated, 2 parse or schema error, 3 fuel or cutoff exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "baire/bars_fans.hpp"
#include "baire/formal_space.hpp"
#include "baire/json_io.hpp"
#include "baire/suites.hpp"

namespace {

using baire::Nat;
using baire::json_io::Json;
namespace jio = baire::json_io;

enum Exit : int { kOk = 0, kViolated = 1, kSchema = 2, kFuel = 3 };

struct Options {
  Nat fuel = baire::kDefaultFuel;
  Nat cutoff = 4;
  Nat limit = 100;
  Nat budget = baire::kDefaultDepthBudget;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t samples = 0;
  std::string op, point, fan = R"({"kind":"full_binary"})", input, to, addrs, suite = "all", from = "brouwer";
};

Json load(const std::string& arg, const char* what) {
  if (arg.empty()) throw baire::SchemaError(std::string("missing ") + what);
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return jio::parse(arg);
  std::ifstream in(arg);
  if (!in) throw baire::SchemaError(std::string("cannot read ") + what + " file \"" + arg + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return jio::parse(buf.str());
}

// Accepts the wrapped output of an earlier `convert`.
Json unwrap(Json j) {
  if (j.is_object() && j.contains("result") && j.contains("construction")) return j.at("result");
  return j;
}

Json run_eval(const Options& o) {
  const auto op = jio::op_from_json(unwrap(load(o.op, "--op")));
  const auto pt = jio::point_from_json(unwrap(load(o.point, "--point")));
  const auto r = baire::eval(op, pt, o.fuel);
  Json j;
  j["value"] = r.value;
  j["modulus"] = r.modulus;
  j["construction"] = "neighbourhood-evaluation";
  return j;
}

Json run_bar(const Options& o) {
  const auto op = jio::op_from_json(unwrap(load(o.op, "--op")));
  const auto listing = baire::bar_enumerate(op, o.limit, o.cutoff, o.fuel);
  Json items = Json::array();
  for (const auto& it : listing.items) items.push_back(Json{{"addr", jio::to_json(it.address)}, {"value", it.value}});
  Json j;
  j["bar"] = std::move(items);
  j["truncated"] = listing.truncated;
  j["construction"] = "bar-enumeration";
  return j;
}

Json run_modulus(const Options& o) {
  const auto op = jio::op_from_json(unwrap(load(o.op, "--op")));
  const auto fan = jio::make_fan(unwrap(load(o.fan, "--fan")));
  const auto f = baire::ContinuousFn::realised_by(op, o.fuel);
  const Nat n = baire::uniform_modulus(f, fan, o.budget);
  Json j;
  j["N"] = n;
  j["M"] = baire::modulus_M(f, fan, n);
  j["construction"] = "uniform-modulus";
  return j;
}

Json run_convert(const Options& o) {
  const Json in = unwrap(load(o.input, "--input"));
  const bool is_op = in.is_object() && (in.contains("leaf") || in.contains("sup"));
  const bool is_cov = in.is_object() && in.contains("root") && in.contains("shape");
  const bool is_map = in.is_object() && in.contains("witness") && in.contains("values");
  Json j;
  if (o.to == "cov") {
    if (is_op) {
      j["construction"] = "cover-witness-from-operation";
      j["result"] = jio::to_json(baire::cov_from_brouwer(baire::FinSeq{}, jio::op_from_json(in)));
    } else if (is_map) {
      j["construction"] = "formal-map-witness";
      j["result"] = jio::to_json(jio::map_from_json(in).witness());
    } else {
      throw baire::SchemaError("convert --to cov expects a brouwer op or a formal map");
    }
  } else if (o.to == "brouwer") {
    if (is_cov) {
      j["construction"] = "operation-from-cover-witness";
      j["result"] = jio::to_json(baire::brouwer_from_cov(jio::cov_from_json(in)));
    } else if (is_map) {
      j["construction"] = "realiser-from-formal-map";
      j["result"] = jio::to_json(*baire::realiser_from_map(jio::map_from_json(in), o.fuel).realiser());
    } else if (is_op) {
      j["construction"] = "skeleton";
      j["result"] = jio::to_json(baire::skeleton(jio::op_from_json(in)));
    } else {
      throw baire::SchemaError("convert --to brouwer expects a cover witness, formal map or brouwer op");
    }
  } else if (o.to == "map") {
    if (!is_op) throw baire::SchemaError("convert --to map expects a brouwer op");
    const auto f = baire::ContinuousFn::realised_by(jio::op_from_json(in), o.fuel);
    j["construction"] = "formal-map-from-realisable";
    j["result"] = jio::to_json(baire::map_from_realisable(f));
  } else {
    throw baire::SchemaError("--to must be cov, map or brouwer");
  }
  return j;
}

int run_check(const Options& o, Json& out) {
  std::vector<std::string> names = o.suite == "all" ? baire::suites::suite_names() : std::vector{o.suite};
  const baire::suites::SuiteOptions so{o.seed, o.count, o.samples};
  Json suites = Json::array();
  bool all = true;
  for (const auto& name : names) {
    const auto r = baire::suites::run_suite(name, so);
    Json s;
    s["suite"] = r.name;
    s["checked"] = r.checked;
    s["failures"] = r.failure_count;
    s["passed"] = r.passed();
    if (!r.failures.empty()) s["witnesses"] = r.failures;
    suites.push_back(std::move(s));
    all = all && r.passed();
  }
  out["seed"] = o.seed;
  out["suites"] = std::move(suites);
  out["passed"] = all;
  out["construction"] = "invariant-suites";
  return all ? kOk : kViolated;
}

Json run_cbar(const Options& o) {
  const auto op = jio::op_from_json(unwrap(load(o.op, "--op")));
  baire::CBar p = o.from == "function" ? baire::cbar_from_function(baire::ContinuousFn::realised_by(op, o.fuel))
                  : o.from == "brouwer" ? baire::CBar::from_brouwer(op, o.fuel)
                                        : throw baire::SchemaError("--from must be brouwer or function");
  const Json addrs = load(o.addrs, "--addrs");
  if (!addrs.is_array()) throw baire::SchemaError("--addrs must be an array of addresses");
  Json answers = Json::array();
  for (const auto& entry : addrs) {
    const auto a = jio::finseq_from_json(entry);
    const auto ans = baire::cbar_member(p, a, o.cutoff, o.fuel);
    Json row;
    row["addr"] = jio::to_json(a);
    row["member"] = baire::to_string(ans.verdict);
    if (ans.witness) row["witness"] = Json::array({jio::to_json(ans.witness->first), jio::to_json(ans.witness->second)});
    answers.push_back(std::move(row));
  }
  Json j;
  j["source"] = baire::to_string(p.source());
  j["answers"] = std::move(answers);
  j["construction"] = "cbar-membership";
  return j;
}

int emit_error(const char* kind, const std::string& msg, int code) {
  Json j;
  j["error"] = kind;
  j["message"] = msg;
  j["exit"] = code;
  std::cout << j.dump() << '\n';
  return code;
}

Nat env_fuel() {
  const char* v = std::getenv("BAIRE_FUEL");
  if (v == nullptr || *v == '\0') return baire::kDefaultFuel;
  char* end = nullptr;
  const auto n = std::strtoull(v, &end, 10);
  if (*end != '\0' || *v == '-') throw baire::SchemaError("BAIRE_FUEL must be a natural number");
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  try {
    o.fuel = env_fuel();
  } catch (const baire::SchemaError& e) {
    return emit_error("schema", e.what(), kSchema);
  }

  CLI::App app{"Brouwer-operations, cover witnesses, formal maps and fan moduli"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();
  app.add_option("--fuel", o.fuel, "sup-node descents per evaluation (env BAIRE_FUEL)");
  app.add_option("--cutoff", o.cutoff, "index cutoff for bounded listings and searches");
  app.add_option("--limit", o.limit, "maximum bar entries listed");
  app.add_option("--seed", o.seed, "seed for check suites");
  app.add_option("--budget", o.budget, "depth budget for modulus search");

  auto* eval = app.add_subcommand("eval", "evaluate an op at a point");
  eval->add_option("--op", o.op)->required();
  eval->add_option("--point", o.point)->required();
  auto* bar = app.add_subcommand("bar", "list the bar of an op");
  bar->add_option("--op", o.op)->required();
  auto* mod = app.add_subcommand("modulus", "uniform modulus N and bound M over a fan");
  mod->add_option("--op", o.op)->required();
  mod->add_option("--fan", o.fan, "fan spec");
  auto* conv = app.add_subcommand("convert", "convert between ops, cover witnesses and formal maps");
  conv->add_option("--to", o.to)->required()->check(CLI::IsMember({"cov", "map", "brouwer"}));
  conv->add_option("--input", o.input)->required();
  auto* check = app.add_subcommand("check", "run the invariant suites");
  check->add_option("--suite", o.suite);
  check->add_option("--count", o.count, "objects per suite (0: suite default)");
  check->add_option("--samples", o.samples, "points per object (0: suite default)");
  auto* cbar = app.add_subcommand("cbar", "c-bar membership answers");
  cbar->add_option("--op", o.op)->required();
  cbar->add_option("--from", o.from)->check(CLI::IsMember({"brouwer", "function"}));
  cbar->add_option("--addrs", o.addrs, "JSON array of addresses")->required();

  // Global options may also follow the verb.
  for (auto* sub : {eval, bar, mod, conv, check, cbar}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what(), kSchema);
  }

  try {
    Json out;
    int code = kOk;
    if (*eval) out = run_eval(o);
    if (*bar) out = run_bar(o);
    if (*mod) out = run_modulus(o);
    if (*conv) out = run_convert(o);
    if (*check) code = run_check(o, out);
    if (*cbar) out = run_cbar(o);
    std::cout << out.dump() << '\n';
    return code;
  } catch (const baire::FuelExhausted& e) {
    return emit_error("fuel", e.what(), kFuel);
  } catch (const baire::SchemaError& e) {
    return emit_error("schema", e.what(), kSchema);
  } catch (const baire::NaturalOverflow& e) {
    return emit_error("overflow", e.what(), kSchema);
  } catch (const baire::PropertyViolation& e) {
    return emit_error("property", e.what(), kViolated);
  } catch (const nlohmann::json::exception& e) {
    return emit_error("schema", e.what(), kSchema);
  }
}
