#include "kings/cli.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kings/algebra.hpp"
#include "kings/certificate.hpp"
#include "kings/errors.hpp"
#include "kings/explorer.hpp"
#include "kings/modring.hpp"
#include "kings/seating.hpp"
#include "kings/solver.hpp"

namespace kings {

namespace {

using nlohmann::json;

// Enumeration payloads and the CLI-side Dyson expansion stay bounded; the
// library itself is uncapped.
constexpr long long kMaxEnumerationSeats = 15;
constexpr std::size_t kDysonCliTermLimit = 2'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::size_t begin = pos, end = comma;
    while (begin < end && text[begin] == ' ') ++begin;
    while (end > begin && text[end - 1] == ' ') --end;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end || begin == end)
      throw UsageError(flag + " expects a comma-separated integer list, got '" + text + "'");
    values.push_back(value);
    pos = comma + 1;
  }
  return values;
}

std::string join_ints(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::feasible:
      return "feasible";
    case Verdict::infeasible_exhausted:
      return "infeasible_exhausted";
    case Verdict::budget_exceeded:
      return "budget_exceeded";
  }
  return "?";
}

// Seats are 0-based internally; every seat number the CLI prints is 1-based.
json seats_1based(const std::vector<int>& seats) {
  json arr = json::array();
  for (int s : seats) arr.push_back(s + 1);
  return arr;
}

json witness_json(const std::optional<Seating>& witness) {
  if (!witness) return nullptr;
  return seats_1based(witness->positions());
}

json orbit_witness_json(const std::optional<InfeasibilityWitness>& w) {
  if (!w) return nullptr;
  return json{{"k", w->k},
              {"orbit_size", w->orbit_size},
              {"orbit_count", w->orbit_count},
              {"explanation",
               {{"seats_per_orbit", w->explanation.seats_per_orbit},
                {"orbit_count", w->explanation.orbit_count},
                {"min_empty_per_orbit", w->explanation.min_empty_per_orbit},
                {"required_empty_seats", w->explanation.required_empty_seats},
                {"available_empty_seats", w->explanation.available_empty_seats},
                {"text", w->explanation.describe()}}}};
}

json entry_json(const SurveyEntry& e) {
  return json{{"distances", e.distances},
              {"verdict", verdict_name(e.verdict)},
              {"witness", witness_json(e.witness)},
              {"nodes", e.nodes}};
}

Instance instance_for(long long m, const std::vector<int>& distances) {
  if (m < 3 || m % 2 == 0) throw UsageError("m must be odd and >= 3, got " + std::to_string(m));
  const long long n = (m - 1) / 2;
  if (static_cast<long long>(distances.size()) != n)
    throw UsageError("m = " + std::to_string(m) + " needs exactly " + std::to_string(n) + " distances, got " +
                     std::to_string(distances.size()));
  return Instance(distances);
}

// ------------------------------------------------------------- subcommands

json cmd_solve(long long m, const std::vector<int>& distances, bool all, bool up_to_rotation) {
  const Instance inst = instance_for(m, distances);
  if (all) {
    if (m > kMaxEnumerationSeats)
      throw resource_error("enumeration payloads are supported for m <= " + std::to_string(kMaxEnumerationSeats));
    const auto seatings = enumerate_all(inst, up_to_rotation);
    json list = json::array();
    for (const auto& s : seatings) list.push_back(seats_1based(s.positions()));
    const auto count = static_cast<std::uint64_t>(seatings.size());
    return json{{"mode", "enumerate"},
                {"up_to_rotation", up_to_rotation},
                {"count", count},
                {"full_count", up_to_rotation ? count * static_cast<std::uint64_t>(m) : count},
                {"seatings", list}};
  }
  const SearchOutcome outcome = solve(inst);
  return json{{"mode", "search"},
              {"verdict", verdict_name(outcome.verdict)},
              {"witness", witness_json(outcome.witness)},
              {"nodes_explored", outcome.nodes_explored},
              {"orbit_witness", orbit_witness_json(orbit_infeasibility_witness(inst))}};
}

json certificate_json(const Certificate& cert, const std::optional<std::vector<int>>& distances) {
  return json{{"p", cert.p},
              {"n", cert.n},
              {"wilson_value", cert.wilson_value.value()},
              {"two_power", cert.two_power.value()},
              {"coeff_value", cert.coeff_value.value()},
              {"sign", to_int(cert.sign)},
              {"expansion_coeff", cert.expansion_coeff ? json(cert.expansion_coeff->value()) : json(nullptr)},
              {"consistent", cert.consistent},
              {"distances", distances ? json(*distances) : json(nullptr)}};
}

json cmd_certify(long long p, bool cross_check, std::optional<std::vector<int>> distances, bool dump_poly,
                 std::ostream& err) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw UsageError("p must be an odd prime, got " + std::to_string(p));
  const auto n = static_cast<std::size_t>((p - 1) / 2);
  if (distances && distances->size() != n)
    throw UsageError("p = " + std::to_string(p) + " needs exactly " + std::to_string(n) + " distances");

  std::optional<std::vector<int>> used;
  if (cross_check || dump_poly) used = distances.value_or(std::vector<int>(n, 1));

  if (dump_poly) err << build_king_poly(Instance(*used), kExpansionTermLimit).dump();
  const Certificate cert = cross_check ? cross_check_expansion(p, *used) : certify(p);
  return certificate_json(cert, cross_check ? used : std::nullopt);
}

json cmd_dyson(const std::vector<int>& a, const std::string& method) {
  const DysonSpec spec(a);
  std::optional<BigInt> brute, closed;
  if (method == "brute" || method == "both") brute = dyson_constant_term_bruteforce(spec, kDysonCliTermLimit);
  if (method == "closed" || method == "both") closed = dyson_closed_form(spec);
  return json{{"method", method},
              {"brute", brute ? json(brute->str()) : json(nullptr)},
              {"closed", closed ? json(closed->str()) : json(nullptr)},
              {"equal", (brute && closed) ? json(*brute == *closed) : json(nullptr)}};
}

json cmd_survey(long long m, std::optional<std::uint64_t> budget) {
  const SurveyReport report = survey(m, budget);
  json entries = json::array(), counterexamples = json::array();
  for (const auto& e : report.entries) entries.push_back(entry_json(e));
  for (const auto& e : report.counterexamples) counterexamples.push_back(entry_json(e));
  return json{{"m", report.m},
              {"entry_count", report.entries.size()},
              {"entries", entries},
              {"counterexample_count", report.counterexamples.size()},
              {"counterexamples", counterexamples}};
}

json cmd_counterexample(long long m, std::optional<long long> k) {
  const Instance inst = composite_counterexample(m, k);
  const auto witness = orbit_infeasibility_witness(inst);
  const long long k_used = witness->k;
  const OrbitDecomposition dec = orbit_decomposition(m, k_used);

  json orbits = json::array();
  for (const auto& orbit : dec.orbits) orbits.push_back(seats_1based(orbit));

  json exhaustive = nullptr;
  if (m <= kMaxEnumerationSeats) {
    const SearchOutcome outcome = solve(inst);
    exhaustive = json{{"verdict", verdict_name(outcome.verdict)}, {"nodes_explored", outcome.nodes_explored}};
  }
  return json{{"m", m},           {"k", k_used},      {"n", inst.n()},
              {"distances", inst.distances()},        {"orbits", orbits},
              {"witness", orbit_witness_json(witness)}, {"exhaustive_check", exhaustive}};
}

// ------------------------------------------------------------------ tables

void key_value(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(18) << key << value << '\n';
}

std::string seats_text(const json& arr) {
  if (arr.is_null()) return "-";
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += ',';
    s += std::to_string(v.get<long long>());
  }
  return s;
}

void render_table(const json& envelope, std::ostream& out) {
  const std::string command = envelope["command"];
  key_value(out, "command", command);
  if (envelope["status"] == "error") {
    key_value(out, "status", "error");
    key_value(out, "message", envelope["message"]);
    return;
  }
  const json& in = envelope["inputs"];
  const json& res = envelope["result"];

  if (command == "solve" && res["mode"] == "enumerate") {
    key_value(out, "m", in["m"].dump());
    key_value(out, "distances", seats_text(in["distances"]));
    key_value(out, "up to rotation", res["up_to_rotation"].dump());
    key_value(out, "count", res["count"].dump());
    key_value(out, "full count", res["full_count"].dump());
    for (const auto& s : res["seatings"]) out << "  " << seats_text(s) << '\n';
  } else if (command == "solve") {
    key_value(out, "m", in["m"].dump());
    key_value(out, "distances", seats_text(in["distances"]));
    key_value(out, "verdict", res["verdict"]);
    key_value(out, "witness", seats_text(res["witness"]));
    key_value(out, "nodes", res["nodes_explored"].dump());
    if (!res["orbit_witness"].is_null()) {
      const json& w = res["orbit_witness"];
      key_value(out, "orbit witness",
                "k=" + w["k"].dump() + ", " + w["orbit_count"].dump() + " orbits of size " + w["orbit_size"].dump());
      key_value(out, "", w["explanation"]["text"]);
    }
  } else if (command == "certify") {
    for (const char* key : {"p", "n", "wilson_value", "two_power", "coeff_value", "sign"})
      key_value(out, key, res[key].dump());
    key_value(out, "expansion_coeff", res["expansion_coeff"].is_null() ? "-" : res["expansion_coeff"].dump());
    key_value(out, "consistent", res["consistent"].dump());
  } else if (command == "dyson") {
    key_value(out, "a", seats_text(in["a"]));
    key_value(out, "method", res["method"]);
    key_value(out, "brute", res["brute"].is_null() ? "-" : res["brute"].get<std::string>());
    key_value(out, "closed", res["closed"].is_null() ? "-" : res["closed"].get<std::string>());
    key_value(out, "equal", res["equal"].is_null() ? "-" : res["equal"].dump());
  } else if (command == "survey") {
    key_value(out, "m", res["m"].dump());
    key_value(out, "entries", res["entry_count"].dump());
    key_value(out, "counterexamples", res["counterexample_count"].dump());
    std::size_t width = 9;
    for (const auto& e : res["entries"]) width = std::max(width, seats_text(e["distances"]).size());
    out << std::left << std::setw(static_cast<int>(width + 2)) << "distances" << std::setw(22) << "verdict"
        << std::setw(10) << "nodes" << "witness\n";
    for (const auto& e : res["entries"])
      out << std::left << std::setw(static_cast<int>(width + 2)) << seats_text(e["distances"]) << std::setw(22)
          << e["verdict"].get<std::string>() << std::setw(10) << e["nodes"].dump() << seats_text(e["witness"])
          << '\n';
  } else if (command == "counterexample") {
    key_value(out, "m", res["m"].dump());
    key_value(out, "k", res["k"].dump());
    key_value(out, "distances", seats_text(res["distances"]));
    for (const auto& orbit : res["orbits"]) out << "  orbit: " << seats_text(orbit) << '\n';
    key_value(out, "argument", res["witness"]["explanation"]["text"]);
    if (!res["exhaustive_check"].is_null()) {
      key_value(out, "exhaustive", res["exhaustive_check"]["verdict"]);
      key_value(out, "nodes", res["exhaustive_check"]["nodes_explored"].dump());
    }
  }
  key_value(out, "elapsed_ms", envelope["elapsed_ms"].dump());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact seatings, certificates, and surveys for couples around a (2n+1)-seat table"};
  app.name("kings-table");
  app.require_subcommand(1);

  std::string format = "json";
  long long opt_m = 0, opt_p = 0, opt_k = 0;
  std::string opt_distances, opt_a;
  std::string opt_method = "both";
  bool flag_all = false, flag_rotation = false, flag_cross = false, flag_dump = false;
  std::uint64_t opt_budget = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Search for a valid seating, or enumerate all of them");
  solve_cmd->add_option("--m", opt_m, "Seat count, odd, = 2n+1")->required();
  solve_cmd->add_option("--distances", opt_distances, "Comma-separated list of n distances")->required();
  solve_cmd->add_flag("--all", flag_all, "Enumerate every valid seating");
  solve_cmd->add_flag("--up-to-rotation", flag_rotation, "List one representative per rotation class")
      ->needs(solve_cmd->get_option("--all"));
  add_format(solve_cmd);

  CLI::App* certify_cmd = app.add_subcommand("certify", "Wilson/Fermat certificate for the prime case");
  certify_cmd->add_option("--p", opt_p, "Odd prime seat count")->required();
  certify_cmd->add_flag("--cross-check", flag_cross, "Re-derive the coefficient by full expansion");
  certify_cmd->add_option("--distances", opt_distances, "Distances for the expansion (default all 1)");
  certify_cmd->add_flag("--dump-poly", flag_dump, "Dump the expanded polynomial to stderr");
  add_format(certify_cmd);

  CLI::App* dyson_cmd = app.add_subcommand("dyson", "Constant-term identity, by expansion and closed form");
  dyson_cmd->add_option("--a", opt_a, "Comma-separated exponents")->required();
  dyson_cmd->add_option("--method", opt_method, "brute, closed, or both")
      ->check(CLI::IsMember({"brute", "closed", "both"}));
  add_format(dyson_cmd);

  CLI::App* survey_cmd = app.add_subcommand("survey", "Feasibility of every invertible distance multiset");
  survey_cmd->add_option("--m", opt_m, "Odd composite seat count")->required();
  CLI::Option* budget_opt = survey_cmd->add_option("--budget", opt_budget, "Node budget per entry");
  add_format(survey_cmd);

  CLI::App* ce_cmd = app.add_subcommand("counterexample", "The all-equal-distances composite construction");
  ce_cmd->add_option("--m", opt_m, "Odd composite seat count")->required();
  CLI::Option* k_opt = ce_cmd->add_option("--k", opt_k, "Divisor of m to use (default: smallest prime divisor)");
  add_format(ce_cmd);

  json envelope{{"command", ""}, {"inputs", json::object()}, {"result", json::object()}, {"elapsed_ms", 0.0}};
  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    envelope["status"] = "error";
    envelope["message"] = message;
    envelope["result"] = json::object();
    err << kind << ": " << message << '\n';
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = fail("usage error", e.what(), 2);
    out << envelope.dump(2) << '\n';
    return code;
  }

  int exit_code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (app.got_subcommand(solve_cmd)) {
      envelope["command"] = "solve";
      const auto distances = parse_int_list(opt_distances, "--distances");
      envelope["inputs"] = {{"m", opt_m},
                            {"distances", distances},
                            {"all", flag_all},
                            {"up_to_rotation", flag_rotation},
                            {"format", format}};
      envelope["result"] = cmd_solve(opt_m, distances, flag_all, flag_rotation);
    } else if (app.got_subcommand(certify_cmd)) {
      envelope["command"] = "certify";
      std::optional<std::vector<int>> distances;
      if (certify_cmd->count("--distances") > 0) distances = parse_int_list(opt_distances, "--distances");
      envelope["inputs"] = {{"p", opt_p},
                            {"cross_check", flag_cross},
                            {"distances", distances ? json(*distances) : json(nullptr)},
                            {"dump_poly", flag_dump},
                            {"format", format}};
      envelope["result"] = cmd_certify(opt_p, flag_cross, distances, flag_dump, err);
    } else if (app.got_subcommand(dyson_cmd)) {
      envelope["command"] = "dyson";
      const auto a = parse_int_list(opt_a, "--a");
      envelope["inputs"] = {{"a", a}, {"method", opt_method}, {"format", format}};
      envelope["result"] = cmd_dyson(a, opt_method);
    } else if (app.got_subcommand(survey_cmd)) {
      envelope["command"] = "survey";
      std::optional<std::uint64_t> budget;
      if (budget_opt->count() > 0) budget = opt_budget;
      envelope["inputs"] = {{"m", opt_m}, {"budget", budget ? json(*budget) : json(nullptr)}, {"format", format}};
      envelope["result"] = cmd_survey(opt_m, budget);
    } else {
      envelope["command"] = "counterexample";
      std::optional<long long> k;
      if (k_opt->count() > 0) k = opt_k;
      envelope["inputs"] = {{"m", opt_m}, {"k", k ? json(*k) : json(nullptr)}, {"format", format}};
      envelope["result"] = cmd_counterexample(opt_m, k);
    }
    envelope["status"] = "ok";
  } catch (const resource_error& e) {
    exit_code = fail("resource error", e.what(), 3);
  } catch (const std::exception& e) {
    // Domain errors from the library mean the request itself was malformed.
    exit_code = fail("usage error", e.what(), 2);
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  envelope["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();

  if (format == "table")
    render_table(envelope, out);
  else
    out << envelope.dump(2) << '\n';
  return exit_code;
}

}  // namespace kings
