// Command-line front end. All mathematical work happens behind the C API in
// rspace.h; this file only parses argv, assembles the JSON envelope, and
// renders human-readable text from the returned payloads.
#include "rspace.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

using nlohmann::json;

namespace {

struct StringDeleter {
  void operator()(char* s) const { rsp_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct CaseDeleter {
  void operator()(rsp_case_t* c) const { rsp_case_free(c); }
};
using ApiCase = std::unique_ptr<rsp_case_t, CaseDeleter>;

int status_exit(rsp_status st) {
  switch (st) {
    case RSP_OK: return 0;
    case RSP_ERR_USAGE: return 2;
    default: return 1;
  }
}

int fail(rsp_status st) {
  std::cerr << "error: " << rsp_last_error() << "\n";
  return status_exit(st);
}

/// Wraps a payload in the stable envelope and prints it.
int emit_json(const std::string& command, const json& case_desc,
              const json& flags, const json& result) {
  json envelope;
  envelope["command"] = command;
  envelope["case"] = case_desc;
  envelope["result"] = result;
  envelope["version"] = rsp_version();
  envelope["flags"] = flags;
  std::cout << envelope.dump(2) << "\n";
  return 0;
}

ApiCase parse_case_or_exit(const std::string& text, rsp_status& st) {
  rsp_case_t* raw = nullptr;
  st = rsp_case_parse(text.c_str(), &raw);
  return ApiCase(raw);
}

json case_desc_json(const rsp_case_t* c) {
  char* raw = nullptr;
  if (rsp_case_json(c, &raw) != RSP_OK) return nullptr;
  ApiString s(raw);
  return json::parse(s.get());
}

/// The API emits rationals in canonical num/den form; for human-facing text,
/// drop the denominator when it is 1.
std::string pretty(const std::string& q) {
  if (q.size() > 2 && q.ends_with("/1")) return q.substr(0, q.size() - 2);
  return q;
}

std::string join_list(const json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += ", ";
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

std::string join_rationals(const json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += ", ";
    out += pretty(v.get<std::string>());
  }
  return out;
}

void print_constituent_lines(const json& layers) {
  int i = 1;
  for (const auto& layer : layers) {
    std::cout << "  X_" << i++ << " = " << layer["label"].get<std::string>()
              << "\n";
  }
}

void print_obstruction(const json& ob, const std::string& indent) {
  if (ob.contains("note"))
    std::cout << indent << "note: " << ob["note"].get<std::string>() << "\n";
  if (ob.contains("c_nonzero_at"))
    std::cout << indent << "C(m) != 0 at m = " << ob["c_nonzero_at"].dump()
              << "\n";
  if (ob.contains("negative_ratio"))
    std::cout << indent << "negative recurrence ratio "
              << pretty(ob["negative_ratio"]["ratio"].get<std::string>())
              << " at m = " << ob["negative_ratio"]["m"].dump()
              << ", k = " << ob["negative_ratio"]["k"].get<int>() << "\n";
  if (ob.contains("vanished_denominator"))
    std::cout << indent << "vanished recurrence denominator at m = "
              << ob["vanished_denominator"]["m"].dump()
              << ", k = " << ob["vanished_denominator"]["k"].get<int>()
              << "\n";
}

void print_classified(const json& e) {
  std::cout << "  nu = " << pretty(e["nu"].get<std::string>()) << "  "
            << e["constituent"]["label"].get<std::string>() << "  ("
            << e["kind"].get<std::string>() << ")";
  if (e["trivial"].get<bool>()) {
    std::cout << "  trivial representation\n";
    return;
  }
  std::cout << "  norm " << e["norm"].get<std::string>() << "\n";
  if (e.contains("spectrum")) {
    std::cout << "    spectrum:";
    int shown = 0;
    for (const auto& entry : e["spectrum"]) {
      if (shown++ == 6) {
        std::cout << " ...";
        break;
      }
      std::cout << " t" << entry["m"].dump() << "="
                << pretty(entry["t"].get<std::string>());
    }
    std::cout << "\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degenerate principal series structure on the non-unital "
               "irreducible symmetric R-spaces (exact rational arithmetic)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rsp_version()));

  // -- classify -------------------------------------------------------
  auto* cmd_classify = app.add_subcommand(
      "classify", "List the eight families, or the constants of one case");
  std::string classify_case;
  cmd_classify->add_option("case", classify_case,
                           "Case, e.g. sl(r=2,s=5,R) | so(r=3,split) | e6(6)");
  bool classify_json = false;
  cmd_classify->add_flag("--json", classify_json, "Emit JSON");

  // -- coeffs ---------------------------------------------------------
  auto* cmd_coeffs = app.add_subcommand(
      "coeffs", "Expansion coefficients A, B, C at a K-type");
  std::string coeffs_case, coeffs_m;
  bool coeffs_json = false;
  cmd_coeffs->add_option("case", coeffs_case, "Case")->required();
  cmd_coeffs->add_option("--m", coeffs_m, "K-type, comma separated")
      ->required();
  cmd_coeffs->add_flag("--json", coeffs_json, "Emit JSON");

  // -- reduce ---------------------------------------------------------
  auto* cmd_reduce = app.add_subcommand(
      "reduce", "Reducibility of I(nu): witnesses and composition chain");
  std::string reduce_case, reduce_nu;
  bool reduce_json = false;
  cmd_reduce->add_option("case", reduce_case, "Case")->required();
  cmd_reduce->add_option("--nu", reduce_nu, "p/q | i | generic")->required();
  cmd_reduce->add_flag("--json", reduce_json, "Emit JSON");

  // -- compose --------------------------------------------------------
  auto* cmd_compose = app.add_subcommand(
      "compose", "Composition series, optionally cross-checked against the "
                 "transition-graph condensation");
  std::string compose_case, compose_nu, compose_dot;
  long compose_box = -1;
  bool compose_verify = false, compose_json = false;
  cmd_compose->add_option("case", compose_case, "Case")->required();
  cmd_compose->add_option("--nu", compose_nu, "p/q | i | generic")->required();
  cmd_compose->add_option("--box", compose_box,
                          "Truncation m_1 <= M (default: sufficient bound)");
  cmd_compose->add_option("--dot", compose_dot, "Write Graphviz DOT here");
  cmd_compose->add_flag("--verify-graph", compose_verify,
                        "Check the SCC condensation against the closed form");
  cmd_compose->add_flag("--json", compose_json, "Emit JSON");

  // -- unitary --------------------------------------------------------
  auto* cmd_unitary = app.add_subcommand(
      "unitary", "Unitarizable constituents: verdicts at --nu, or the "
                 "case's full classification");
  std::string unitary_case, unitary_nu;
  long unitary_box = -1;
  bool unitary_json = false;
  cmd_unitary->add_option("case", unitary_case, "Case")->required();
  cmd_unitary->add_option("--nu", unitary_nu, "p/q | i | generic");
  cmd_unitary->add_option("--box", unitary_box, "Scan truncation m_1 <= M");
  cmd_unitary->add_flag("--json", unitary_json, "Emit JSON");

  // -- gkdim ----------------------------------------------------------
  auto* cmd_gkdim = app.add_subcommand(
      "gkdim", "Gelfand-Kirillov dimension and associated-variety verdict");
  std::string gkdim_case, gkdim_rep = "principal";
  bool gkdim_json = false;
  cmd_gkdim->add_option("case", gkdim_case, "Case")->required();
  cmd_gkdim->add_option("--rep", gkdim_rep, "principal | small")
      ->check(CLI::IsMember({"principal", "small"}));
  cmd_gkdim->add_flag("--json", gkdim_json, "Emit JSON");

  // -- verify ---------------------------------------------------------
  auto* cmd_verify = app.add_subcommand(
      "verify", "Run the brute-force identity oracles");
  long verify_trials = 1000;
  unsigned long long verify_seed = 20240801ULL;
  bool verify_json = false;
  cmd_verify->add_option("--trials", verify_trials, "Instances per branch");
  cmd_verify->add_option("--seed", verify_seed, "RNG seed");
  cmd_verify->add_flag("--json", verify_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // ---- classify ----
  if (cmd_classify->parsed()) {
    if (classify_case.empty()) {
      char* raw = nullptr;
      rsp_status st = rsp_family_table_json(&raw);
      if (st != RSP_OK) return fail(st);
      ApiString payload(raw);
      json table = json::parse(payload.get());
      if (classify_json)
        return emit_json("classify", nullptr, {{"json", true}}, table);
      std::printf("%-14s %-12s %-10s %-10s %-5s %-3s %-3s %s\n", "family",
                  "params", "n", "p", "r", "d", "e", "b");
      for (const auto& row : table["families"])
        std::printf("%-14s %-12s %-10s %-10s %-5s %-3s %-3s %s\n",
                    row["name"].get<std::string>().c_str(),
                    row["params"].get<std::string>().c_str(),
                    row["n"].get<std::string>().c_str(),
                    row["p"].get<std::string>().c_str(),
                    row["r"].get<std::string>().c_str(),
                    row["d"].get<std::string>().c_str(),
                    row["e"].get<std::string>().c_str(),
                    row["b"].get<std::string>().c_str());
      return 0;
    }
    rsp_status st;
    ApiCase handle = parse_case_or_exit(classify_case, st);
    if (st != RSP_OK) return fail(st);
    char* raw = nullptr;
    st = rsp_case_json(handle.get(), &raw);
    if (st != RSP_OK) return fail(st);
    ApiString payload(raw);
    json j = json::parse(payload.get());
    if (classify_json)
      return emit_json("classify", j, {{"json", true}}, j);
    std::cout << j["name"].get<std::string>() << ": n=" << j["n"].get<long>()
              << " p=" << pretty(j["p"].get<std::string>())
              << " r=" << j["r"].get<int>() << " d=" << j["d"].get<int>()
              << " e=" << j["e"].get<int>() << " b=" << j["b"].get<int>()
              << "\n";
    return 0;
  }

  // ---- coeffs ----
  if (cmd_coeffs->parsed()) {
    rsp_status st;
    ApiCase handle = parse_case_or_exit(coeffs_case, st);
    if (st != RSP_OK) return fail(st);
    char* raw = nullptr;
    st = rsp_coeffs_json(handle.get(), coeffs_m.c_str(), &raw);
    if (st != RSP_OK) return fail(st);
    ApiString payload(raw);
    json j = json::parse(payload.get());
    if (coeffs_json)
      return emit_json("coeffs", case_desc_json(handle.get()),
                       {{"m", coeffs_m}, {"json", true}}, j);
    std::cout << "m = " << j["m"].dump() << "\n"
              << "A = [" << join_rationals(j["A"]) << "]\n"
              << "B = [" << join_rationals(j["B"]) << "]\n"
              << "C = " << pretty(j["C"].get<std::string>())
              << (j["C_zero"].get<bool>() ? "  (zero locus)" : "") << "\n"
              << "casimir = " << pretty(j["casimir"].get<std::string>())
              << "\n";
    return 0;
  }

  // ---- reduce ----
  if (cmd_reduce->parsed()) {
    rsp_status st;
    ApiCase handle = parse_case_or_exit(reduce_case, st);
    if (st != RSP_OK) return fail(st);
    char* raw = nullptr;
    st = rsp_reduce_json(handle.get(), reduce_nu.c_str(), &raw);
    if (st != RSP_OK) return fail(st);
    ApiString payload(raw);
    json j = json::parse(payload.get());
    if (reduce_json)
      return emit_json("reduce", case_desc_json(handle.get()),
                       {{"nu", reduce_nu}, {"json", true}}, j);
    if (!j["reducible"].get<bool>()) {
      std::cout << "irreducible\n";
      return 0;
    }
    std::string js;
    for (const auto& w : j["witnesses"]) {
      if (!js.empty()) js += ",";
      js += std::to_string(w["j"].get<int>());
    }
    std::cout << "reducible; witness" << (j["witnesses"].size() > 1 ? "es" : "")
              << " j=" << js << "; composition chain "
              << j["chain"].get<std::string>() << "\n";
    return 0;
  }

  // ---- compose ----
  if (cmd_compose->parsed()) {
    rsp_status st;
    ApiCase handle = parse_case_or_exit(compose_case, st);
    if (st != RSP_OK) return fail(st);
    char* raw = nullptr;
    st = rsp_compose_json(handle.get(), compose_nu.c_str(), compose_box,
                          compose_verify ? 1 : 0, &raw);
    if (st != RSP_OK) return fail(st);
    ApiString payload(raw);
    json j = json::parse(payload.get());
    if (!compose_dot.empty()) {
      char* dot_raw = nullptr;
      st = rsp_compose_dot(handle.get(), compose_nu.c_str(), compose_box,
                           &dot_raw);
      if (st != RSP_OK) return fail(st);
      ApiString dot(dot_raw);
      std::ofstream out(compose_dot, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << compose_dot << "\n";
        return 1;
      }
      out << dot.get();
      j["dot_path"] = compose_dot;
    }
    if (compose_json)
      return emit_json("compose", case_desc_json(handle.get()),
                       {{"nu", compose_nu},
                        {"box", compose_box},
                        {"verify_graph", compose_verify},
                        {"json", true}},
                       j);
    if (!j["reducible"].get<bool>()) {
      std::cout << "irreducible";
      if (j.contains("graph"))
        std::cout << " (graph on box " << j["graph"]["box"].get<long>()
                  << ": "
                  << (j["graph"]["strongly_connected"].get<bool>()
                          ? "strongly connected"
                          : "NOT strongly connected")
                  << ")";
      std::cout << "\n";
      return 0;
    }
    std::cout << "composition chain " << j["chain"].get<std::string>() << "\n"
              << "constituents (bottom-up):\n";
    print_constituent_lines(j["constituents"]);
    if (j.contains("graph")) {
      std::cout << "graph cross-check on box "
                << j["graph"]["box"].get<long>() << ": "
                << (j["agreement"].get<bool>() ? "agrees" : "DISAGREES")
                << " (" << j["graph"]["components"].get<long>()
                << " components, layer sizes ["
                << join_list(j["graph"]["layer_sizes"]) << "])\n";
    }
    if (j.contains("dot_path"))
      std::cout << "wrote " << j["dot_path"].get<std::string>() << "\n";
    return 0;
  }

  // ---- unitary ----
  if (cmd_unitary->parsed()) {
    rsp_status st;
    ApiCase handle = parse_case_or_exit(unitary_case, st);
    if (st != RSP_OK) return fail(st);
    char* raw = nullptr;
    st = rsp_unitary_json(handle.get(),
                          unitary_nu.empty() ? nullptr : unitary_nu.c_str(),
                          unitary_box, &raw);
    if (st != RSP_OK) return fail(st);
    ApiString payload(raw);
    json j = json::parse(payload.get());
    if (unitary_json) {
      json flags = {{"box", unitary_box}, {"json", true}};
      if (!unitary_nu.empty()) flags["nu"] = unitary_nu;
      return emit_json("unitary", case_desc_json(handle.get()), flags, j);
    }
    if (j.contains("classification")) {
      std::cout << "unitarizable constituents (spectra on box "
                << j["box"].get<long>() << "):\n";
      for (const auto& e : j["classification"]) print_classified(e);
      return 0;
    }
    std::cout << "nu = " << pretty(j["nu"].get<std::string>()) << "\n";
    if (j.contains("note"))
      std::cout << j["note"].get<std::string>() << "\n";
    if (j.contains("full_space")) {
      std::cout << "full space: "
                << (j["full_space"]["obstructed"].get<bool>()
                        ? "not unitarizable"
                        : "no obstruction found")
                << "\n";
      print_obstruction(j["full_space"], "  ");
    }
    if (j.contains("constituents")) {
      for (const auto& v : j["constituents"]) {
        std::cout << v["constituent"]["label"].get<std::string>() << ": "
                  << (v["unitary"].get<bool>() ? "unitarizable"
                                               : "not unitarizable")
                  << "\n";
        if (v.contains("classification") &&
            !v["classification"]["trivial"].get<bool>())
          std::cout << "  norm "
                    << v["classification"]["norm"].get<std::string>() << "\n";
        if (v.contains("obstruction")) print_obstruction(v["obstruction"], "  ");
      }
    }
    return 0;
  }

  // ---- gkdim ----
  if (cmd_gkdim->parsed()) {
    rsp_status st;
    ApiCase handle = parse_case_or_exit(gkdim_case, st);
    if (st != RSP_OK) return fail(st);
    char* raw = nullptr;
    st = rsp_gkdim_json(handle.get(), gkdim_rep.c_str(), &raw);
    if (st != RSP_OK) return fail(st);
    ApiString payload(raw);
    json j = json::parse(payload.get());
    if (gkdim_json)
      return emit_json("gkdim", case_desc_json(handle.get()),
                       {{"rep", gkdim_rep}, {"json", true}}, j);
    std::cout << "GK dimension (" << j["rep"].get<std::string>()
              << "): " << j["gk_dim"].get<long>() << "\n";
    if (j.contains("degree_count"))
      std::cout << "degree count D = " << j["degree_count"].get<long>()
                << " (root system " << j["root_system"].get<std::string>()
                << ")\n";
    std::cout << "minimal orbit dimension: " << j["min_orbit_dim"].get<long>()
              << "\n"
              << "associated variety: " << j["verdict"].get<std::string>()
              << "\n";
    return 0;
  }

  // ---- verify ----
  if (cmd_verify->parsed()) {
    char* raw = nullptr;
    rsp_status st = rsp_verify_json(verify_trials, verify_seed, &raw);
    if (st != RSP_OK) return fail(st);
    ApiString payload(raw);
    json j = json::parse(payload.get());
    if (verify_json)
      return emit_json("verify", nullptr,
                       {{"trials", verify_trials},
                        {"seed", verify_seed},
                        {"json", true}},
                       j);
    bool ok = j["ok"].get<bool>();
    std::cout << "identity (both branches): "
              << (j["identity_ok"].get<bool>() ? "PASS" : "FAIL") << " ("
              << j["instances_checked"].get<long>() << " instances)\n"
              << "lagrange vanishing: "
              << (j["lagrange_ok"].get<bool>() ? "PASS" : "FAIL") << "\n"
              << "coefficient consistency: "
              << (j["coeff_consistency_ok"].get<bool>() ? "PASS" : "FAIL")
              << "\n"
              << (ok ? "all oracles passed" : "ORACLE FAILURE") << "\n";
    return ok ? 0 : 1;
  }

  return 2;
}
