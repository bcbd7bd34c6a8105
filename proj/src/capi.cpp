#include "rspace.h"

#include "core/cases.hpp"
#include "core/coeffs.hpp"
#include "core/errors.hpp"
#include "core/gkdim.hpp"
#include "core/identity.hpp"
#include "core/ktype.hpp"
#include "core/series.hpp"
#include "core/unitarity.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <random>
#include <string>

using nlohmann::json;
using namespace rspace;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Runs `fn` (which returns the payload string), mapping exceptions to
/// status codes and storing the message for rsp_last_error.
template <typename Fn>
rsp_status guarded(char** out, Fn&& fn) {
  if (!out) {
    g_last_error = "null output parameter";
    return RSP_ERR_USAGE;
  }
  *out = nullptr;
  try {
    std::string payload = fn();
    *out = dup_string(payload);
    if (!*out) {
      g_last_error = "allocation failure";
      return RSP_ERR_INTERNAL;
    }
    return RSP_OK;
  } catch (const UsageError& e) {
    g_last_error = e.what();
    return RSP_ERR_USAGE;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return RSP_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSP_ERR_INTERNAL;
  }
}

const CaseSpec& unwrap(const rsp_case_t* c);

/// Default truncation: comfortably past every vanishing threshold of the
/// parameter, so graphs and scans see the full structure.
long effective_box(const CaseSpec& c, const SpectralParam& nu, long box) {
  if (box >= 0) return box;
  Rational bound = c.p / 2;
  if (nu.kind == SpectralParam::Kind::RealRational)
    bound += abs(nu.value);
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), bound.get_num().get_mpz_t(),
             bound.get_den().get_mpz_t());
  return to_long(Rational(q)) + 2;
}

json weight_json(const Weight& m) {
  json a = json::array();
  for (long v : m) a.push_back(v);
  return a;
}

json constituent_json(const Constituent& c) {
  json j;
  j["label"] = c.str();
  if (c.lower) j["lower"] = {{"j", c.lower->j}, {"bound", c.lower->bound}};
  if (c.upper) j["upper"] = {{"j", c.upper->j}, {"bound", c.upper->bound}};
  return j;
}

json spectrum_json(const Spectrum& sp) {
  json arr = json::array();
  for (const auto& [m, t] : sp.values)
    arr.push_back({{"m", weight_json(m)}, {"t", rational_str(t)}});
  return arr;
}

json obstruction_json(const ObstructionReport& ob) {
  json j;
  j["obstructed"] = !ob.empty();
  if (!ob.note.empty()) j["note"] = ob.note;
  if (ob.c_nonzero_at) j["c_nonzero_at"] = weight_json(*ob.c_nonzero_at);
  if (ob.negative_ratio)
    j["negative_ratio"] = {{"m", weight_json(ob.negative_ratio->m)},
                           {"k", ob.negative_ratio->k},
                           {"ratio", rational_str(ob.negative_ratio->ratio)}};
  if (ob.vanished_denominator)
    j["vanished_denominator"] = {
        {"m", weight_json(ob.vanished_denominator->first)},
        {"k", ob.vanished_denominator->second}};
  return j;
}

json classified_json(const CaseSpec& cs, const ClassifiedConstituent& e,
                     long box) {
  json j;
  j["nu"] = rational_str(e.nu);
  j["constituent"] = constituent_json(e.region);
  j["kind"] = e.quotient ? "quotient" : "subrepresentation";
  j["trivial"] = e.trivial;
  if (!e.trivial) {
    j["critical_index"] = e.critical_index;
    j["norm"] = e.norm.str();
    j["spectrum"] = spectrum_json(spectrum_closed_form(cs, e, box));
  }
  return j;
}

std::string reduce_payload(const CaseSpec& cs, const SpectralParam& nu) {
  auto rep = reducibility(cs, nu);
  json j;
  j["nu"] = nu.str();
  j["reducible"] = rep.reducible;
  if (rep.reducible) {
    j["side"] = rep.side;
    json ws = json::array();
    for (const auto& w : rep.witnesses)
      ws.push_back({{"j", w.j}, {"offset", w.offset}});
    j["witnesses"] = ws;
    auto series = composition_series_closed(cs, nu);
    j["chain"] = chain_str(series);
    j["length"] = series.chain.size() + 1;
    json layers = json::array();
    for (const auto& layer : constituents(series))
      layers.push_back(constituent_json(layer));
    j["constituents"] = layers;
  } else {
    j["note"] = "irreducible";
  }
  return j.dump(2);
}

} // namespace

struct rsp_case {
  CaseSpec spec;
};

namespace {
const CaseSpec& unwrap(const rsp_case_t* c) {
  if (!c) throw UsageError("null case handle");
  return c->spec;
}
} // namespace

extern "C" {

const char* rsp_version(void) { return "rspace 1.0.0"; }

const char* rsp_last_error(void) { return g_last_error.c_str(); }

rsp_status rsp_case_parse(const char* text, rsp_case_t** out) {
  if (!out) {
    g_last_error = "null output parameter";
    return RSP_ERR_USAGE;
  }
  *out = nullptr;
  try {
    if (!text) throw UsageError("null case text");
    auto spec = parse_case(text);
    *out = new rsp_case{std::move(spec)};
    return RSP_OK;
  } catch (const UsageError& e) {
    g_last_error = e.what();
    return RSP_ERR_USAGE;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return RSP_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSP_ERR_INTERNAL;
  }
}

void rsp_case_free(rsp_case_t* c) { delete c; }

rsp_status rsp_case_json(const rsp_case_t* c, char** out_json) {
  return guarded(out_json, [&] { return case_json(unwrap(c)).dump(2); });
}

rsp_status rsp_family_table_json(char** out_json) {
  return guarded(out_json, [&] {
    json rows = json::array();
    for (const auto& row : family_table())
      rows.push_back({{"name", row.name},
                      {"params", row.params},
                      {"n", row.n},
                      {"p", row.p},
                      {"r", row.r},
                      {"d", row.d},
                      {"e", row.e},
                      {"b", row.b}});
    return json{{"families", rows}}.dump(2);
  });
}

rsp_status rsp_coeffs_json(const rsp_case_t* c, const char* m_csv,
                           char** out_json) {
  return guarded(out_json, [&] {
    const CaseSpec& cs = unwrap(c);
    if (!m_csv) throw UsageError("null weight text");
    Weight m = parse_weight(m_csv, cs.r);
    json j;
    j["m"] = weight_json(m);
    j["casimir"] = rational_str(casimir_eigenvalue(cs, m));
    json a = json::array(), b = json::array(), up = json::array(),
         down = json::array(), x = json::array();
    for (int k = 1; k <= cs.r; ++k) {
      a.push_back(rational_str(coeff_A(cs, m, k)));
      b.push_back(rational_str(coeff_B(cs, m, k)));
      up.push_back(rational_str(shift_up(cs, m, k)));
      down.push_back(rational_str(shift_down(cs, m, k)));
      x.push_back(rational_str(two_m_plus_rho(cs, m, k)));
    }
    j["A"] = a;
    j["B"] = b;
    Rational cd = coeff_C_direct(cs, m);
    j["C"] = rational_str(cd);
    j["C_closed"] = rational_str(coeff_C_closed(cs, m));
    j["C_zero"] = (cd == 0);
    j["C_zero_locus"] = c_zero_locus(cs, m);
    j["shift_up"] = up;
    j["shift_down"] = down;
    j["x"] = x;
    return j.dump(2);
  });
}

rsp_status rsp_reduce_json(const rsp_case_t* c, const char* nu,
                           char** out_json) {
  return guarded(out_json, [&] {
    const CaseSpec& cs = unwrap(c);
    if (!nu) throw UsageError("null spectral parameter");
    return reduce_payload(cs, SpectralParam::parse(nu));
  });
}

rsp_status rsp_compose_json(const rsp_case_t* c, const char* nu_text, long box,
                            int verify_graph, char** out_json) {
  return guarded(out_json, [&] {
    const CaseSpec& cs = unwrap(c);
    if (!nu_text) throw UsageError("null spectral parameter");
    auto nu = SpectralParam::parse(nu_text);
    auto rep = reducibility(cs, nu);
    json j;
    j["nu"] = nu.str();
    j["reducible"] = rep.reducible;
    if (!rep.reducible) {
      j["note"] = "irreducible";
      if (verify_graph && nu.kind == SpectralParam::Kind::RealRational) {
        long M = effective_box(cs, nu, box);
        auto g = build_graph(cs, nu, M);
        int count = 0;
        strong_components(g, count);
        j["graph"] = {{"box", M},
                      {"vertices", g.nodes.size()},
                      {"components", count},
                      {"strongly_connected", count == 1}};
        j["agreement"] = (count == 1);
      }
      return j.dump(2);
    }
    auto series = composition_series_closed(cs, nu);
    j["side"] = series.side;
    j["chain"] = chain_str(series);
    j["length"] = series.chain.size() + 1;
    json members = json::array();
    for (const auto& member : series.chain)
      members.push_back(
          {{"critical_index", member.j}, {"bound", member.bound}});
    j["members"] = members;
    json layers = json::array();
    for (const auto& layer : constituents(series))
      layers.push_back(constituent_json(layer));
    j["constituents"] = layers;
    if (verify_graph) {
      long M = effective_box(cs, nu, box);
      auto g = build_graph(cs, nu, M);
      auto gs = composition_series_graph(g);
      auto closed = materialize_layers(series, g.nodes);
      bool agree = (gs.layers == closed);
      json sizes = json::array();
      for (const auto& layer : gs.layers) sizes.push_back(layer.size());
      j["graph"] = {{"box", M},
                    {"vertices", g.nodes.size()},
                    {"components", gs.layers.size()},
                    {"layer_sizes", sizes}};
      j["agreement"] = agree;
      if (!agree)
        throw DomainError("graph condensation disagrees with the closed-form "
                          "composition series");
    }
    return j.dump(2);
  });
}

rsp_status rsp_compose_dot(const rsp_case_t* c, const char* nu_text, long box,
                           char** out_dot) {
  return guarded(out_dot, [&] {
    const CaseSpec& cs = unwrap(c);
    if (!nu_text) throw UsageError("null spectral parameter");
    auto nu = SpectralParam::parse(nu_text);
    long M = effective_box(cs, nu, box);
    return graph_dot(build_graph(cs, nu, M));
  });
}

rsp_status rsp_unitary_json(const rsp_case_t* c, const char* nu_text, long box,
                            char** out_json) {
  return guarded(out_json, [&] {
    const CaseSpec& cs = unwrap(c);
    json j;
    if (!nu_text) {
      // Full classification of unitarizable constituents for the case.
      long M = (box >= 0) ? box : 6;
      json entries = json::array();
      for (const auto& e : unitary_constituent_table(cs))
        entries.push_back(classified_json(cs, e, M));
      j["classification"] = entries;
      j["box"] = M;
      return j.dump(2);
    }
    auto nu = SpectralParam::parse(nu_text);
    long M = effective_box(cs, nu, box);
    auto report = unitary_constituents(cs, nu, M);
    j["nu"] = nu.str();
    j["box"] = M;
    j["irreducible"] = report.irreducible;
    if (!report.note.empty()) j["note"] = report.note;
    if (report.full_space)
      j["full_space"] = obstruction_json(*report.full_space);
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
      json vj;
      vj["constituent"] = constituent_json(v.region);
      vj["unitary"] = v.unitary;
      if (v.classification)
        vj["classification"] = classified_json(cs, *v.classification, M);
      if (v.obstruction) vj["obstruction"] = obstruction_json(*v.obstruction);
      verdicts.push_back(vj);
    }
    if (!verdicts.empty()) j["constituents"] = verdicts;
    return j.dump(2);
  });
}

rsp_status rsp_gkdim_json(const rsp_case_t* c, const char* rep_text,
                          char** out_json) {
  return guarded(out_json, [&] {
    const CaseSpec& cs = unwrap(c);
    if (!rep_text) throw UsageError("null representation class");
    RepClass rep = parse_rep_class(rep_text);
    json j;
    j["rep"] = (rep == RepClass::UnitaryPrincipalSeries) ? "principal"
                                                         : "small";
    j["gk_dim"] = gk_dimension(cs, rep);
    if (rep == RepClass::SmallConstituent) {
      j["degree_count"] = degree_count(cs);
      j["root_system"] = ktype_root_data(cs).type;
    }
    j["min_orbit_dim"] = minimal_orbit_dim(cs);
    j["in_scope"] = verdict_in_scope(cs, rep);
    j["verdict"] = associated_variety_verdict(cs, rep);
    return j.dump(2);
  });
}

rsp_status rsp_verify_json(long trials, unsigned long long seed,
                           char** out_json) {
  return guarded(out_json, [&] {
    if (trials <= 0) throw UsageError("trials must be positive");
    std::mt19937_64 rng(seed);
    long checked = 0;
    json first_failure;
    for (int branch = 0; branch < 2 && first_failure.is_null(); ++branch) {
      for (long t = 0; t < trials; ++t) {
        int r = 1 + static_cast<int>(rng() % 5);
        auto inst = random_instance(rng, r, branch == 1);
        check_instance(inst);
        Rational lhs = d_bruteforce(inst), rhs = d_closed(inst);
        ++checked;
        if (lhs != rhs) {
          json xs = json::array();
          for (const auto& x : inst.x) xs.push_back(rational_str(x));
          first_failure = {{"r", inst.r},
                           {"x", xs},
                           {"alpha", rational_str(inst.alpha)},
                           {"beta", rational_str(inst.beta)},
                           {"gamma", rational_str(inst.gamma)},
                           {"bruteforce", rational_str(lhs)},
                           {"closed", rational_str(rhs)}};
          break;
        }
      }
    }
    // Lagrange interpolation sweep: nodes y_k = k + k/(k+1) are pairwise
    // distinct; the power sums vanish below degree N-1 and normalize at it.
    bool lagrange_ok = true;
    for (int N = 2; N <= 8 && lagrange_ok; ++N) {
      std::vector<Rational> y;
      for (int k = 1; k <= N; ++k)
        y.push_back(Rational(k) + frac(k, k + 1));
      for (long m = 0; m < N; ++m) {
        Rational want = (m == N - 1) ? 1 : 0;
        if (lagrange_sum(y, m) != want) {
          lagrange_ok = false;
          break;
        }
      }
    }
    // Specialization back to the coefficient normalization on every family.
    bool coeff_ok = true;
    for (const auto& cs : representative_cases()) {
      for (const auto& m : enumerate_box(cs, 3)) {
        Rational xr = two_m_plus_rho(cs, m, cs.r);
        if (xr <= frac(1, 2) || xr == 1) continue;
        if (!coeff_consistency(cs, m)) {
          coeff_ok = false;
          break;
        }
      }
      if (!coeff_ok) break;
    }
    json j;
    j["trials_per_branch"] = trials;
    j["seed"] = seed;
    j["instances_checked"] = checked;
    j["identity_ok"] = first_failure.is_null();
    if (!first_failure.is_null()) j["first_failure"] = first_failure;
    j["lagrange_ok"] = lagrange_ok;
    j["coeff_consistency_ok"] = coeff_ok;
    j["ok"] = first_failure.is_null() && lagrange_ok && coeff_ok;
    return j.dump(2);
  });
}

void rsp_string_free(char* s) { std::free(s); }

} // extern "C"
