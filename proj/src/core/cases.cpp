#include "cases.hpp"

#include "errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <cctype>

namespace rspace {

namespace {

void check_identities(const CaseSpec& c) {
  // Genus identity p = (e+1) + (r-1)d + b/2 and the derived n = r(p + b/2).
  const Rational genus = Rational(c.e + 1) + Rational((c.r - 1) * c.d) +
                         frac(c.b, 2);
  assert(genus == c.p);
  assert(Rational(c.n) == Rational(c.r) * (c.p + frac(c.b, 2)));
  (void)genus;
}

} // namespace

CaseSpec make_case(Family f, int r, int s) {
  CaseSpec c;
  c.family = f;
  switch (f) {
  case Family::SL_R:
  case Family::SL_C:
  case Family::SL_H: {
    if (!(s > r && r >= 1))
      throw DomainError("sl family requires s > r >= 1 (got r=" +
                        std::to_string(r) + ", s=" + std::to_string(s) + ")");
    c.r = r;
    c.s = s;
    // Multiplier 1/2/4 for the R/C/H block entries.
    const int f_dim = f == Family::SL_R ? 1 : (f == Family::SL_C ? 2 : 4);
    c.n = static_cast<long>(f_dim) * r * s;
    c.p = frac(f_dim * (r + s), 2);
    c.d = r == 1 ? 0 : f_dim;
    c.e = f_dim - 1;
    c.b = f_dim * (s - r);
    break;
  }
  case Family::E6_M26:
    if (r != 0 || s != 0)
      throw DomainError("e6(-26) takes no parameters");
    c.r = 1;
    c.n = 16;
    c.p = 12;
    c.d = 0;
    c.e = 7;
    c.b = 8;
    break;
  case Family::SO_SPLIT:
    if (!(r > 1))
      throw DomainError("so(r,split) requires r > 1 (got r=" +
                        std::to_string(r) + ")");
    c.r = r;
    c.n = static_cast<long>(r) * (2 * r + 1);
    c.p = 2 * r;
    c.d = 2;
    c.e = 0;
    c.b = 2;
    break;
  case Family::SO_C:
    if (!(r > 1))
      throw DomainError("so(r,C) requires r > 1 (got r=" + std::to_string(r) +
                        ")");
    c.r = r;
    c.n = 2L * r * (2 * r + 1);
    c.p = 4 * r;
    c.d = 4;
    c.e = 1;
    c.b = 4;
    break;
  case Family::E6_6:
    if (r != 0 || s != 0)
      throw DomainError("e6(6) takes no parameters");
    c.r = 2;
    c.n = 16;
    c.p = 6;
    c.d = 3;
    c.e = 0;
    c.b = 4;
    break;
  case Family::E6_C:
    if (r != 0 || s != 0)
      throw DomainError("e6(C) takes no parameters");
    c.r = 2;
    c.n = 32;
    c.p = 12;
    c.d = 6;
    c.e = 1;
    c.b = 8;
    break;
  }
  check_identities(c);
  return c;
}

std::string family_name(Family f) {
  switch (f) {
  case Family::SL_R: return "sl(R)";
  case Family::SL_C: return "sl(C)";
  case Family::SL_H: return "sl(H)";
  case Family::E6_M26: return "e6(-26)";
  case Family::SO_SPLIT: return "so(split)";
  case Family::SO_C: return "so(C)";
  case Family::E6_6: return "e6(6)";
  case Family::E6_C: return "e6(C)";
  }
  return "?";
}

std::string case_name(const CaseSpec& c) {
  switch (c.family) {
  case Family::SL_R:
    return "sl(r=" + std::to_string(c.r) + ",s=" + std::to_string(c.s) + ",R)";
  case Family::SL_C:
    return "sl(r=" + std::to_string(c.r) + ",s=" + std::to_string(c.s) + ",C)";
  case Family::SL_H:
    return "sl(r=" + std::to_string(c.r) + ",s=" + std::to_string(c.s) + ",H)";
  case Family::E6_M26: return "e6(-26)";
  case Family::SO_SPLIT: return "so(r=" + std::to_string(c.r) + ",split)";
  case Family::SO_C: return "so(r=" + std::to_string(c.r) + ",C)";
  case Family::E6_6: return "e6(6)";
  case Family::E6_C: return "e6(C)";
  }
  return "?";
}

namespace {

// Splits "key=value" pairs / bare tokens inside the parentheses.
std::vector<std::string> split_args(const std::string& inner) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : inner) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int_param(const std::string& tok, const std::string& key) {
  const std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0)
    return -1;
  const std::string val = tok.substr(prefix.size());
  if (val.empty())
    throw UsageError("empty value for parameter '" + key + "'");
  for (char ch : val)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw UsageError("non-numeric value for parameter '" + key + "'");
  return std::stoi(val);
}

} // namespace

CaseSpec parse_case(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      text += ch;
  const std::size_t open = text.find('(');
  if (text.empty() || open == std::string::npos || text.back() != ')')
    throw UsageError("malformed case '" + raw +
                     "' (expected name(arg,...), e.g. sl(r=1,s=2,R))");
  const std::string head = text.substr(0, open);
  const std::string inner = text.substr(open + 1, text.size() - open - 2);
  const std::vector<std::string> args = split_args(inner);

  if (head == "e6") {
    if (args.size() != 1)
      throw UsageError("e6 case takes exactly one token: 6, C or -26");
    if (args[0] == "6")
      return make_case(Family::E6_6);
    if (args[0] == "C")
      return make_case(Family::E6_C);
    if (args[0] == "-26")
      return make_case(Family::E6_M26);
    throw UsageError("unknown e6 form '" + args[0] + "' (expected 6, C or -26)");
  }

  int r = -1, s = -1;
  std::string tag;
  const auto all_digits = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) {
      return std::isdigit(static_cast<unsigned char>(ch));
    });
  };
  for (const auto& tok : args) {
    if (tok.empty())
      throw UsageError("empty argument in case '" + text + "'");
    if (int v = parse_int_param(tok, "r"); v >= 0) {
      r = v;
    } else if (int w = parse_int_param(tok, "s"); w >= 0) {
      s = w;
    } else if (all_digits(tok)) {
      // Bare integers fill r, then s, positionally: so(3,split), sl(2,5,R).
      if (r < 0)
        r = std::stoi(tok);
      else if (s < 0)
        s = std::stoi(tok);
      else
        throw UsageError("too many integer arguments in case '" + text + "'");
    } else {
      if (!tag.empty())
        throw UsageError("duplicate field tag in case '" + text + "'");
      tag = tok;
    }
  }

  if (head == "sl") {
    if (r < 0 || s < 0 || tag.empty())
      throw UsageError("sl case needs r=, s= and a field tag R|C|H");
    if (tag == "R")
      return make_case(Family::SL_R, r, s);
    if (tag == "C")
      return make_case(Family::SL_C, r, s);
    if (tag == "H")
      return make_case(Family::SL_H, r, s);
    throw UsageError("unknown sl field '" + tag + "' (expected R, C or H)");
  }
  if (head == "so") {
    if (r < 0 || tag.empty() || s >= 0)
      throw UsageError("so case needs r= and a form tag split|C");
    if (tag == "split")
      return make_case(Family::SO_SPLIT, r);
    if (tag == "C")
      return make_case(Family::SO_C, r);
    throw UsageError("unknown so form '" + tag + "' (expected split or C)");
  }
  throw UsageError("unknown case family '" + head + "'");
}

Rational rho(const CaseSpec& c, int k) {
  if (k < 1 || k > c.r)
    throw DomainError("rho index k=" + std::to_string(k) +
                      " outside [1, r=" + std::to_string(c.r) + "]");
  // (r-k)d/2 + e/2 + b/4; equals (p-1)/2 - (k-1)d/2.
  const Rational value = frac((c.r - k) * c.d, 2) + frac(c.e, 2) +
                         frac(c.b, 4);
  assert(value == (c.p - 1) / 2 - frac((k - 1) * c.d, 2));
  return value;
}

nlohmann::json case_json(const CaseSpec& c) {
  nlohmann::json params = nlohmann::json::object();
  if (c.family == Family::SL_R || c.family == Family::SL_C ||
      c.family == Family::SL_H) {
    params["r"] = c.r;
    params["s"] = c.s;
  } else if (c.family == Family::SO_SPLIT || c.family == Family::SO_C) {
    params["r"] = c.r;
  }
  return nlohmann::json{{"family", family_name(c.family)},
                        {"params", params},
                        {"name", case_name(c)},
                        {"n", c.n},
                        {"p", rational_str(c.p)},
                        {"r", c.r},
                        {"d", c.d},
                        {"e", c.e},
                        {"b", c.b}};
}

CaseSpec case_from_json(const nlohmann::json& j) {
  return parse_case(j.at("name").get<std::string>());
}

std::vector<FamilyRow> family_table() {
  return {
      {"sl(r,s,R)", "s > r >= 1", "r*s", "(r+s)/2", "r", "1 (0 if r=1)", "0",
       "s-r"},
      {"sl(r,s,C)", "s > r >= 1", "2*r*s", "r+s", "r", "2 (0 if r=1)", "1",
       "2(s-r)"},
      {"sl(r,s,H)", "s > r >= 1", "4*r*s", "2(r+s)", "r", "4 (0 if r=1)", "3",
       "4(s-r)"},
      {"e6(-26)", "-", "16", "12", "1", "0", "7", "8"},
      {"so(r,split)", "r > 1", "r(2r+1)", "2r", "r", "2", "0", "2"},
      {"so(r,C)", "r > 1", "2r(2r+1)", "4r", "r", "4", "1", "4"},
      {"e6(6)", "-", "16", "6", "2", "3", "0", "4"},
      {"e6(C)", "-", "32", "12", "2", "6", "1", "8"},
  };
}

std::vector<CaseSpec> representative_cases() {
  return {
      make_case(Family::SL_R, 1, 2), make_case(Family::SL_R, 2, 5),
      make_case(Family::SL_C, 1, 2), make_case(Family::SL_C, 2, 5),
      make_case(Family::SL_H, 1, 2), make_case(Family::SL_H, 2, 5),
      make_case(Family::E6_M26),     make_case(Family::SO_SPLIT, 2),
      make_case(Family::SO_C, 2),    make_case(Family::E6_6),
      make_case(Family::E6_C),
  };
}

} // namespace rspace
