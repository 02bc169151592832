/* Apache License, Version 2.0 */

#include "enriques/record.hpp"

#include <json.hpp>

#include "enriques/divexpr.hpp"

namespace enriques {

using json = nlohmann::ordered_json;

ComponentRecord classify_record(const FundamentalCoefficients &fc)
{
  ComponentRecord r;
  r.coefficients = fc;
  r.violations = validate(fc);
  r.two_divisible = is_two_divisible(fc);
  if (!r.violations.empty()) {
    r.note = "invalid coefficients";
    return r;
  }
  r.genus = genus(fc);
  if (r.two_divisible || fc.eps != 0) {
    r.note = "2-divisible component, outside the theorem";
    return r;
  }
  const TrichotomyCase tc = trichotomy(fc);
  r.trichotomy = tc.name();
  if (tc.tag == Trichotomy::CaseI) {
    r.witness = std::array<int, 4>{tc.i, tc.klm[0], tc.klm[1], tc.klm[2]};
  }
  return r;
}

ComponentRecord plan_record(const FundamentalCoefficients &fc)
{
  ComponentRecord r = classify_record(fc);
  if (!r.trichotomy) {
    return r;
  }
  const LimitPlan plan = dispatch(fc);
  r.case_id = case_name(plan.case_id);
  r.checklist = plan.checklist;
  LimitBundle bundle;
  bundle.r_model = plan.Lp.model().name();
  bundle.p_model = plan.Lpp.model().name();
  bundle.r_class = format_divisor(plan.Lp);
  bundle.p_class = format_divisor(plan.Lpp);
  bundle.iso_expr = format_iso(plan.L_iso);
  bundle.r_labels = plan.r_labels;
  bundle.p_labels = plan.p_labels;
  r.limit_bundle = bundle;
  r.m = plan.m;
  r.s = plan.s;
  r.t = plan.t;
  r.k = plan.k;
  r.verified = plan.verified();

  PlanDetail detail;
  if (plan.Lp0) {
    detail.lp0 = format_divisor(*plan.Lp0);
  }
  if (plan.Lpp0) {
    detail.lpp0 = format_divisor(*plan.Lpp0);
  }
  for (const DivClass &c : plan.C_list) {
    detail.c_list.push_back(format_divisor(c));
  }
  for (const DivClass &d : plan.D_list) {
    detail.d_list.push_back(format_divisor(d));
  }
  for (const DivClass &d : plan.extra_D) {
    detail.extra_d.push_back(format_divisor(d));
  }
  for (const auto &[slot, index] : plan.renamed) {
    detail.renamed.emplace_back("c" + std::to_string(slot), "a" + std::to_string(index));
  }
  detail.ledger = plan.ledger;
  r.plan = detail;
  return r;
}

namespace {

template<typename T> json opt(const std::optional<T> &v)
{
  return v ? json(*v) : json(nullptr);
}

template<typename T> std::optional<T> get_opt(const json &j, const char *key)
{
  if (!j.contains(key) || j.at(key).is_null()) {
    return std::nullopt;
  }
  return j.at(key).get<T>();
}

json ledger_json(const Ledger &l)
{
  return json{{"C0_sq", l.C0_sq},
              {"D0_sq", l.D0_sq},
              {"m", l.m},
              {"k", l.k},
              {"l", l.l},
              {"gamma", l.gamma},
              {"delta", l.delta},
              {"gamma0", l.gamma0},
              {"delta0", l.delta0},
              {"pa_Y", l.pa_Y},
              {"dim_linear_system", l.dim_linear_system},
              {"node_budget", l.node_budget},
              {"parity_ok", l.parity_ok}};
}

Ledger ledger_from(const json &j)
{
  Ledger l;
  l.C0_sq = j.at("C0_sq").get<std::int64_t>();
  l.D0_sq = j.at("D0_sq").get<std::int64_t>();
  l.m = j.at("m").get<std::int64_t>();
  l.k = j.at("k").get<std::int64_t>();
  l.l = j.at("l").get<std::int64_t>();
  l.gamma = j.at("gamma").get<std::int64_t>();
  l.delta = j.at("delta").get<std::int64_t>();
  l.gamma0 = j.at("gamma0").get<std::int64_t>();
  l.delta0 = j.at("delta0").get<std::int64_t>();
  l.pa_Y = j.at("pa_Y").get<std::int64_t>();
  l.dim_linear_system = j.at("dim_linear_system").get<std::int64_t>();
  l.node_budget = j.at("node_budget").get<std::int64_t>();
  l.parity_ok = j.at("parity_ok").get<bool>();
  return l;
}

}  // namespace

std::string to_json(const ComponentRecord &r)
{
  json j;
  j["genus"] = r.genus;
  const auto flat = r.coefficients.flat();
  j["coefficients"] = std::vector<std::int64_t>(flat.begin(), flat.end());
  j["two_divisible"] = r.two_divisible;
  j["violations"] = r.violations;
  j["trichotomy"] = opt(r.trichotomy);
  j["witness"] = r.witness ? json(std::vector<int>(r.witness->begin(), r.witness->end())) : json(nullptr);
  j["case_id"] = opt(r.case_id);
  json checks = json::array();
  for (const CheckItem &c : r.checklist) {
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checklist"] = checks;
  if (r.limit_bundle) {
    const LimitBundle &b = *r.limit_bundle;
    j["limit_bundle"] = json{{"r_class", b.r_class},
                             {"p_class", b.p_class},
                             {"iso_expr", b.iso_expr},
                             {"r_model", b.r_model},
                             {"p_model", b.p_model},
                             {"r_labels", b.r_labels},
                             {"p_labels", b.p_labels}};
  }
  else {
    j["limit_bundle"] = nullptr;
  }
  j["m"] = opt(r.m);
  j["s"] = opt(r.s);
  j["t"] = opt(r.t);
  j["k"] = opt(r.k);
  j["verified"] = opt(r.verified);
  if (r.plan) {
    const PlanDetail &p = *r.plan;
    json renamed = json::array();
    for (const auto &[slot, source] : p.renamed) {
      renamed.push_back(json::array({slot, source}));
    }
    j["plan"] = json{{"lp0", p.lp0},
                     {"lpp0", p.lpp0},
                     {"c_list", p.c_list},
                     {"d_list", p.d_list},
                     {"extra_d", p.extra_d},
                     {"renamed", renamed},
                     {"ledger", p.ledger ? ledger_json(*p.ledger) : json(nullptr)}};
  }
  else {
    j["plan"] = nullptr;
  }
  j["note"] = opt(r.note);
  return j.dump();
}

ComponentRecord record_from_json(const std::string &text)
{
  json j;
  try {
    j = json::parse(text);
  }
  catch (const json::parse_error &e) {
    throw ParseError(e.byte, "malformed record JSON");
  }
  try {
    ComponentRecord r;
    r.genus = j.at("genus").get<std::int64_t>();
    const auto coeffs = j.at("coefficients").get<std::vector<std::int64_t>>();
    if (coeffs.size() != 11) {
      throw Error(ErrorCode::InvalidArgument, "record needs 11 coefficients");
    }
    std::array<std::int64_t, 11> flat{};
    std::copy(coeffs.begin(), coeffs.end(), flat.begin());
    r.coefficients = FundamentalCoefficients::from_flat(flat);
    r.two_divisible = j.at("two_divisible").get<bool>();
    r.violations = j.at("violations").get<std::vector<std::string>>();
    r.trichotomy = get_opt<std::string>(j, "trichotomy");
    if (auto w = get_opt<std::vector<int>>(j, "witness")) {
      if (w->size() != 4) {
        throw Error(ErrorCode::InvalidArgument, "witness needs 4 indices");
      }
      r.witness = std::array<int, 4>{(*w)[0], (*w)[1], (*w)[2], (*w)[3]};
    }
    r.case_id = get_opt<std::string>(j, "case_id");
    for (const json &c : j.at("checklist")) {
      r.checklist.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
    }
    if (!j.at("limit_bundle").is_null()) {
      const json &b = j.at("limit_bundle");
      r.limit_bundle = LimitBundle{b.at("r_model").get<std::string>(),
                                   b.at("p_model").get<std::string>(),
                                   b.at("r_class").get<std::string>(),
                                   b.at("p_class").get<std::string>(),
                                   b.at("iso_expr").get<std::string>(),
                                   b.at("r_labels").get<std::vector<int>>(),
                                   b.at("p_labels").get<std::vector<int>>()};
    }
    r.m = get_opt<std::int64_t>(j, "m");
    r.s = get_opt<int>(j, "s");
    r.t = get_opt<int>(j, "t");
    r.k = get_opt<int>(j, "k");
    r.verified = get_opt<bool>(j, "verified");
    if (!j.at("plan").is_null()) {
      const json &p = j.at("plan");
      PlanDetail d;
      d.lp0 = p.at("lp0").get<std::string>();
      d.lpp0 = p.at("lpp0").get<std::string>();
      d.c_list = p.at("c_list").get<std::vector<std::string>>();
      d.d_list = p.at("d_list").get<std::vector<std::string>>();
      d.extra_d = p.at("extra_d").get<std::vector<std::string>>();
      for (const json &pairj : p.at("renamed")) {
        d.renamed.emplace_back(pairj.at(0).get<std::string>(), pairj.at(1).get<std::string>());
      }
      if (!p.at("ledger").is_null()) {
        d.ledger = ledger_from(p.at("ledger"));
      }
      r.plan = d;
    }
    r.note = get_opt<std::string>(j, "note");
    return r;
  }
  catch (const json::exception &e) {
    throw Error(ErrorCode::InvalidArgument, std::string("record JSON: ") + e.what());
  }
}

std::string tsv_columns()
{
  return "genus\tcoefficients\ttwo_divisible\ttrichotomy\tcase_id\tverified\tm\ts\tt\tk\tfailed";
}

std::string to_tsv(const ComponentRecord &r)
{
  auto or_dash = [](const auto &v) -> std::string {
    if (!v) {
      return "-";
    }
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, std::string>) {
      return *v;
    }
    else if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, bool>) {
      return *v ? "true" : "false";
    }
    else {
      return std::to_string(*v);
    }
  };
  std::string failed;
  for (const CheckItem &c : r.checklist) {
    if (!c.pass) {
      failed += (failed.empty() ? "" : ",") + c.name;
    }
  }
  std::string out = std::to_string(r.genus);
  out += '\t' + format_coefficients(r.coefficients);
  out += '\t' + std::string(r.two_divisible ? "true" : "false");
  out += '\t' + or_dash(r.trichotomy);
  out += '\t' + or_dash(r.case_id);
  out += '\t' + or_dash(r.verified);
  out += '\t' + or_dash(r.m);
  out += '\t' + or_dash(r.s);
  out += '\t' + or_dash(r.t);
  out += '\t' + or_dash(r.k);
  out += '\t' + (failed.empty() ? std::string("-") : failed);
  return out;
}

}  // namespace enriques
