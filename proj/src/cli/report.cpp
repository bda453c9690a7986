#include "hyper3/cli/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "hyper3/ode/invariants.hpp"

namespace hyper3 {

namespace {

using Json = nlohmann::ordered_json;

Json params_json(const std::vector<AlgNum>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(to_string(p));
  return a;
}

Json ode_json(const Ode3& ode) {
  return Json{{"c2", to_string(ode.c2)}, {"c1", to_string(ode.c1)}, {"c0", to_string(ode.c0)}};
}

Json invariants_pair(const Invariants& inv) { return Json{{"I1", to_string(inv.I1)}, {"I0", to_string(inv.I0)}}; }

std::string flag_kind(SlotFlag::Kind k) {
  switch (k) {
    case SlotFlag::Kind::None:
      return "none";
    case SlotFlag::Kind::Missing:
      return "missing";
    case SlotFlag::Kind::Duplicate:
      return "duplicate";
  }
  return "";
}

std::string moebius_string(const Moebius& m) { return to_string(m.as_ratfn()); }

Json chain_json(const TransformChain& c) {
  Json j;
  j["k"] = c.k;
  j["moebius"] = Json{{"a", to_string(c.moebius.a)},
                      {"b", to_string(c.moebius.b)},
                      {"c", to_string(c.moebius.c)},
                      {"d", to_string(c.moebius.d)},
                      {"map", moebius_string(c.moebius)}};
  j["rational"] = c.rational ? Json(to_string(*c.rational)) : Json(nullptr);
  j["map"] = to_string(c.map());
  j["gauge"] = to_string(c.gauge);
  j["gauge_factor"] = to_string(gauge_factor(c.gauge));
  return j;
}

Json report_json(const VerificationReport& r, double tolerance) {
  Json j;
  j["exact_ok"] = r.exact_ok;
  j["series_order"] = r.series_order;
  j["tolerance"] = tolerance;
  j["numeric_ok"] = numeric_ok(r, tolerance);
  Json entries = Json::array();
  for (const auto& e : r.numeric) {
    Json n;
    n["element"] = e.element;
    n["skipped"] = e.skipped;
    if (e.skipped) {
      n["reason"] = e.reason;
    } else {
      Json pts = Json::array();
      for (const auto& z : e.points) pts.push_back(Json::array({z.real(), z.imag()}));
      n["points"] = pts;
      n["max_relative_residual"] = e.max_relative_residual;
      n["pass"] = e.max_relative_residual < tolerance;
    }
    entries.push_back(n);
  }
  j["numeric"] = entries;
  return j;
}

}  // namespace

std::string solve_json(const Ode3& ode, const SolveOutcome& outcome, const ReportOptions& options) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["outcome"] = tag_name(outcome.tag);
  j["input"] = ode_json(ode);
  j["invariants"] = invariants_pair(outcome.invariants);
  if (outcome.solved) {
    const SolvedData& s = *outcome.solved;
    j["family"] = Json{{"name", family_name(s.family.family)},
                       {"upper", params_json(s.family.upper())},
                       {"lower", params_json(s.family.lower())}};
    j["branch"] = s.rational_branch ? "rational" : "power_moebius";
    j["chain"] = chain_json(s.chain);
    Json basis = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      Json e;
      e["index"] = i;
      e["expr"] = to_string(s.basis.elements[i]);
      e["meijerg"] = s.basis.meijerg[i];
      e["flag"] = flag_kind(s.basis.flags[i].kind);
      if (s.basis.flags[i].kind != SlotFlag::Kind::None) e["flag_reason"] = s.basis.flags[i].reason;
      if (s.basis.flags[i].kind == SlotFlag::Kind::Duplicate) e["duplicate_of"] = s.basis.flags[i].duplicate_of;
      basis.push_back(e);
    }
    j["basis"] = basis;
    j["verification"] = report_json(s.report, options.tolerance);
  } else {
    j["stage"] = outcome.stage;
    j["reason"] = outcome.reason;
  }
  if (options.trace) j["trace"] = outcome.trace;
  return j.dump(2) + "\n";
}

std::string solve_text(const Ode3& ode, const SolveOutcome& outcome, const ReportOptions& options) {
  std::ostringstream os;
  os << "equation: " << to_string(ode) << "\n";
  os << "outcome: " << tag_name(outcome.tag) << "\n";
  if (outcome.solved) {
    const SolvedData& s = *outcome.solved;
    os << "family: " << to_string(s.family) << "\n";
    os << "k: " << s.chain.k << "\n";
    os << "moebius: " << moebius_string(s.chain.moebius) << "\n";
    if (s.chain.rational) os << "rational map: " << to_string(*s.chain.rational) << "\n";
    os << "argument: " << to_string(s.chain.map()) << "\n";
    os << "gauge factor: " << to_string(gauge_factor(s.chain.gauge)) << "\n";
    for (std::size_t i = 0; i < 3; ++i) {
      os << "y" << i + 1 << " = " << to_string(s.basis.elements[i]);
      if (s.basis.flags[i].kind != SlotFlag::Kind::None) os << "  [" << s.basis.flags[i].reason << "]";
      os << "\n";
    }
    os << "exact certificate: " << (s.report.exact_ok ? "true" : "false") << "\n";
    for (const auto& e : s.report.numeric) {
      os << "residual y" << e.element + 1 << ": ";
      if (e.skipped) {
        os << "skipped: " << e.reason << "\n";
      } else {
        os << e.max_relative_residual << (e.max_relative_residual < options.tolerance ? " ok" : " FAIL") << "\n";
      }
    }
  } else {
    os << "stage: " << outcome.stage << "\n";
    os << "reason: " << outcome.reason << "\n";
  }
  if (options.trace) {
    for (const auto& t : outcome.trace) os << "trace: " << t << "\n";
  }
  return os.str();
}

namespace {

struct InvariantData {
  Invariants inv;
  JInv j;
  LProfile l;
  SingularityProfile profile;
  int k = 0;
};

InvariantData invariant_data(const Ode3& ode) {
  InvariantData d;
  d.inv = invariants(ode);
  d.j = j_invariants(d.inv);
  d.l = l_profile(d.inv);
  d.profile = singularity_profile(d.inv);
  if (const auto pm = power_minimize(d.j)) d.k = pm->k;
  return d;
}

std::string status_name(LStatus s) {
  switch (s) {
    case LStatus::Ok:
      return "ok";
    case LStatus::DegenerateR:
      return "degenerate_r";
    case LStatus::DegenerateL:
      return "degenerate_l";
  }
  return "";
}

}  // namespace

std::string invariants_json(const Ode3& ode) {
  const InvariantData d = invariant_data(ode);
  Json j;
  j["schema"] = kSchemaVersion;
  j["input"] = ode_json(ode);
  j["invariants"] = invariants_pair(d.inv);
  j["J"] = Json{{"J1", to_string(d.j.J1)}, {"J2", to_string(d.j.J2)}};
  j["power_k"] = d.k;
  Json l;
  l["status"] = status_name(d.l.status);
  l["r"] = to_string(d.l.r);
  if (d.l.status == LStatus::Ok) {
    l["L1"] = to_string(d.l.L1);
    l["L2"] = to_string(d.l.L2);
  }
  j["L"] = l;
  Json pts = Json::array();
  for (const auto& p : d.profile.points) pts.push_back(to_string(p));
  j["singularities"] = Json{
      {"regular", d.profile.count_regular()}, {"irregular", d.profile.count_irregular()}, {"points", pts}};
  return j.dump(2) + "\n";
}

std::string invariants_text(const Ode3& ode) {
  const InvariantData d = invariant_data(ode);
  std::ostringstream os;
  os << "I1 = " << to_string(d.inv.I1) << "\n";
  os << "I0 = " << to_string(d.inv.I0) << "\n";
  os << "J1 = " << to_string(d.j.J1) << "\n";
  os << "J2 = " << to_string(d.j.J2) << "\n";
  os << "power k = " << d.k << "\n";
  os << "L status = " << status_name(d.l.status) << "\n";
  os << "r = " << to_string(d.l.r) << "\n";
  if (d.l.status == LStatus::Ok) {
    os << "L1 = " << to_string(d.l.L1) << "\n";
    os << "L2 = " << to_string(d.l.L2) << "\n";
  }
  for (const auto& p : d.profile.points) os << "singular point " << to_string(p) << "\n";
  return os.str();
}

}  // namespace hyper3
