#include "hyper3/cli/solve.hpp"

#include <algorithm>

#include "hyper3/ode/invariants.hpp"
#include "hyper3/ratmin/ratmin.hpp"

namespace hyper3 {

namespace {

struct Candidate {
  SeedFamily family;
  TransformChain chain;
  // Sort key: nonzero gauge, degenerate slots, sum of |log residues|, order.
  bool gauge_nonzero = false;
  int degenerate = 0;
  Rat residue_weight{0};
  std::size_t order = 0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.gauge_nonzero != b.gauge_nonzero) return !a.gauge_nonzero;
  if (a.degenerate != b.degenerate) return a.degenerate < b.degenerate;
  if (a.residue_weight != b.residue_weight) return a.residue_weight < b.residue_weight;
  return a.order < b.order;
}

Candidate make_candidate(const Ode3& ode, const EquivPM& m, const std::optional<RatFn>& rational, std::size_t order) {
  Candidate c;
  c.family = m.family;
  c.chain.k = m.k;
  c.chain.moebius = m.moebius;
  c.chain.rational = rational;
  const Ode3 pulled = substitute_ode(seed(m.family), c.chain.map());
  c.chain.gauge = gauge_between(pulled.c2, ode.c2);
  c.gauge_nonzero = !c.chain.gauge.is_zero();
  for (const auto& f : detect_special(m.family)) c.degenerate += f.kind != SlotFlag::Kind::None;
  if (c.gauge_nonzero) {
    const IntegralForm f = integrate_rational(c.chain.gauge);
    for (const auto& t : f.log_terms) {
      c.residue_weight += abs(t.residue.rational_part()) + abs(t.residue.surd_coeff());
    }
  }
  c.order = order;
  return c;
}

}  // namespace

std::string tag_name(SolveOutcome::Tag t) {
  switch (t) {
    case SolveOutcome::Tag::Solved:
      return "Solved";
    case SolveOutcome::Tag::NotEquivalent:
      return "NotEquivalent";
    case SolveOutcome::Tag::Unsupported:
      return "Unsupported";
  }
  return "";
}

bool numeric_ok(const VerificationReport& r, double tolerance) {
  return std::all_of(r.numeric.begin(), r.numeric.end(),
                     [&](const NumericEntry& e) { return e.skipped || e.max_relative_residual < tolerance; });
}

SolveOutcome solve(const Ode3& ode, const SolveOptions& options) {
  SolveOutcome out;
  const NormalForm nf = to_normal_form(ode);
  out.invariants = nf.inv;
  auto log = [&](const std::string& s) { out.trace.push_back(s); };
  log("normal form: I1 = " + to_string(nf.inv.I1) + ", I0 = " + to_string(nf.inv.I0));
  if (nf.inv.I1.is_constant() && nf.inv.I0.is_constant()) {
    out.tag = SolveOutcome::Tag::Unsupported;
    out.stage = "normal_form";
    out.reason = "constant invariants: the solutions are exponentials, outside the supported classes";
    return out;
  }

  EquivResult direct = equiv_power_moebius(nf.inv);
  for (const auto& t : direct.trace) log("equiv: " + t);
  std::vector<EquivPM> matches = direct.matches;
  std::optional<RatFn> rational;
  if (matches.empty()) {
    if (direct.both_constant) {
      out.tag = SolveOutcome::Tag::Unsupported;
      out.stage = direct.failed_stage;
      out.reason = "constant shifted invariants (Euler-type equation); outside the supported seed classes";
      return out;
    }
    log("equiv: no power/Moebius match (" + direct.failed_stage + ": " + direct.reason + ")");
    const LProfile lp = l_profile(nf.inv);
    if (lp.status != LStatus::Ok) {
      out.stage = direct.failed_stage;
      out.reason = direct.reason + "; absolute invariants are degenerate, no rational branch";
      return out;
    }
    std::vector<std::string> mtrace;
    const auto mini = minimize_invariants(lp.L1, lp.L2, &mtrace);
    for (const auto& t : mtrace) log("ratmin: " + t);
    if (!mini) {
      out.stage = direct.failed_stage;
      out.reason = direct.reason + "; the absolute invariants admit no proper decomposition";
      return out;
    }
    log("ratmin: F = " + to_string(mini->F));
    const auto canon = invert_l(mini->L1, mini->L2);
    if (!canon) {
      out.stage = "rational";
      out.reason = "minimized absolute invariants do not determine an equation";
      return out;
    }
    EquivResult second = equiv_power_moebius(*canon);
    for (const auto& t : second.trace) log("equiv(canonical): " + t);
    if (second.matches.empty()) {
      out.stage = second.failed_stage.empty() ? "rational" : second.failed_stage;
      out.reason = "canonical equation: " + second.reason;
      return out;
    }
    matches = second.matches;
    rational = mini->F;
  }

  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < matches.size(); ++i) cands.push_back(make_candidate(ode, matches[i], rational, i));
  const Candidate best = *std::min_element(cands.begin(), cands.end(), better);
  log("selected " + to_string(best.family) + " among " + std::to_string(cands.size()) + " equivalent chain(s)");

  SolvedData s;
  s.family = best.family;
  s.chain = best.chain;
  s.rational_branch = rational.has_value();
  s.basis = apply_chain(seed_basis(best.family), best.chain);
  s.report = verify_solution(ode, best.family, best.chain, s.basis, options.verify);
  if (!s.report.exact_ok) {
    out.stage = "verify";
    out.reason = "exact certificate failed";
    return out;
  }
  out.tag = SolveOutcome::Tag::Solved;
  out.solved = std::move(s);
  return out;
}

}  // namespace hyper3
