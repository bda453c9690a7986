#include <algorithm>

#include "hyper3/algebra/linsolve.hpp"
#include "hyper3/equiv/equiv.hpp"

namespace hyper3 {

Invariants seed_invariants(const SeedFamily& s) { return invariants(seed(s)); }

namespace {

using Loc = std::optional<Rat>;  // nullopt is infinity

Loc location(const SingularPoint& p) {
  if (p.where == SingularPoint::Where::Unresolved) {
    throw UnresolvedSingularity("singular point at a root of " + to_string(p.factor));
  }
  if (p.where == SingularPoint::Where::Infinity) return std::nullopt;
  return p.point;
}

std::string loc_name(const Loc& l) { return l ? to_string(*l) : std::string("infinity"); }

// M0 with M0(p0) = 0, M0(p1) = 1, M0(pinf) = infinity.
Moebius three_point_map(const Loc& p0, const Loc& p1, const Loc& pinf) {
  if (!pinf) return {Rat(1), -*p0, Rat(0), *p1 - *p0};
  if (!p0) return {Rat(0), *p1 - *pinf, Rat(1), -*pinf};
  if (!p1) return {Rat(1), -*p0, Rat(1), -*pinf};
  const Rat u = *p1 - *pinf;
  const Rat v = *p1 - *p0;
  return {u, -*p0 * u, v, -*pinf * v};
}

// M0 with M0(r) = 0 and M0(i) = infinity, unit scale.
Moebius two_point_map(const Loc& r, const Loc& i) {
  if (!i) return {Rat(1), -*r, Rat(0), Rat(1)};
  if (!r) return {Rat(0), Rat(1), Rat(1), -*i};
  return {Rat(1), -*r, Rat(1), -*i};
}

bool same_multiset(std::vector<AlgNum> a, std::vector<AlgNum> b) {
  std::sort(a.begin(), a.end(), AlgNum::canonical_less);
  std::sort(b.begin(), b.end(), AlgNum::canonical_less);
  return a == b;
}

// Lower pairs (b1, b2) read off the exponent differences, one per base exponent.
std::vector<std::pair<AlgNum, AlgNum>> lower_candidates(const std::vector<AlgNum>& roots) {
  std::vector<std::pair<AlgNum, AlgNum>> out;
  for (std::size_t base = 0; base < roots.size(); ++base) {
    std::vector<AlgNum> b;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (k != base) b.push_back(AlgNum(1) - (roots[k] - roots[base]));
    }
    const AlgNum sum = b[0] + b[1];
    const AlgNum prod = b[0] * b[1];
    if (!sum.is_rational() || !prod.is_rational()) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& c) {
      return same_multiset({c.first, c.second}, {b[0], b[1]});
    });
    if (!dup) out.emplace_back(b[0], b[1]);
  }
  return out;
}

Invariants scaled(const Invariants& inv, const Rat& lambda) {
  if (lambda == 1) return inv;
  return transform_invariants(inv, RatFn(Poly::monomial(lambda, 1)));
}

// Solves for the upper symmetric functions that enter the seed invariants
// affinely. `unknown` lists the indices (0: e1, 1: e2, 2: e3) to solve for.
std::optional<SeedSymmetric> solve_affine(SeedSymmetric base, const std::vector<int>& unknown, const Rat& lambda,
                                          const Invariants& target) {
  auto set = [](SeedSymmetric& s, int idx, const Rat& v) {
    (idx == 0 ? s.e1 : idx == 1 ? s.e2 : s.e3) = v;
  };
  for (int idx : unknown) set(base, idx, Rat(0));
  const Invariants b = scaled(invariants(seed_from_symmetric(base)), lambda);
  std::vector<Invariants> dirs;
  for (int idx : unknown) {
    SeedSymmetric s = base;
    set(s, idx, Rat(1));
    const Invariants v = scaled(invariants(seed_from_symmetric(s)), lambda);
    dirs.push_back({v.I1 - b.I1, v.I0 - b.I0});
  }
  RatMatrix a;
  std::vector<Rat> rhs;
  auto usable = [&](const Rat& t) {
    if (target.I1.has_pole(t) || target.I0.has_pole(t) || b.I1.has_pole(t) || b.I0.has_pole(t)) return false;
    for (const auto& d : dirs) {
      if (d.I1.has_pole(t) || d.I0.has_pole(t)) return false;
    }
    return true;
  };
  int used = 0;
  for (long n = 1; used < 6 && n < 64; ++n) {
    const Rat t = make_rat(n % 2 ? n : -n, 3);
    if (!usable(t)) continue;
    ++used;
    std::vector<Rat> row1, row0;
    for (const auto& d : dirs) {
      row1.push_back(d.I1.eval(t));
      row0.push_back(d.I0.eval(t));
    }
    a.push_back(row1);
    rhs.push_back(target.I1.eval(t) - b.I1.eval(t));
    a.push_back(row0);
    rhs.push_back(target.I0.eval(t) - b.I0.eval(t));
  }
  const LinearSolution sol = solve_linear(a, rhs);
  if (sol.kind == LinearSolution::Kind::Inconsistent) return std::nullopt;
  for (std::size_t i = 0; i < unknown.size(); ++i) set(base, unknown[i], sol.solution[i]);
  return base;
}

// Roots of z^n - e1 z^(n-1) + ... as parameters; nullopt when a root is
// irrational beyond quadratic.
std::optional<std::vector<AlgNum>> upper_from_symmetric(const SeedSymmetric& s) {
  const int n = upper_count(s.family);
  if (n == 0) return std::vector<AlgNum>{};
  if (n == 1) return std::vector<AlgNum>{AlgNum(s.e1)};
  auto pair_roots = [](const Rat& a, const Rat& b, const Rat& c) {
    auto r = quadratic_roots(a, b, c);
    if (r.size() == 1) r.push_back(r[0]);
    return r;
  };
  if (n == 2) return pair_roots(Rat(1), -s.e1, s.e2);
  const Poly cubic = Poly::from_coeffs({-s.e3, s.e2, -s.e1, Rat(1)});
  const auto rr = rational_roots(cubic);
  if (rr.empty()) return std::nullopt;
  const Rat r = rr.front();
  const Poly q = exact_div(cubic, Poly::from_coeffs({-r, Rat(1)}));
  std::vector<AlgNum> out{AlgNum(r)};
  const auto qr = pair_roots(q.coeff(2), q.coeff(1), q.coeff(0));
  out.insert(out.end(), qr.begin(), qr.end());
  return out;
}

void note(std::vector<std::string>* trace, const std::string& s) {
  if (trace) trace->push_back(s);
}

}  // namespace

std::vector<MoebiusCandidate> moebius_candidates(const SingularityProfile& profile, Family family) {
  std::vector<MoebiusCandidate> out;
  std::vector<Loc> regular, irregular;
  for (const auto& p : profile.points) (p.regular ? regular : irregular).push_back(location(p));
  if (family == Family::F32) {
    if (regular.size() != 3 || !irregular.empty()) return out;
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
      const Loc& a = regular[static_cast<std::size_t>(p[0])];
      const Loc& b = regular[static_cast<std::size_t>(p[1])];
      const Loc& c = regular[static_cast<std::size_t>(p[2])];
      out.push_back({three_point_map(a, b, c), false,
                     "(" + loc_name(a) + ", " + loc_name(b) + ", " + loc_name(c) + ") -> (0, 1, infinity)"});
    }
    return out;
  }
  if (regular.size() != 1 || irregular.size() != 1) return out;
  out.push_back({two_point_map(regular[0], irregular[0]), true,
                 "(" + loc_name(regular[0]) + ", " + loc_name(irregular[0]) + ") -> (0, infinity), scale lambda"});
  return out;
}

std::vector<AlgNum> indicial_roots(const Invariants& inv, const Rat& x0) {
  const Rat a = laurent_coeff(inv.I1, x0, -2);
  const Rat b = laurent_coeff(inv.I0, x0, -3);
  // rho^3 - 3 rho^2 + (2 - a) rho - b
  const Poly p = Poly::from_coeffs({-b, 2 - a, Rat(-3), Rat(1)});
  const auto rr = rational_roots(p);
  if (rr.empty()) throw IrrationalBeyondQuadratic("indicial equation has no rational root");
  std::vector<AlgNum> roots;
  Poly rest = p;
  for (const auto& r : rr) {
    while (rest.degree() > 0 && sgn(rest.eval(r)) == 0) {
      roots.emplace_back(r);
      rest = exact_div(rest, Poly::from_coeffs({-r, Rat(1)}));
    }
  }
  if (rest.degree() == 2) {
    for (const auto& q : quadratic_roots(rest.coeff(2), rest.coeff(1), rest.coeff(0))) roots.push_back(q);
  }
  std::sort(roots.begin(), roots.end(), AlgNum::canonical_less);
  return roots;
}

std::vector<ParameterMatch> match_parameters(const Invariants& inv, Family family, const MoebiusCandidate& cand,
                                             std::vector<std::string>* trace) {
  std::vector<ParameterMatch> out;
  const Invariants local = transform_invariants(inv, cand.m0.inverse().as_ratfn());

  std::vector<AlgNum> roots0;
  try {
    roots0 = indicial_roots(local, Rat(0));
  } catch (const IrrationalBeyondQuadratic& e) {
    note(trace, family_name(family) + " via " + cand.description + ": " + e.what());
    return out;
  }

  std::vector<Rat> lambdas;
  if (family == Family::F02) {
    lambdas.push_back(laurent_coeff_at_infinity(local.I0, 2));
  } else if (family == Family::F12) {
    lambdas.push_back(laurent_coeff_at_infinity(local.I1, 1));
  } else if (family == Family::F22) {
    Rat root;
    const Rat sq = 3 * laurent_coeff_at_infinity(local.I1, 0);
    if (!rational_sqrt(sq, root)) {
      note(trace, "2F2 via " + cand.description + ": scale is not rational (lambda^2 = " + to_string(sq) + ")");
      return out;
    }
    lambdas = {root, -root};
  } else {
    lambdas.push_back(Rat(1));
  }

  // 3F2: the exponent at 1 fixes e1.
  std::vector<Rat> s_values;
  if (family == Family::F32) {
    std::vector<AlgNum> roots1;
    try {
      roots1 = indicial_roots(local, Rat(1));
    } catch (const IrrationalBeyondQuadratic& e) {
      note(trace, "3F2 via " + cand.description + ": " + e.what());
      return out;
    }
    for (const auto& r : roots1) {
      if (!r.is_rational()) continue;
      const Rat rv = r.rational_part();
      for (const Rat& s : {Rat(2 - 3 * rv), Rat(5 - 3 * rv), Rat((3 * rv - 2) / 2)}) {
        const Rat sigma = (2 - s) / 3;
        if (!same_multiset(roots1, {AlgNum(sigma), AlgNum(sigma + 1), AlgNum(sigma + s)})) continue;
        if (std::find(s_values.begin(), s_values.end(), s) == s_values.end()) s_values.push_back(s);
      }
    }
    if (s_values.empty()) {
      note(trace, "3F2 via " + cand.description + ": exponents at 1 are not of the form {r, r+1, r+s}");
      return out;
    }
  }

  for (const auto& [b1, b2] : lower_candidates(roots0)) {
    SeedSymmetric base;
    base.family = family;
    base.lower_sum = (b1 + b2).rational_part();
    base.lower_prod = (b1 * b2).rational_part();
    for (const Rat& lambda : lambdas) {
      if (sgn(lambda) == 0) continue;
      std::vector<SeedSymmetric> syms;
      switch (family) {
        case Family::F02:
          syms.push_back(base);
          break;
        case Family::F12:
          if (auto s = solve_affine(base, {0}, lambda, local)) syms.push_back(*s);
          break;
        case Family::F22:
          if (auto s = solve_affine(base, {0, 1}, lambda, local)) syms.push_back(*s);
          break;
        case Family::F32:
          for (const Rat& s : s_values) {
            SeedSymmetric b = base;
            b.e1 = base.lower_sum - s;
            if (auto r = solve_affine(b, {1, 2}, lambda, local)) syms.push_back(*r);
          }
          break;
      }
      for (const auto& sym : syms) {
        if (scaled(invariants(seed_from_symmetric(sym)), lambda) != local) continue;
        const auto upper = upper_from_symmetric(sym);
        if (!upper) {
          note(trace, family_name(family) + " via " + cand.description +
                          ": upper parameters are roots of an irreducible cubic");
          continue;
        }
        ParameterMatch m;
        m.seed.family = family;
        m.seed.params = *upper;
        m.seed.params.push_back(b1);
        m.seed.params.push_back(b2);
        m.seed = canonical_params(m.seed);
        m.lambda = lambda;
        m.moebius = {cand.m0.a * lambda, cand.m0.b * lambda, cand.m0.c, cand.m0.d};
        note(trace, family_name(family) + " via " + cand.description + ": matched " + to_string(m.seed) +
                        ", lambda = " + to_string(lambda));
        out.push_back(m);
      }
    }
  }
  if (out.empty()) note(trace, family_name(family) + " via " + cand.description + ": no parameter assignment matches");
  return out;
}

}  // namespace hyper3
