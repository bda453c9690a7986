#include "hyper3/ratmin/ratmin.hpp"

#include <algorithm>


namespace hyper3 {

namespace {

constexpr int kMaxSampleAttempts = 32;
constexpr int kSamplesWanted = 6;

// 1, -1, 2, -2, 3, ...
Rat sample_value(int i) { return Rat(i % 2 == 0 ? i / 2 + 1 : -(i / 2 + 1)); }

void note(std::vector<std::string>* trace, const std::string& s) {
  if (trace) trace->push_back(s);
}

// Coefficients a_0..a_m with n = sum a_j p^j q^(m-j), peeled off one power
// of p at a time; p must be non-constant.
std::optional<std::vector<Rat>> expand_in_powers(Poly n, const Poly& p, const Poly& q, int m) {
  std::vector<Rat> out;
  for (int k = 0; k <= m; ++k) {
    Poly qk(Rat(1));
    for (int i = k; i < m; ++i) qk *= q;
    const Poly rem = divmod(n, p).second;
    const Poly qrem = divmod(qk, p).second;
    if (qrem.is_zero()) return std::nullopt;
    const Rat c = rem.is_zero() ? Rat(0) : Rat(rem.leading() / qrem.leading());
    if (!(rem == c * qrem)) return std::nullopt;
    out.push_back(c);
    auto [quo, r] = divmod(n - c * qk, p);
    if (!r.is_zero()) return std::nullopt;
    n = quo;
  }
  if (!n.is_zero()) return std::nullopt;
  return out;
}

}  // namespace

Poly BivarQ::specialize(const Rat& t0) const {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& p : coeffs) c.push_back(p.eval(t0));
  return Poly::from_coeffs(c);
}

BivarQ build_q(const RatFn& L) {
  const Poly& n = L.num();
  const Poly& d = L.den();
  const int deg = std::max(n.degree(), d.degree());
  BivarQ q;
  for (int i = 0; i <= deg; ++i) {
    // x^i coefficient: n_i D(t) - d_i N(t)
    q.coeffs.push_back(n.coeff(i) * d - d.coeff(i) * n);
  }
  return q;
}

Poly sample_p(const BivarQ& q1, const BivarQ& q2, const Rat& t0) {
  const Poly a = q1.specialize(t0);
  const Poly b = q2.specialize(t0);
  if (a.is_zero() || b.is_zero()) throw BadSample("specialization vanishes at t = " + to_string(t0));
  const Poly g = poly_gcd(a, b);
  if (g.degree() < 1) throw BadSample("constant gcd at t = " + to_string(t0));
  return g.monic();
}

RatFn candidate_f(const Poly& p0, const Poly& p1) { return RatFn(p0, p1); }

RatFn decompose_through(const RatFn& L, const RatFn& F) {
  const int dl = L.degree();
  const int df = F.degree();
  if (df < 1 || dl % df != 0) throw NoDecomposition("degree of F does not divide degree of L");
  const int m = dl / df;
  // With F = p/q and L~ = A/B in lowest terms, num(L) and den(L) are the same
  // constant multiple of q^m A(p/q) and q^m B(p/q).
  const bool swap = F.num().is_constant();
  const Poly& p = swap ? F.den() : F.num();
  const Poly& q = swap ? F.num() : F.den();
  auto expand = [&](const Poly& n) {
    auto c = expand_in_powers(n, p, q, m);
    if (!c) throw NoDecomposition("L does not factor through F");
    if (swap) std::reverse(c->begin(), c->end());
    return Poly::from_coeffs(*c);
  };
  const RatFn out(expand(L.num()), expand(L.den()));
  if (out.compose(F) != L) throw NoDecomposition("L does not factor through F");
  return out;
}

bool validate_f(const RatFn& F, const RatFn& L1, const RatFn& L2) {
  if (F.is_constant()) return false;
  if (L1.degree() % F.degree() != 0 || L2.degree() % F.degree() != 0) return false;
  try {
    decompose_through(L1, F);
    decompose_through(L2, F);
  } catch (const NoDecomposition&) {
    return false;
  }
  return true;
}

namespace {

std::optional<MinimizationResult> minimize_with_degree(const RatFn& L1, const RatFn& L2,
                                                       const std::vector<std::pair<Rat, Poly>>& samples, int degree,
                                                       std::vector<std::string>* trace) {
  // Lexicographically first coprime pair of generic samples that validates.
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].second.degree() != degree) continue;
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[j].second.degree() != degree) continue;
      const RatFn F = candidate_f(samples[i].second, samples[j].second);
      if (F.degree() != degree || !validate_f(F, L1, L2)) {
        note(trace, "candidate from t = " + to_string(samples[i].first) + ", " + to_string(samples[j].first) +
                        " rejected");
        continue;
      }
      note(trace, "F = " + to_string(F) + " from t = " + to_string(samples[i].first) + ", " +
                      to_string(samples[j].first));
      MinimizationResult res;
      res.F = F;
      res.L1 = decompose_through(L1, F);
      res.L2 = decompose_through(L2, F);
      res.samples_used = {samples[i].first, samples[j].first};
      // Recurse until no further decomposition exists.
      if (auto inner = minimize_invariants(res.L1, res.L2, trace)) {
        res.F = inner->F.compose(F);
        res.L1 = inner->L1;
        res.L2 = inner->L2;
        res.samples_used.insert(res.samples_used.end(), inner->samples_used.begin(), inner->samples_used.end());
      }
      return res;
    }
  }
  note(trace, "no valid candidate F of degree " + std::to_string(degree));
  return std::nullopt;
}

}  // namespace

std::optional<MinimizationResult> minimize_invariants(const RatFn& L1, const RatFn& L2,
                                                      std::vector<std::string>* trace) {
  const BivarQ q1 = build_q(L1);
  const BivarQ q2 = build_q(L2);
  std::vector<std::pair<Rat, Poly>> samples;
  for (int i = 0; i < kMaxSampleAttempts && static_cast<int>(samples.size()) < kSamplesWanted; ++i) {
    const Rat t = sample_value(i);
    if (L1.has_pole(t) || L2.has_pole(t)) {
      note(trace, "sample t = " + to_string(t) + ": pole, skipped");
      continue;
    }
    try {
      samples.emplace_back(t, sample_p(q1, q2, t));
      note(trace, "sample t = " + to_string(t) + ": gcd degree " + std::to_string(samples.back().second.degree()));
    } catch (const BadSample& e) {
      note(trace, std::string("sample rejected: ") + e.what());
    }
  }
  if (samples.size() < 2) {
    note(trace, "too few valid samples");
    return std::nullopt;
  }
  // Special samples can lose degree (leading coefficient vanishing) or gain
  // spurious common factors, so degrees are tried by frequency.
  std::vector<std::pair<int, int>> by_count;  // (count, degree)
  for (const auto& s : samples) {
    const int d = s.second.degree();
    auto it = std::find_if(by_count.begin(), by_count.end(), [&](const auto& e) { return e.second == d; });
    if (it == by_count.end()) {
      by_count.emplace_back(1, d);
    } else {
      ++it->first;
    }
  }
  std::sort(by_count.begin(), by_count.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  if (by_count.front().second < 2) {
    note(trace, "already minimal: generic gcd has degree " + std::to_string(by_count.front().second));
    return std::nullopt;
  }
  for (const auto& [count, degree] : by_count) {
    if (degree < 2 || count < 2) continue;
    if (auto res = minimize_with_degree(L1, L2, samples, degree, trace)) return res;
  }
  note(trace, "no valid candidate F");
  return std::nullopt;
}

}  // namespace hyper3
