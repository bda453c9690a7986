#include "hyper3/solutions/expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyper3/ode/seeds.hpp"

namespace hyper3 {

namespace {

bool same_integral(const IntegralForm& a, const IntegralForm& b) {
  if (a.rational_part != b.rational_part || a.remainder != b.remainder) return false;
  if (a.log_terms.size() != b.log_terms.size()) return false;
  for (std::size_t i = 0; i < a.log_terms.size(); ++i) {
    if (a.log_terms[i].residue != b.log_terms[i].residue) return false;
    if (!(a.log_terms[i].argument == b.log_terms[i].argument)) return false;
  }
  return true;
}

Expr node(Expr::Kind k) {
  Expr e;
  e.kind = k;
  return e;
}

bool is_one(const Expr& e) { return e.kind == Expr::Kind::Constant && e.value == AlgNum(1); }

// Removes one-for-one matches between two lists.
void cancel_pairs(std::vector<AlgNum>& a, std::vector<AlgNum>& b) {
  for (std::size_t i = 0; i < a.size();) {
    auto it = std::find(b.begin(), b.end(), a[i]);
    if (it == b.end()) {
      ++i;
      continue;
    }
    b.erase(it);
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

std::string render_list(const std::vector<AlgNum>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + "]";
}

std::string render_number(const AlgNum& a) {
  const std::string s = to_string(a);
  const bool bare = a.is_integer() && sgn(a.rational_part()) >= 0;
  return bare ? s : "(" + s + ")";
}

std::string render_factor(const Expr& e) {
  const std::string s = to_string(e);
  switch (e.kind) {
    case Expr::Kind::Sum:
      return "(" + s + ")";
    case Expr::Kind::Rational:
      return e.fn.is_polynomial() && e.fn.num().terms().size() > 1 ? "(" + s + ")" : s;
    case Expr::Kind::Constant:
      return render_number(e.value);
    default:
      return s;
  }
}

std::string render_integral(const IntegralForm& f) {
  std::vector<std::string> parts;
  if (!f.rational_part.is_zero()) parts.push_back(to_string(f.rational_part));
  for (const auto& t : f.log_terms) parts.push_back(render_number(t.residue) + "*log(" + to_string(t.argument) + ")");
  if (f.remainder) parts.push_back("int(" + to_string(*f.remainder) + ", x)");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out.empty() ? "0" : out;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Constant:
      return a.value == b.value;
    case Expr::Kind::Variable:
      return true;
    case Expr::Kind::Rational:
      return a.fn == b.fn;
    case Expr::Kind::Power:
      return a.value == b.value && a.children == b.children;
    case Expr::Kind::Product:
    case Expr::Kind::Sum:
      return a.children == b.children;
    case Expr::Kind::ExpIntegral:
      return same_integral(a.integral, b.integral);
    case Expr::Kind::PFQ:
      return a.fn == b.fn && a.upper == b.upper && a.lower == b.lower;
    case Expr::Kind::MeijerG:
      return a.fn == b.fn && a.a_n == b.a_n && a.a_rest == b.a_rest && a.b_m == b.b_m && a.b_rest == b.b_rest;
  }
  return false;
}

Expr constant(const AlgNum& c) {
  Expr e = node(Expr::Kind::Constant);
  e.value = c;
  return e;
}

Expr variable() { return node(Expr::Kind::Variable); }

Expr rational(const RatFn& f) {
  if (f.is_constant()) return constant(f.constant_value());
  if (f == RatFn::x()) return variable();
  Expr e = node(Expr::Kind::Rational);
  e.fn = f;
  return e;
}

Expr power(const Expr& base, const AlgNum& exponent) {
  if (exponent == AlgNum(0)) return constant(1);
  if (exponent == AlgNum(1)) return base;
  if (is_one(base)) return base;
  Expr e = node(Expr::Kind::Power);
  e.value = exponent;
  e.children = {base};
  return e;
}

Expr product(const std::vector<Expr>& factors) {
  AlgNum c(1);
  std::vector<Expr> flat;
  for (const auto& f : factors) {
    const auto& list = f.kind == Expr::Kind::Product ? f.children : std::vector<Expr>{f};
    for (const auto& g : list) {
      if (g.kind == Expr::Kind::Constant) {
        c *= g.value;
      } else {
        flat.push_back(g);
      }
    }
  }
  if (c == AlgNum(0)) return constant(0);
  if (c != AlgNum(1)) flat.insert(flat.begin(), constant(c));
  if (flat.empty()) return constant(1);
  if (flat.size() == 1) return flat.front();
  Expr e = node(Expr::Kind::Product);
  e.children = std::move(flat);
  return e;
}

Expr sum(const std::vector<Expr>& terms) {
  std::vector<Expr> flat;
  for (const auto& t : terms) {
    const auto& list = t.kind == Expr::Kind::Sum ? t.children : std::vector<Expr>{t};
    for (const auto& g : list) {
      if (g.kind == Expr::Kind::Constant && g.value == AlgNum(0)) continue;
      flat.push_back(g);
    }
  }
  if (flat.empty()) return constant(0);
  if (flat.size() == 1) return flat.front();
  Expr e = node(Expr::Kind::Sum);
  e.children = std::move(flat);
  return e;
}

Expr exp_integral(const IntegralForm& f) {
  Expr e = node(Expr::Kind::ExpIntegral);
  e.integral = f;
  return e;
}

Expr pfq(std::vector<AlgNum> upper, std::vector<AlgNum> lower, const RatFn& argument) {
  for (const auto& b : lower) {
    if (b.is_nonpositive_integer()) {
      throw UndefinedSeries("lower parameter " + to_string(b) + " is a non-positive integer");
    }
  }
  canonical_sort(upper);
  canonical_sort(lower);
  Expr e = node(Expr::Kind::PFQ);
  e.upper = std::move(upper);
  e.lower = std::move(lower);
  e.fn = argument;
  return e;
}

Expr meijerg(std::vector<AlgNum> a_n, std::vector<AlgNum> a_rest, std::vector<AlgNum> b_m,
             std::vector<AlgNum> b_rest, const RatFn& argument) {
  Expr e = node(Expr::Kind::MeijerG);
  e.a_n = std::move(a_n);
  e.a_rest = std::move(a_rest);
  e.b_m = std::move(b_m);
  e.b_rest = std::move(b_rest);
  e.fn = argument;
  return e;
}

Expr reduce_order(const Expr& e) {
  Expr out = e;
  if (e.kind == Expr::Kind::PFQ) {
    cancel_pairs(out.upper, out.lower);
  } else if (e.kind == Expr::Kind::MeijerG) {
    cancel_pairs(out.a_n, out.b_rest);
    cancel_pairs(out.a_rest, out.b_m);
  }
  return out;
}

Expr substitute(const Expr& e, const RatFn& g) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return e;
    case Expr::Kind::Variable:
      return rational(g);
    case Expr::Kind::Rational:
      return rational(e.fn.compose(g));
    case Expr::Kind::Power:
      return power(substitute(e.children.front(), g), e.value);
    case Expr::Kind::Product:
    case Expr::Kind::Sum: {
      std::vector<Expr> parts;
      for (const auto& c : e.children) parts.push_back(substitute(c, g));
      return e.kind == Expr::Kind::Product ? product(parts) : sum(parts);
    }
    case Expr::Kind::ExpIntegral:
      throw std::invalid_argument("substitute: ExpIntegral nodes are not transported");
    case Expr::Kind::PFQ:
    case Expr::Kind::MeijerG: {
      Expr out = e;
      out.fn = e.fn.compose(g);
      return out;
    }
  }
  return e;
}

bool contains_meijerg(const Expr& e) {
  if (e.kind == Expr::Kind::MeijerG) return true;
  return std::any_of(e.children.begin(), e.children.end(), contains_meijerg);
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return to_string(e.value);
    case Expr::Kind::Variable:
      return "x";
    case Expr::Kind::Rational:
      return to_string(e.fn);
    case Expr::Kind::Power: {
      const Expr& b = e.children.front();
      const bool bare = b.kind == Expr::Kind::Variable;
      return (bare ? to_string(b) : "(" + to_string(b) + ")") + "^" + render_number(e.value);
    }
    case Expr::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? "*" : "") + render_factor(e.children[i]);
      return out;
    }
    case Expr::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? " + " : "") + to_string(e.children[i]);
      return out;
    }
    case Expr::Kind::ExpIntegral:
      return "exp(" + render_integral(e.integral) + ")";
    case Expr::Kind::PFQ:
      return "hypergeom(" + render_list(e.upper) + ", " + render_list(e.lower) + ", " + to_string(e.fn) + ")";
    case Expr::Kind::MeijerG:
      return "meijerg([" + render_list(e.a_n) + ", " + render_list(e.a_rest) + "], [" + render_list(e.b_m) + ", " +
             render_list(e.b_rest) + "], " + to_string(e.fn) + ")";
  }
  return "";
}

}  // namespace hyper3
