#include "hyper3/cli/parse.hpp"

#include <array>
#include <cctype>
#include <nlohmann/json.hpp>
#include <set>

namespace hyper3 {

namespace {

// A linear form free + sum_i y[i] * y^(i).
struct Lin {
  RatFn free;
  std::array<RatFn, 4> y{};
  bool has_y = false;

  static Lin pure(const RatFn& f) { return Lin{f, {}, false}; }
  static Lin derivative(int order) {
    Lin l;
    l.y[static_cast<std::size_t>(order)] = RatFn(1);
    l.has_y = true;
    return l;
  }
};

Lin operator+(Lin a, const Lin& b) {
  a.free += b.free;
  for (std::size_t i = 0; i < 4; ++i) a.y[i] += b.y[i];
  a.has_y = a.has_y || b.has_y;
  return a;
}

Lin scale(Lin a, const RatFn& f) {
  a.free *= f;
  for (auto& c : a.y) c *= f;
  return a;
}

const std::set<std::string> kFunctions = {"sin",    "cos",    "tan",  "cot",   "sec",  "csc",  "exp",
                                          "log",    "ln",     "sqrt", "sinh",  "cosh", "tanh", "arcsin",
                                          "arccos", "arctan", "asin", "acos",  "atan", "abs",  "erf",
                                          "gamma",  "besselj"};
const std::set<std::string> kConstants = {"pi", "Pi", "e", "E", "I", "i"};

class Parser {
 public:
  Parser(const std::string& text, bool allow_y) : s_(text), allow_y_(allow_y) {}

  Lin parse_side() {
    Lin v = term();
    while (true) {
      skip();
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v + scale(term(), RatFn(-1));
      } else {
        return v;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= s_.size()) throw SyntaxError(what + " (end of input)", pos_);
    throw SyntaxError(what + ", found '" + std::string(1, s_[pos_]) + "'", pos_);
  }
  std::size_t pos() const { return pos_; }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool starts_primary(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '.' || c == '_';
  }

  Lin multiply(const Lin& a, const Lin& b) {
    if (a.has_y && b.has_y) throw InvalidEquation("product of two terms in y is not linear");
    if (a.has_y) return scale(a, b.free);
    if (b.has_y) return scale(b, a.free);
    return Lin::pure(a.free * b.free);
  }

  Lin term() {
    Lin v = unary();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = multiply(v, unary());
      } else if (c == '/') {
        const std::size_t at = pos_++;
        const Lin d = unary();
        if (d.has_y) throw InvalidEquation("division by a term in y is not linear");
        if (d.free.is_zero()) throw SyntaxError("division by zero", at);
        v = scale(v, RatFn(1) / d.free);
      } else if (starts_primary(c)) {
        v = multiply(v, power());
      } else {
        return v;
      }
    }
  }

  Lin unary() {
    if (accept('-')) return scale(unary(), RatFn(-1));
    if (accept('+')) return unary();
    return power();
  }

  Lin power() {
    Lin base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const Lin e = unary();
    if (e.has_y || !e.free.is_constant()) throw NonRationalCoefficient("exponent must be an integer constant");
    const Rat n = e.free.constant_value();
    if (!is_integer(n)) throw NonRationalCoefficient("fractional exponent " + to_string(n));
    if (abs(n) > 1000) throw SyntaxError("exponent too large", at);
    if (base.has_y) throw InvalidEquation("power of a term in y is not linear");
    const long k = n.get_num().get_si();
    if (k < 0 && base.free.is_zero()) throw SyntaxError("zero to a negative power", at);
    return Lin::pure(k >= 0 ? base.free.pow(static_cast<int>(k)) : RatFn(1) / base.free.pow(static_cast<int>(-k)));
  }

  Lin number() {
    const std::size_t start = pos_;
    std::string digits;
    std::size_t frac = 0;
    bool dot = false;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      if (s_[pos_] == '.') {
        if (dot) throw SyntaxError("malformed number", pos_);
        dot = true;
      } else {
        digits += s_[pos_];
        if (dot) ++frac;
      }
      ++pos_;
    }
    if (digits.empty()) throw SyntaxError("malformed number", start);
    Rat v(Int(digits, 10));
    Int den(1);
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    v /= Rat(den);
    v.canonicalize();
    return Lin::pure(RatFn(v));
  }

  std::string identifier() {
    std::string id;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      id += s_[pos_++];
    }
    return id;
  }

  // After "y": primes, then an optional "(x)".
  Lin y_term(std::size_t at) {
    if (!allow_y_) throw SyntaxError("unexpected dependent variable y in a coefficient", at);
    int order = 0;
    while (pos_ < s_.size() && s_[pos_] == '\'') {
      ++order;
      ++pos_;
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      const std::size_t save = pos_;
      ++pos_;
      skip();
      if (identifier() == "x" && accept(')')) {
        // y(x)
      } else {
        pos_ = save;
      }
    }
    if (order > 3) throw InvalidEquation("derivative of order " + std::to_string(order) + " exceeds 3");
    return Lin::derivative(order);
  }

  // diff(y(x), x, x, ...) or diff(y(x), x$n)
  Lin diff_term(std::size_t at) {
    if (!allow_y_) throw SyntaxError("unexpected derivative in a coefficient", at);
    expect('(');
    skip();
    if (identifier() != "y") fail("expected y(x) in diff");
    expect('(');
    skip();
    if (identifier() != "x") fail("expected x");
    expect(')');
    int order = 0;
    while (accept(',')) {
      skip();
      if (identifier() != "x") fail("expected x");
      if (accept('$')) {
        skip();
        const Lin n = number();
        const Rat v = n.free.constant_value();
        if (!is_integer(v) || sgn(v) <= 0) throw SyntaxError("bad derivative count", pos_);
        order += static_cast<int>(v.get_num().get_si());
      } else {
        ++order;
      }
    }
    expect(')');
    if (order > 3) throw InvalidEquation("derivative of order " + std::to_string(order) + " exceeds 3");
    return Lin::derivative(order);
  }

  Lin primary() {
    skip();
    if (pos_ >= s_.size()) fail("expected an operand");
    const char c = s_[pos_];
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Lin v = parse_side();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string id = identifier();
      if (id == "x") return Lin::pure(RatFn::x());
      if (id == "y") return y_term(at);
      if (id == "diff") return diff_term(at);
      if (kFunctions.count(id)) throw NonRationalCoefficient("function " + id + " is not rational");
      if (kConstants.count(id)) throw NonRationalCoefficient("constant " + id + " is not rational");
      throw NonRationalCoefficient("symbolic parameter '" + id +
                                   "'; substitute a rational value for it before solving");
    }
    fail("unexpected character");
  }

  const std::string& s_;
  bool allow_y_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFn parse_rational(const std::string& text) {
  Parser p(text, false);
  const Lin v = p.parse_side();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return v.free;
}

Ode3 parse_equation(const std::string& text) {
  Parser p(text, true);
  Lin lhs = p.parse_side();
  if (p.accept('=')) lhs = lhs + scale(p.parse_side(), RatFn(-1));
  if (!p.at_end()) p.fail("unexpected trailing input");
  if (!lhs.free.is_zero()) throw InvalidEquation("equation is not homogeneous in y");
  const RatFn lead = lhs.y[3];
  if (lead.is_zero()) throw InvalidEquation("equation is not of third order");
  return Ode3{lhs.y[2] / lead, lhs.y[1] / lead, lhs.y[0] / lead};
}

Ode3 parse_ode(const OdeInputDoc& doc) {
  if (doc.equation) return parse_equation(*doc.equation);
  return Ode3{parse_rational(doc.c2), parse_rational(doc.c1), parse_rational(doc.c0)};
}

OdeInputDoc read_input_doc(const std::string& text) {
  OdeInputDoc doc;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw SyntaxError("empty input", 0);
  if (text[first] != '{') {
    doc.equation = text;
    return doc;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError("invalid JSON document", e.byte > 0 ? e.byte - 1 : 0);
  }
  auto field = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key)) return std::nullopt;
    const auto& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(std::string("field '") + key + "' must be a string");
  };
  if (auto eq = field("equation")) {
    doc.equation = *eq;
    return doc;
  }
  bool any = false;
  if (auto v = field("c2")) doc.c2 = *v, any = true;
  if (auto v = field("c1")) doc.c1 = *v, any = true;
  if (auto v = field("c0")) doc.c0 = *v, any = true;
  if (!any) throw ParseError("JSON input needs \"equation\" or coefficients \"c2\", \"c1\", \"c0\"");
  return doc;
}

}  // namespace hyper3
