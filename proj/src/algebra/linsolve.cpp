#include "hyper3/algebra/linsolve.hpp"

#include <stdexcept>

namespace hyper3 {

LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rat>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: size mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();

  // Integer augmented matrix.
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
    Int l = b[i].get_den();
    for (const auto& v : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
    m[i][cols] = b[i].get_num() * (l / b[i].get_den());
  }

  // Bareiss elimination to row echelon form.
  std::vector<std::size_t> pivot_cols;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        Int v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolution out;
  out.rank = static_cast<int>(r);
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(m[i][cols]) != 0) {
      out.kind = LinearSolution::Kind::Inconsistent;
      return out;
    }
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  // Back substitution for a given right-hand side column / free assignment.
  auto back_substitute = [&](const std::vector<Rat>& rhs, std::vector<Rat> x) {
    for (std::size_t k = r; k-- > 0;) {
      const std::size_t c = pivot_cols[k];
      Rat s = rhs[k];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (sgn(m[k][j]) != 0 && sgn(x[j]) != 0) s -= Rat(m[k][j]) * x[j];
      }
      x[c] = s / Rat(m[k][c]);
    }
    return x;
  };

  std::vector<Rat> rhs(r);
  for (std::size_t k = 0; k < r; ++k) rhs[k] = Rat(m[k][cols]);
  out.solution = back_substitute(rhs, std::vector<Rat>(cols));

  if (r == cols) {
    out.kind = LinearSolution::Kind::Unique;
    return out;
  }
  out.kind = LinearSolution::Kind::Parametric;
  const std::vector<Rat> zero_rhs(r);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(cols);
    x[f] = 1;
    out.nullspace.push_back(back_substitute(zero_rhs, x));
  }
  return out;
}

}  // namespace hyper3
