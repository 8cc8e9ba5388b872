#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ramcover/error.hpp"
#include "ramcover/rational.hpp"

namespace ramcover {

struct LinearSystem {
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;

  LinearSystem() = default;
  explicit LinearSystem(std::size_t unknowns) : cols(unknowns) {}

  std::size_t rows() const { return matrix.size(); }

  void add_equation(std::vector<Rational> coeffs, Rational value) {
    if (coeffs.size() != cols) throw InvalidInput("equation width does not match unknown count");
    matrix.push_back(std::move(coeffs));
    rhs.push_back(std::move(value));
  }

  // True when matrix * x == rhs exactly.
  bool satisfied_by(const std::vector<Rational>& x) const {
    if (x.size() != cols) return false;
    for (std::size_t i = 0; i < rows(); ++i) {
      Rational acc;
      for (std::size_t j = 0; j < cols; ++j)
        if (!matrix[i][j].is_zero()) acc += matrix[i][j] * x[j];
      if (!(acc == rhs[i])) return false;
    }
    return true;
  }
};

struct SolveResult {
  enum class Status { kSolved, kNoSolution };
  Status status = Status::kNoSolution;
  // Free variables are set to zero.
  std::vector<Rational> solution;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::vector<std::size_t> pivot_columns;

  bool solved() const { return status == Status::kSolved; }
};

// Fraction-free (Bareiss) row echelon form on the row-scaled integer
// augmented matrix, then back substitution over Q. Pivots are the first
// nonzero entry in each column, so the result is deterministic and free
// variables are always the rightmost non-pivot columns.
inline SolveResult solve_exact(const LinearSystem& sys) {
  if (sys.rhs.size() != sys.rows()) throw InvalidInput("row count differs from rhs length");
  const std::size_t rows = sys.rows(), cols = sys.cols;

  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (sys.matrix[i].size() != cols) throw InvalidInput("ragged matrix row");
    Integer scale = 1;
    for (std::size_t j = 0; j <= cols; ++j) {
      const Rational& v = j < cols ? sys.matrix[i][j] : sys.rhs[i];
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.denominator().get_mpz_t());
    }
    for (std::size_t j = 0; j <= cols; ++j) {
      const Rational& v = j < cols ? sys.matrix[i][j] : sys.rhs[i];
      m[i][j] = v.numerator() * (scale / v.denominator());
    }
  }

  SolveResult result;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Integer& pivot = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        Integer v = pivot * m[i][j] - m[i][c] * m[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
          throw PipelineError("Bareiss step lost exactness");
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = pivot;
    result.pivot_columns.push_back(c);
    ++r;
  }
  result.rank = r;
  result.nullity = cols - r;

  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return result;  // 0 = nonzero
  }

  result.solution.assign(cols, Rational());
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t c = result.pivot_columns[k];
    Rational acc(m[k][cols]);
    for (std::size_t j = c + 1; j < cols; ++j)
      if (m[k][j] != 0 && !result.solution[j].is_zero()) acc -= Rational(m[k][j]) * result.solution[j];
    result.solution[c] = acc / Rational(m[k][c]);
  }
  result.status = SolveResult::Status::kSolved;
  return result;
}

}  // namespace ramcover
