#include "cattool/sampled.hpp"

#include <sstream>

#include "cattool/error.hpp"

namespace cattool {

Matrix matrix_identity(std::size_t n) {
  Matrix m{n, n, std::vector<long long>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) m.data[i * n + i] = 1;
  return m;
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows)
    throw CompositionError("cannot compose " + matrix_string(a) + " then " + matrix_string(b));
  Matrix m{a.rows, b.cols, std::vector<long long>(a.rows * b.cols, 0)};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      for (std::size_t j = 0; j < b.cols; ++j) m.data[i * b.cols + j] += a.at(i, k) * b.at(k, j);
  return m;
}

std::string matrix_string(const Matrix& m) {
  std::ostringstream out;
  out << m.rows << "x" << m.cols << "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    out << (i ? ";" : "");
    for (std::size_t j = 0; j < m.cols; ++j) out << (j ? " " : "") << m.at(i, j);
  }
  out << "]";
  return out.str();
}

LazyCategory<std::size_t, Matrix> matrix_category(std::size_t max_dim, long long entry_bound) {
  LazyCategory<std::size_t, Matrix> c;
  c.dom = [](const Matrix& m) { return m.rows; };
  c.cod = [](const Matrix& m) { return m.cols; };
  c.id = [](const std::size_t& n) { return matrix_identity(n); };
  c.compose = [](const Matrix& a, const Matrix& b) { return matrix_product(a, b); };
  c.equal = [](const Matrix& a, const Matrix& b) { return a == b; };
  c.show = [](const Matrix& m) { return matrix_string(m); };
  auto draw = [max_dim, entry_bound](std::size_t rows, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long long> entry(-entry_bound, entry_bound);
    Matrix m{rows, dim(rng), {}};
    m.data.resize(m.rows * m.cols);
    for (auto& v : m.data) v = entry(rng);
    return m;
  };
  c.sample_from = [draw](const std::size_t& rows, std::mt19937_64& rng) { return draw(rows, rng); };
  c.sample = [draw, max_dim](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    return draw(dim(rng), rng);
  };
  return c;
}

}  // namespace cattool
