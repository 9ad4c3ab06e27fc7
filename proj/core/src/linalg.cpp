#include "ecassoc/linalg.hpp"

#include "ecassoc/error.hpp"

#include <utility>

namespace ecassoc {

namespace {

void require_field(const Field& field, const FieldElement& x, const char* what) {
  if (!x.is_bound() || !(x.field() == field)) {
    raise(ErrorCode::MixedFields, std::string(what) + ": entry outside " + field.spec());
  }
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<Vector>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    if (!a[r][c].is_one()) {
      const auto inv = a[r][c].inverse();
      for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const auto f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows, Vector(cols, field.zero())) {}

Matrix Matrix::from_rows(const Field& field, std::vector<Vector> rows) {
  Matrix m(field, 0, rows.empty() ? 0 : rows.front().size());
  for (const auto& row : rows) {
    if (row.size() != m.cols_) raise(ErrorCode::InvalidPoint, "ragged matrix rows");
    for (const auto& x : row) require_field(field, x, "matrix");
  }
  m.rows_ = std::move(rows);
  return m;
}

std::string Matrix::dump() const {
  std::string out;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? " " : "") + row[c].to_string();
    out += "\n";
  }
  return out;
}

RankKernel rank_kernel(const Matrix& m) {
  for (const auto& row : m.data()) {
    for (const auto& x : row) require_field(m.field(), x, "rank_kernel");
  }
  auto a = m.data();
  RankKernel out;
  out.pivots = reduce(a, m.cols());
  out.rank = out.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto c : out.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), m.field().zero());
    v[f] = m.field().one();
    for (std::size_t i = 0; i < out.pivots.size(); ++i) v[out.pivots[i]] = -a[i][f];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

Matrix permute_columns(const Matrix& m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m.cols()) raise(ErrorCode::InvalidPoint, "column permutation has the wrong length");
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, perm.at(c));
  }
  return out;
}

RankKernel rank_kernel_permuted(const Matrix& m, const std::vector<std::size_t>& perm) {
  auto rk = rank_kernel(permute_columns(m, perm));
  for (auto& c : rk.pivots) c = perm[c];
  for (auto& v : rk.kernel) {
    Vector back(v.size(), m.field().zero());
    for (std::size_t c = 0; c < v.size(); ++c) back[perm[c]] = v[c];
    v = std::move(back);
  }
  return rk;
}

Vector multiply(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) raise(ErrorCode::InvalidPoint, "matrix-vector size mismatch");
  Vector out(m.rows(), m.field().zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c).is_zero()) out[r] += m.at(r, c) * v[c];
    }
  }
  return out;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) raise(ErrorCode::InvalidPoint, "right-hand side size mismatch");
  auto a = m.data();
  for (std::size_t r = 0; r < a.size(); ++r) {
    require_field(m.field(), b[r], "solve");
    a[r].push_back(b[r]);
  }
  const auto pivots = reduce(a, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][m.cols()];
  return x;
}

}  // namespace ecassoc
