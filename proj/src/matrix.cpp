#include "gl2wb/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gl2wb {

void axpy(const Field& F, Elem* dst, const Elem* src, Elem c, int n) {
  if (c == 0) return;
  const int q = F.q();
  const Elem* add = F.add_table();
  if (c == 1) {
    for (int k = 0; k < n; ++k) dst[k] = add[dst[k] * q + src[k]];
    return;
  }
  const Elem* mr = F.mul_row(c);
  for (int k = 0; k < n; ++k) dst[k] = add[dst[k] * q + mr[src[k]]];
}

void scale_row(const Field& F, Elem* v, Elem c, int n) {
  const Elem* mr = F.mul_row(c);
  for (int k = 0; k < n; ++k) v[k] = mr[v[k]];
}

Matrix Matrix::identity(const Field& F, int n) {
  Matrix m(F, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& F, int cols, const std::vector<std::vector<Elem>>& rows) {
  Matrix m(F, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i));
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(*F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    const Elem* a = row(i);
    Elem* c = out.row(i);
    for (int k = 0; k < cols_; ++k)
      if (a[k] != 0) axpy(*F_, c, o.row(k), a[k], o.cols_);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = *this;
  for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = F_->add(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = *this;
  for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = F_->sub(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out = *this;
  const Elem* mr = F_->mul_row(c);
  for (auto& x : out.data_) x = mr[x];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(*F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

Matrix Matrix::row_block(int r0, int n) const {
  Matrix out(*F_, n, cols_);
  std::copy(row(r0), row(r0) + static_cast<size_t>(n) * cols_, out.row(0));
  return out;
}

Matrix Matrix::select_cols(const std::vector<int>& cols) const {
  Matrix out(*F_, rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, static_cast<int>(j)) = (*this)(i, cols[j]);
  return out;
}

Matrix Matrix::select_rows(const std::vector<int>& rows) const {
  Matrix out(*F_, static_cast<int>(rows.size()), cols_);
  for (size_t i = 0; i < rows.size(); ++i) std::copy(row(rows[i]), row(rows[i]) + cols_, out.row(static_cast<int>(i)));
  return out;
}

Matrix Matrix::stack(const Matrix& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("stack column mismatch");
  Matrix out(*F_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

Matrix Matrix::beside(const Matrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("beside row mismatch");
  Matrix out(*F_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    std::copy(row(i), row(i) + cols_, out.row(i));
    std::copy(right.row(i), right.row(i) + right.cols_, out.row(i) + cols_);
  }
  return out;
}

void Matrix::append_row(const Elem* v) {
  data_.insert(data_.end(), v, v + cols_);
  ++rows_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << static_cast<int>((*this)(i, j));
    os << "\n";
  }
  return os.str();
}

Rref rref(const Matrix& m) {
  const Field& F = m.field();
  Matrix a = m;
  const int R = a.rows(), C = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap_ranges(a.row(piv), a.row(piv) + C, a.row(r));
    Elem inv = F.inv(a(r, c));
    if (inv != 1) scale_row(F, a.row(r) + c, inv, C - c);
    for (int i = 0; i < R; ++i) {
      if (i == r) continue;
      Elem x = a(i, c);
      if (x != 0) axpy(F, a.row(i) + c, a.row(r) + c, F.neg(x), C - c);
    }
    pivots.push_back(c);
    ++r;
  }
  Rref out;
  out.rank = r;
  out.pivots = std::move(pivots);
  out.m = a.row_block(0, r);
  return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel(const Matrix& m) {
  const Field& F = m.field();
  Rref e = rref(m);
  const int C = m.cols();
  std::vector<char> is_piv(C, 0);
  for (int c : e.pivots) is_piv[c] = 1;
  Matrix out(F, C - e.rank, C);
  int k = 0;
  for (int j = 0; j < C; ++j) {
    if (is_piv[j]) continue;
    Elem* v = out.row(k++);
    v[j] = 1;
    for (int i = 0; i < e.rank; ++i) v[e.pivots[i]] = F.neg(e.m(i, j));
  }
  return out;
}

Matrix left_kernel(const Matrix& m) { return kernel(m.transpose()); }

Matrix kron(const Matrix& A, const Matrix& B) {
  const Field& F = A.field();
  Matrix out(F, A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      Elem a = A(i, j);
      if (a == 0) continue;
      const Elem* mr = F.mul_row(a);
      for (int k = 0; k < B.rows(); ++k) {
        Elem* dst = out.row(i * B.rows() + k) + j * B.cols();
        const Elem* src = B.row(k);
        for (int l = 0; l < B.cols(); ++l) dst[l] = mr[src[l]];
      }
    }
  return out;
}

std::pair<Matrix, Matrix> subspace_meet_join(const Matrix& U, const Matrix& V) {
  if (U.cols() != V.cols()) throw std::invalid_argument("meet/join ambient mismatch");
  const Field& F = U.field();
  Rref u = rref(U), v = rref(V);
  Matrix both = u.m.stack(v.m);
  Matrix join = rref(both).m;
  if (u.rank == 0 || v.rank == 0) return {Matrix(F, 0, U.cols()), join};
  Matrix z = left_kernel(both);
  // z = (a | b) with a*U + b*V = 0; the meet is spanned by a*U.
  Matrix a(F, z.rows(), u.rank);
  for (int i = 0; i < z.rows(); ++i) std::copy(z.row(i), z.row(i) + u.rank, a.row(i));
  Matrix meet = rref(a * u.m).m;
  return {meet, join};
}

Matrix inverse(const Matrix& m) {
  const Field& F = m.field();
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  Rref e = rref(m.beside(Matrix::identity(F, n)));
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix out(F, n, n);
  for (int i = 0; i < n; ++i) std::copy(e.m.row(i) + n, e.m.row(i) + 2 * n, out.row(i));
  return out;
}

std::optional<Matrix> solve_left(const Matrix& A, const Matrix& B) {
  const Field& F = A.field();
  const int n = A.rows(), C = A.cols();
  if (B.cols() != C) throw std::invalid_argument("solve_left shape mismatch");
  Rref e = rref(A.beside(Matrix::identity(F, n)));
  int r = 0;
  while (r < e.rank && e.pivots[r] < C) ++r;
  Matrix X(F, B.rows(), n);
  std::vector<Elem> w(C);
  for (int b = 0; b < B.rows(); ++b) {
    std::copy(B.row(b), B.row(b) + C, w.begin());
    Elem* x = X.row(b);
    for (int i = 0; i < r; ++i) {
      Elem c = w[e.pivots[i]];
      if (c == 0) continue;
      axpy(F, w.data(), e.m.row(i), F.neg(c), C);
      axpy(F, x, e.m.row(i) + C, c, n);
    }
    for (int j = 0; j < C; ++j)
      if (w[j] != 0) return std::nullopt;
  }
  return X;
}

bool reduce_against(const Rref& basis, Elem* v) {
  const Field& F = basis.m.field();
  const int C = basis.m.cols();
  for (int i = 0; i < basis.rank; ++i) {
    Elem c = v[basis.pivots[i]];
    if (c != 0) axpy(F, v, basis.m.row(i), F.neg(c), C);
  }
  for (int j = 0; j < C; ++j)
    if (v[j] != 0) return false;
  return true;
}

bool in_span(const Rref& basis, const Elem* v) {
  std::vector<Elem> w(v, v + basis.m.cols());
  return reduce_against(basis, w.data());
}

bool row_space_contains(const Matrix& V, const Matrix& U) {
  if (U.rows() == 0) return true;
  Rref b = rref(V);
  for (int i = 0; i < U.rows(); ++i)
    if (!in_span(b, U.row(i))) return false;
  return true;
}

Matrix coordinates(const Rref& basis, const Matrix& U) {
  const Field& F = U.field();
  Matrix out(F, U.rows(), basis.rank);
  std::vector<Elem> w(U.cols());
  for (int r = 0; r < U.rows(); ++r) {
    for (int i = 0; i < basis.rank; ++i) out(r, i) = U(r, basis.pivots[i]);
    std::copy(U.row(r), U.row(r) + U.cols(), w.begin());
    if (!reduce_against(basis, w.data())) throw std::domain_error("vector outside span");
  }
  return out;
}

}  // namespace gl2wb
