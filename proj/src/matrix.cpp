#include "qhw/matrix.hpp"

#include <algorithm>

namespace qw {

Matrix Matrix::identity(const Field& F, std::size_t n) {
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, F.one());
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "BlockMismatch", "matrix shape mismatch in +");
  Matrix r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "BlockMismatch", "matrix shape mismatch in -");
  Matrix r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.sub(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, "BlockMismatch", "matrix shape mismatch in *");
  Matrix r(F_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = a_[i * cols_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& okj = o.a_[k * o.cols_ + j];
        if (okj == 0) continue;
        r.a_[i * o.cols_ + j] = F_.add(r.a_[i * o.cols_ + j], F_.mul(aik, okj));
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(F_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.mul(a_[i], c);
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(F_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
  return r;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
  require(!blocks.empty(), "BlockMismatch", "hstack of nothing");
  std::size_t rows = blocks.front().rows_, cols = 0;
  for (const auto& b : blocks) {
    require(b.rows_ == rows, "BlockMismatch", "hstack row mismatch");
    cols += b.cols_;
  }
  Matrix r(blocks.front().F_, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) r.a_[i * cols + off + j] = b.a_[i * b.cols_ + j];
    off += b.cols_;
  }
  return r;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
  require(!blocks.empty(), "BlockMismatch", "vstack of nothing");
  std::size_t cols = blocks.front().cols_, rows = 0;
  for (const auto& b : blocks) {
    require(b.cols_ == cols, "BlockMismatch", "vstack column mismatch");
    rows += b.rows_;
  }
  Matrix r(blocks.front().F_, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + off * cols);
    off += b.rows_;
  }
  return r;
}

Matrix Matrix::submatrix(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
  Matrix s(F_, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) s.a_[i * c + j] = a_[(i0 + i) * cols_ + (j0 + j)];
  return s;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = a_[i * cols_ + j];
  return v;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  std::vector<Scalar> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = a_[i * cols_ + j];
  return v;
}

void Matrix::set_column(std::size_t j, const std::vector<Scalar>& v) {
  require(v.size() == rows_, "BlockMismatch", "set_column size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) a_[i * cols_ + j] = F_.reduce(v[i]);
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  require(x.size() == cols_, "BlockMismatch", "apply size mismatch");
  std::vector<Scalar> y(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc(0);
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_[i * cols_ + j] != 0 && x[j] != 0) acc += a_[i * cols_ + j] * x[j];
    y[i] = F_.reduce(acc);
  }
  return y;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (a_[i * cols_ + c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a_[sel * cols_ + j], a_[r * cols_ + j]);
    Scalar inv = F_.inv(a_[r * cols_ + c]);
    for (std::size_t j = c; j < cols_; ++j) a_[r * cols_ + j] = F_.mul(a_[r * cols_ + j], inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Scalar f = a_[i * cols_ + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j)
        a_[i * cols_ + j] = F_.sub(a_[i * cols_ + j], F_.mul(f, a_[r * cols_ + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix tmp = *this;
  return tmp.rref().size();
}

Matrix Matrix::kernel_basis() const {
  Matrix tmp = *this;
  std::vector<std::size_t> pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix K(F_, cols_, free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t f = free_cols[fi];
    K.set(f, fi, F_.one());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      K.set(pivots[pi], fi, F_.neg(tmp.at(pi, f)));
  }
  return K;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
  require(b.size() == rows_, "BlockMismatch", "solve rhs size mismatch");
  Matrix aug(F_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_, b[i]);
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(cols_, Scalar(0));
  for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, cols_);
  return x;
}

Matrix Matrix::inverse() const {
  require(rows_ == cols_, "BlockMismatch", "inverse of non-square matrix");
  Matrix aug = hstack({*this, identity(F_, rows_)});
  std::vector<std::size_t> pivots = aug.rref();
  require(pivots.size() == rows_, "SplittingInvalid", "singular matrix has no inverse");
  return aug.submatrix(0, rows_, rows_, rows_);
}

std::vector<Scalar> EchelonSpan::residue(const std::vector<Scalar>& v) const {
  require(v.size() == dim_, "BlockMismatch", "EchelonSpan dimension mismatch");
  std::vector<Scalar> w(v);
  for (auto& x : w) x = F_.reduce(x);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = w[pivots_[r]];
    if (c == 0) continue;
    Scalar f = c;  // rows are pivot-normalized to 1
    for (std::size_t j = 0; j < dim_; ++j)
      if (rows_[r][j] != 0) w[j] = F_.sub(w[j], F_.mul(f, rows_[r][j]));
  }
  return w;
}

bool EchelonSpan::insert(const std::vector<Scalar>& v) {
  std::vector<Scalar> w = residue(v);
  std::size_t p = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (w[j] != 0) {
      p = j;
      break;
    }
  if (p == dim_) return false;
  Scalar inv = F_.inv(w[p]);
  for (auto& x : w) x = F_.mul(x, inv);
  // keep rows ordered by pivot for a canonical form
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(w));
  pivots_.insert(pivots_.begin() + pos, p);
  // back-substitute to keep reduced form
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r == pos) continue;
    Scalar f = rows_[r][p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (rows_[pos][j] != 0) rows_[r][j] = F_.sub(rows_[r][j], F_.mul(f, rows_[pos][j]));
  }
  return true;
}

bool EchelonSpan::contains(const std::vector<Scalar>& v) const {
  std::vector<Scalar> w = residue(v);
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

}  // namespace qw
