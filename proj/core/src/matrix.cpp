#include "qhom/matrix.hpp"

#include <sstream>

namespace qhom {

Matrix::Matrix(Field f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, "negative matrix shape");
  if (f.is_finite())
    ip_.assign(static_cast<std::size_t>(rows) * cols, 0);
  else
    q_.assign(static_cast<std::size_t>(rows) * cols, mpq_class(0));
}

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Matrix::set(int r, int c, std::int64_t v) {
  if (field_.is_finite())
    ip_[idx(r, c)] = fp::norm(v, field_.p());
  else
    q_[idx(r, c)] = mpq_class(static_cast<long>(v));
}

void Matrix::set(int r, int c, const mpq_class& v) {
  if (field_.is_finite()) {
    // only integral values can be reduced without a denominator inverse
    mpq_class red = v;
    red.canonicalize();
    mpz_class den = red.get_den();
    std::int64_t p = field_.p();
    std::int64_t d = fp::norm(mpz_class(den % p).get_si(), p);
    require(d != 0, "entry denominator divisible by the characteristic");
    std::int64_t n = fp::norm(mpz_class(red.get_num() % p).get_si(), p);
    ip_[idx(r, c)] = fp::mul(n, fp::inv(d, p), p);
  } else {
    q_[idx(r, c)] = v;
    q_[idx(r, c)].canonicalize();
  }
}

std::int64_t Matrix::get_int(int r, int c) const {
  require(field_.is_finite(), "get_int on a rational matrix");
  return ip_[idx(r, c)];
}

mpq_class Matrix::get_q(int r, int c) const {
  if (field_.is_finite()) return mpq_class(static_cast<long>(ip_[idx(r, c)]));
  return q_[idx(r, c)];
}

std::string Matrix::entry_str(int r, int c) const {
  if (field_.is_finite()) return std::to_string(ip_[idx(r, c)]);
  return q_[idx(r, c)].get_str();
}

mpq_class Matrix::parse_entry(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) fail(ErrorKind::Input, "bad matrix entry '" + s + "'");
  v.canonicalize();
  return v;
}

bool Matrix::is_zero() const {
  if (field_.is_finite()) {
    for (auto v : ip_) if (v != 0) return false;
  } else {
    for (const auto& v : q_) if (v != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      mpq_class want(r == c ? 1 : 0);
      if (get_q(r, c) != want) return false;
    }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return field_.is_finite() ? ip_ == o.ip_ : q_ == o.q_;
}

void Matrix::check_same(const Matrix& o) const {
  require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_, "matrix shape/field mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same(o);
  Matrix r = *this;
  if (field_.is_finite()) {
    std::int64_t p = field_.p();
    for (std::size_t i = 0; i < ip_.size(); ++i) r.ip_[i] = fp::add(ip_[i], o.ip_[i], p);
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) r.q_[i] = q_[i] + o.q_[i];
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same(o);
  Matrix r = *this;
  if (field_.is_finite()) {
    std::int64_t p = field_.p();
    for (std::size_t i = 0; i < ip_.size(); ++i) r.ip_[i] = fp::sub(ip_[i], o.ip_[i], p);
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) r.q_[i] = q_[i] - o.q_[i];
  }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  if (field_.is_finite()) {
    std::int64_t p = field_.p();
    for (auto& v : r.ip_) v = fp::neg(v, p);
  } else {
    for (auto& v : r.q_) v = -v;
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(field_ == o.field_ && cols_ == o.rows_, "matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  if (field_.is_finite()) {
    std::int64_t p = field_.p();
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        std::int64_t a = ip_[idx(i, k)];
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          std::int64_t& acc = r.ip_[r.idx(i, j)];
          acc = (acc + a * o.ip_[o.idx(k, j)]) % p;
        }
      }
  } else {
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const mpq_class& a = q_[idx(i, k)];
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r.q_[r.idx(i, j)] += a * o.q_[o.idx(k, j)];
      }
  }
  return r;
}

Matrix Matrix::scaled(std::int64_t k) const {
  if (field_.is_finite()) {
    Matrix r = *this;
    std::int64_t p = field_.p(), kk = fp::norm(k, p);
    for (auto& v : r.ip_) v = fp::mul(v, kk, p);
    return r;
  }
  return scaled(mpq_class(static_cast<long>(k)));
}

Matrix Matrix::scaled(const mpq_class& k) const {
  if (field_.is_finite()) {
    Matrix t(field_, 1, 1);
    t.set(0, 0, k);
    return scaled(t.get_int(0, 0));
  }
  Matrix r = *this;
  for (auto& v : r.q_) v *= k;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (field_.is_finite()) r.ip_[r.idx(j, i)] = ip_[idx(i, j)];
      else r.q_[r.idx(j, i)] = q_[idx(i, j)];
  return r;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  require(r0 >= 0 && c0 >= 0 && r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix r(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      if (field_.is_finite()) r.ip_[r.idx(i, j)] = ip_[idx(r0 + i, c0 + j)];
      else r.q_[r.idx(i, j)] = q_[idx(r0 + i, c0 + j)];
  return r;
}

void Matrix::paste(int r0, int c0, const Matrix& m) {
  require(field_ == m.field_ && r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, "paste out of range");
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j)
      if (field_.is_finite()) ip_[idx(r0 + i, c0 + j)] = m.ip_[m.idx(i, j)];
      else q_[idx(r0 + i, c0 + j)] = m.q_[m.idx(i, j)];
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  require(a.field_ == b.field_ && a.rows_ == b.rows_, "hcat mismatch");
  Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
  r.paste(0, 0, a);
  r.paste(0, a.cols_, b);
  return r;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  require(a.field_ == b.field_ && a.cols_ == b.cols_, "vcat mismatch");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  r.paste(0, 0, a);
  r.paste(a.rows_, 0, b);
  return r;
}

Matrix Matrix::diag_sum(const Matrix& a, const Matrix& b) {
  require(a.field_ == b.field_, "diag_sum field mismatch");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  r.paste(0, 0, a);
  r.paste(a.rows_, a.cols_, b);
  return r;
}

namespace {

// Shared Gauss-Jordan over either entry type.
template <typename E, typename Ops>
void rref_rows(std::vector<E>& a, int rows, int cols, std::vector<int>& pivots, Ops ops) {
  auto at = [&](int r, int c) -> E& { return a[static_cast<std::size_t>(r) * cols + c]; };
  int prow = 0;
  for (int c = 0; c < cols && prow < rows; ++c) {
    int sel = -1;
    for (int r = prow; r < rows; ++r)
      if (!ops.is_zero(at(r, c))) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != prow)
      for (int j = 0; j < cols; ++j) std::swap(at(sel, j), at(prow, j));
    E inv = ops.inv(at(prow, c));
    for (int j = c; j < cols; ++j) at(prow, j) = ops.mul(at(prow, j), inv);
    for (int r = 0; r < rows; ++r) {
      if (r == prow) continue;
      E f = at(r, c);
      if (ops.is_zero(f)) continue;
      for (int j = c; j < cols; ++j)
        at(r, j) = ops.sub(at(r, j), ops.mul(f, at(prow, j)));
    }
    pivots.push_back(c);
    ++prow;
  }
}

struct IntOps {
  std::int64_t p;
  bool is_zero(std::int64_t v) const { return v == 0; }
  std::int64_t inv(std::int64_t v) const { return fp::inv(v, p); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return fp::mul(a, b, p); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return fp::sub(a, b, p); }
};

struct QOps {
  bool is_zero(const mpq_class& v) const { return v == 0; }
  mpq_class inv(const mpq_class& v) const { return 1 / v; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
};

}  // namespace

RrefResult Matrix::rref() const {
  RrefResult out;
  out.reduced = *this;
  if (field_.is_finite())
    rref_rows(out.reduced.ip_, rows_, cols_, out.pivots, IntOps{field_.p()});
  else
    rref_rows(out.reduced.q_, rows_, cols_, out.pivots, QOps{});
  out.rank = static_cast<int>(out.pivots.size());
  return out;
}

int Matrix::rank() const { return rref().rank; }

Matrix Matrix::kernel_basis() const {
  RrefResult r = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(field_, cols_, static_cast<int>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.set(fc, static_cast<int>(j), 1);
    for (std::size_t pi = 0; pi < r.pivots.size(); ++pi) {
      mpq_class coef = r.reduced.get_q(static_cast<int>(pi), fc);
      if (coef != 0) k.set(r.pivots[pi], static_cast<int>(j), mpq_class(-coef));
    }
  }
  return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  require(b.rows_ == rows_ && b.field_ == field_, "solve shape mismatch");
  Matrix aug = hcat(*this, b);
  RrefResult r = aug.rref();
  for (int c : r.pivots)
    if (c >= cols_) return std::nullopt;  // inconsistent system
  Matrix x(field_, cols_, b.cols_);
  for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
    for (int j = 0; j < b.cols_; ++j)
      x.set(r.pivots[pi], j, r.reduced.get_q(static_cast<int>(pi), cols_ + j));
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug = hcat(*this, identity(field_, rows_));
  RrefResult r = aug.rref();
  if (r.rank != rows_) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    if (r.pivots[i] != i) return std::nullopt;
  return aug.rref().reduced.block(0, rows_, rows_, rows_);
}

Matrix Matrix::vectorize() const {
  Matrix v(field_, rows_ * cols_, 1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) v.set(i * cols_ + j, 0, get_q(i, j));
  return v;
}

Matrix Matrix::unvectorize(const Matrix& col, Field f, int rows, int cols) {
  require(col.cols() == 1 && col.rows() == rows * cols, "unvectorize shape");
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, col.get_q(i * cols + j, 0));
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      os << entry_str(i, j);
      if (j + 1 < cols_) os << ",";
    }
    os << "]";
    if (i + 1 < rows_) os << ",";
  }
  os << "]";
  return os.str();
}

std::optional<Matrix> solve_unique(const Matrix& a, const Matrix& b) {
  if (a.kernel_basis().cols() != 0) return std::nullopt;
  return a.solve(b);
}

}  // namespace qhom
