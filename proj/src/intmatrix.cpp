#include "iads/intmatrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace iads {

using boost::multiprecision::abs;

IMat IMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return {};
  IMat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (int(rows[i].size()) != m.cols_) throw std::domain_error("IMat: ragged rows");
    for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IMat IMat::mul(const IMat& o) const {
  if (cols_ != o.rows_) throw std::domain_error("IMat: shape mismatch in mul");
  IMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

std::vector<Int> IMat::apply(const std::vector<Int>& v) const {
  if (int(v.size()) != cols_) throw std::domain_error("IMat: shape mismatch in apply");
  std::vector<Int> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

IMat IMat::pow(const Int& n) const {
  if (rows_ != cols_) throw std::domain_error("IMat: pow of non-square");
  if (n < 0) throw std::domain_error("IMat: negative power");
  if (n > Int(1) << 62) throw std::domain_error("IMat: power exponent too large");
  auto e = n.convert_to<unsigned long long>();
  IMat base = *this, r = identity(rows_);
  while (e != 0) {
    if (e & 1ULL) r = r.mul(base);
    e >>= 1ULL;
    if (e != 0) base = base.mul(base);
  }
  return r;
}

IMat IMat::hstack(const IMat& o) const {
  if (rows_ != o.rows_) throw std::domain_error("IMat: shape mismatch in hstack");
  IMat r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

void IMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

Int IMat::det() const {
  if (rows_ != cols_) throw std::domain_error("IMat: det of non-square");
  int n = rows_;
  if (n == 0) return 1;
  IMat m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;  // Bareiss: division is exact
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::string IMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? "," : "");
    os << "]" << (i + 1 < rows_ ? "," : "");
  }
  os << "]";
  return os.str();
}

namespace {

// Clears row t and column t of s around the pivot s(t,t), tracking the row
// operations in u and the column operations in v.
void clear_pivot(IMat& s, IMat& u, IMat& v, int t) {
  int n = s.rows(), m = s.cols();
  for (;;) {
    // move a minimal-magnitude nonzero entry of the trailing block to (t,t)
    int bi = -1, bj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (s(i, j) != 0 && (bi < 0 || abs(s(i, j)) < abs(s(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) return;  // trailing block is zero
    s.swap_rows(t, bi);
    u.swap_rows(t, bi);
    s.swap_cols(t, bj);
    v.swap_cols(t, bj);

    bool clean = true;
    for (int i = t + 1; i < n; ++i) {
      if (s(i, t) == 0) continue;
      Int q = s(i, t) / s(t, t);
      if (q != 0)
        for (int j = 0; j < m; ++j) {
          s(i, j) -= q * s(t, j);
        }
      for (int j = 0; j < u.cols(); ++j) u(i, j) -= q * u(t, j);
      if (s(i, t) != 0) clean = false;  // remainder survives, pivot will shrink
    }
    for (int j = t + 1; j < m; ++j) {
      if (s(t, j) == 0) continue;
      Int q = s(t, j) / s(t, t);
      if (q != 0)
        for (int i = 0; i < n; ++i) {
          s(i, j) -= q * s(i, t);
        }
      for (int i = 0; i < v.rows(); ++i) v(i, j) -= q * v(i, t);
      if (s(t, j) != 0) clean = false;
    }
    if (clean) {
      bool done = true;
      for (int i = t + 1; i < n && done; ++i) done = s(i, t) == 0;
      for (int j = t + 1; j < m && done; ++j) done = s(t, j) == 0;
      if (done) return;
    }
  }
}

void diagonalize(IMat& s, IMat& u, IMat& v) {
  int k = std::min(s.rows(), s.cols());
  for (int t = 0; t < k; ++t) clear_pivot(s, u, v, t);
}

}  // namespace

SmithResult smith_normal_form(IMat a) {
  SmithResult r;
  r.u = IMat::identity(a.rows());
  r.v = IMat::identity(a.cols());
  r.s = std::move(a);
  diagonalize(r.s, r.u, r.v);

  int k = std::min(r.s.rows(), r.s.cols());
  // enforce the divisor chain d_i | d_{i+1}
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (int i = 0; i + 1 < k; ++i) {
      const Int &di = r.s(i, i), &dj = r.s(i + 1, i + 1);
      if (di == 0 && dj != 0) {
        r.s.swap_rows(i, i + 1);
        r.u.swap_rows(i, i + 1);
        r.s.swap_cols(i, i + 1);
        r.v.swap_cols(i, i + 1);
        dirty = true;
        continue;
      }
      if (di != 0 && dj % di != 0) {
        // fold d_{i+1} into column i, then re-run the pivot reduction
        for (int row = 0; row < r.s.rows(); ++row) r.s(row, i) += r.s(row, i + 1);
        for (int row = 0; row < r.v.rows(); ++row) r.v(row, i) += r.v(row, i + 1);
        clear_pivot(r.s, r.u, r.v, i);
        clear_pivot(r.s, r.u, r.v, i + 1);
        dirty = true;
      }
    }
  }
  for (int i = 0; i < k; ++i)
    if (r.s(i, i) < 0) {
      for (int j = 0; j < r.s.cols(); ++j) r.s(i, j) = -r.s(i, j);
      for (int j = 0; j < r.u.cols(); ++j) r.u(i, j) = -r.u(i, j);
    }
  r.rank = 0;
  for (int i = 0; i < k; ++i)
    if (r.s(i, i) != 0) ++r.rank;
  return r;
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> f;
  for (int i = 0; i < rank; ++i)
    if (s(i, i) > 1) f.push_back(s(i, i));
  return f;
}

IMat column_hnf(IMat a) {
  int n = a.rows(), m = a.cols();
  int c = 0;
  for (int r = 0; r < n; ++r) {
    // gcd-combine columns >= c so that row r has a single nonzero entry at c
    for (;;) {
      int best = -1;
      for (int j = c; j < m; ++j)
        if (a(r, j) != 0 && (best < 0 || abs(a(r, j)) < abs(a(r, best)))) best = j;
      if (best < 0) throw std::domain_error("column_hnf: rank-deficient lattice basis");
      a.swap_cols(c, best);
      bool clean = true;
      for (int j = c + 1; j < m; ++j) {
        if (a(r, j) == 0) continue;
        Int q = a(r, j) / a(r, c);
        for (int i = 0; i < n; ++i) a(i, j) -= q * a(i, c);
        if (a(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) < 0)
      for (int i = 0; i < n; ++i) a(i, c) = -a(i, c);
    ++c;
  }
  // keep the n pivot columns, then reduce the off-diagonal entries
  IMat h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = a(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      Int q = floor_div(h(i, j), h(i, i));
      if (q != 0)
        for (int row = 0; row < n; ++row) h(row, j) -= q * h(row, i);
    }
  return h;
}

namespace {

std::optional<std::vector<Int>> solve_from_snf(const SmithResult& sr, int rows, int cols,
                                               const std::vector<Int>& b) {
  std::vector<Int> c = sr.u.apply(b);
  std::vector<Int> y(static_cast<size_t>(cols));
  int k = std::min(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (i < k && sr.s(i, i) != 0) {
      if (c[size_t(i)] % sr.s(i, i) != 0) return std::nullopt;
      y[size_t(i)] = c[size_t(i)] / sr.s(i, i);
    } else if (c[size_t(i)] != 0) {
      return std::nullopt;
    }
  }
  return sr.v.apply(y);
}

}  // namespace

std::optional<std::vector<Int>> solve_integer(const IMat& a, const std::vector<Int>& b) {
  if (int(b.size()) != a.rows()) throw std::domain_error("solve_integer: shape mismatch");
  return solve_from_snf(smith_normal_form(a), a.rows(), a.cols(), b);
}

std::optional<std::vector<Int>> SnfSolver::solve(const std::vector<Int>& b) const {
  if (int(b.size()) != rows_) throw std::domain_error("SnfSolver: shape mismatch");
  return solve_from_snf(sr_, rows_, cols_, b);
}

IMat integer_kernel(const IMat& a) {
  SmithResult sr = smith_normal_form(a);
  int m = a.cols();
  IMat k(m, m - sr.rank);
  for (int j = sr.rank; j < m; ++j)
    for (int i = 0; i < m; ++i) k(i, j - sr.rank) = sr.v(i, j);
  return k;
}

bool in_column_lattice(const IMat& a, const std::vector<Int>& v) {
  return solve_integer(a, v).has_value();
}

namespace {

// Monic characteristic polynomial by the Faddeev-LeVerrier recursion; the
// divisions are exact over the integers.
std::vector<Int> char_poly(const IMat& t) {
  int d = t.rows();
  std::vector<Int> c(d + 1);
  c[d] = 1;
  IMat m = IMat::identity(d);
  for (int k = 1; k <= d; ++k) {
    IMat am = t.mul(m);
    Int tr = 0;
    for (int i = 0; i < d; ++i) tr += am(i, i);
    Int ck = -tr / k;
    c[d - k] = ck;
    m = am;
    for (int i = 0; i < d; ++i) m(i, i) += ck;
  }
  return c;
}

// Schur-Cohn reduction: all roots strictly inside the unit circle. Exact
// over the rationals; boundary configurations report false.
bool schur_stable(std::vector<Rat> c) {
  int d = int(c.size()) - 1;
  while (d > 0) {
    Rat a0 = c[0], ad = c[d];
    if (abs(a0) >= abs(ad)) return false;
    std::vector<Rat> nc(d);
    for (int k = 0; k < d; ++k) nc[k] = ad * c[k + 1] - a0 * c[d - 1 - k];
    c = std::move(nc);
    --d;
  }
  return c[0] != 0;
}

}  // namespace

bool all_eigenvalues_outside_unit_circle(const IMat& t) {
  std::vector<Int> p = char_poly(t);
  if (p[0] == 0) return false;  // singular
  int d = int(p.size()) - 1;
  std::vector<Rat> rev(d + 1);
  for (int k = 0; k <= d; ++k) rev[k] = Rat(p[d - k]);  // roots become reciprocals
  return schur_stable(std::move(rev));
}

}  // namespace iads
