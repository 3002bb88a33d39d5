#include "stm/matrix.hpp"

#include "stm/error.hpp"

#include <sstream>

namespace stm {

const char* err_name(Err e) {
  switch (e) {
    case Err::BadInput: return "BadInput";
    case Err::NotABijection: return "NotABijection";
    case Err::Disconnected: return "Disconnected";
    case Err::UnknownName: return "UnknownName";
    case Err::OrbitTooLarge: return "OrbitTooLarge";
    case Err::WordDoesNotStabilize: return "WordDoesNotStabilize";
    case Err::NonCycleInput: return "NonCycleInput";
    case Err::NotInSpan: return "NotInSpan";
    case Err::NotAnAutomorphism: return "NotAnAutomorphism";
    case Err::NonCommutingGenerators: return "NonCommutingGenerators";
    case Err::IrrationalEigenvalue: return "IrrationalEigenvalue";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::DecompositionIncomplete: return "DecompositionIncomplete";
    case Err::UnsupportedAlgebraType: return "UnsupportedAlgebraType";
    case Err::NotUnipotent: return "NotUnipotent";
    case Err::NotCertified: return "NotCertified";
  }
  return "Error";
}

std::string to_string(const Q& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Q& q) { return boost::multiprecision::denominator(q) == 1; }

Q parse_rational(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw Error(Err::BadInput, "empty rational");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  std::size_t slash = t.find('/');
  auto digits = [&](std::size_t a, std::size_t b) {
    if (a >= b) return false;
    for (std::size_t i = a; i < b; ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits(start, t.size())
                                       : digits(start, slash) && digits(slash + 1, t.size());
  if (!ok) throw Error(Err::BadInput, "not a rational: " + t);
  if (slash != std::string::npos && t.find_first_not_of('0', slash + 1) == std::string::npos)
    throw Error(Err::BadInput, "zero denominator: " + t);
  if (t[0] == '+') t.erase(0, 1);
  Q q(t);
  return q;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::parse(std::string_view text) {
  std::vector<Vec> rows;
  std::string s(text);
  std::stringstream all(s);
  std::string line;
  while (std::getline(all, line, ';')) {
    std::stringstream ls(line);
    std::string tok;
    Vec row;
    while (ls >> tok) row.push_back(parse_rational(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) return Mat();
  std::size_t c = rows[0].size();
  for (auto& r : rows)
    if (r.size() != c) throw Error(Err::BadInput, "ragged matrix literal");
  return from_rows(rows, c);
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Vec Mat::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

void Mat::set_col(std::size_t j, const Vec& v) {
  for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

bool Mat::is_zero() const {
  for (auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat& Mat::operator+=(const Mat& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Mat& Mat::operator*=(const Q& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Q& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (b(k, j) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

Vec operator*(const Mat& a, const Vec& v) {
  Vec out(a.r_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j)
      if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

std::string Mat::str() const {
  std::string s;
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) {
      if (j) s += ' ';
      s += to_string((*this)(i, j));
    }
    if (i + 1 < r_) s += "; ";
  }
  return s;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Mat m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Mat m(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

Mat power(const Mat& m, unsigned k) {
  Mat r = Mat::identity(m.rows());
  Mat b = m;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Q inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Q f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat nullspace(const Mat& m) {
  Mat r = m;
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return Mat::from_columns(basis, m.cols());
}

Mat column_basis(const Mat& m) {
  Mat r = m;
  auto piv = rref(r);
  std::vector<Vec> cols;
  for (auto p : piv) cols.push_back(m.col(p));
  return Mat::from_columns(cols, m.rows());
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  Mat aug = hstack(a, b);
  auto piv = rref(aug);
  for (auto p : piv)
    if (p >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[k], j) = aug(k, a.cols() + j);
  return x;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  auto x = solve(a, Mat::from_columns({b}, b.size()));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.square()) return std::nullopt;
  if (m.rows() == 0) return m;
  Mat aug = hstack(m, Mat::identity(m.rows()));
  auto piv = rref(aug);
  if (piv.size() < m.rows() || piv[m.rows() - 1] >= m.cols()) return std::nullopt;
  return aug.block(0, m.cols(), m.rows(), m.cols());
}

Q det(Mat m) {
  Q d = 1;
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Q f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec operator*(const Q& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}

bool is_zero(const Vec& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Vec RowSpace::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Q f = v[piv_[k]];
    if (f == 0) continue;
    const Vec& r = rows_[k];
    for (std::size_t j = 0; j < len_; ++j)
      if (r[j] != 0) v[j] -= f * r[j];
  }
  return v;
}

bool RowSpace::insert(const Vec& v) {
  Vec w = reduce(v);
  std::size_t p = 0;
  while (p < len_ && w[p] == 0) ++p;
  if (p == len_) return false;
  Q inv = 1 / w[p];
  for (auto& x : w) x *= inv;
  for (auto& r : rows_) {
    const Q f = r[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < len_; ++j)
      if (w[j] != 0) r[j] -= f * w[j];
  }
  rows_.push_back(std::move(w));
  piv_.push_back(p);
  return true;
}

bool RowSpace::contains(const Vec& v) const { return is_zero(reduce(v)); }

}  // namespace stm
