#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stm {

using Q = boost::multiprecision::mpq_rational;
using Vec = std::vector<Q>;

// "p/q" with q > 0 and lowest terms, or "p" for integers
std::string to_string(const Q& q);
Q parse_rational(std::string_view s);
bool is_integer(const Q& q);

// Dense matrix over Q, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }
  // rows separated by ';', entries by whitespace, e.g. "1 0 -1/2; 0 1 3"
  static Mat parse(std::string_view text);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  Q& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_col(std::size_t j, const Vec& v);

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Mat cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, r_, nc); }
  bool is_zero() const;
  bool is_identity() const;
  Vec flatten() const { return a_; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Q& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Q& s) { return a *= s; }
  friend Mat operator*(const Q& s, Mat a) { return a *= s; }
  friend Mat operator-(Mat a) { return a *= Q(-1); }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Q> a_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat power(const Mat& m, unsigned k);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);
// Columns form a basis of {x : m x = 0}.
Mat nullspace(const Mat& m);
// Columns form a basis of the column space (subset of the input columns).
Mat column_basis(const Mat& m);
std::optional<Vec> solve(const Mat& a, const Vec& b);
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& m);
Q det(Mat m);

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(const Q& s, Vec a);
bool is_zero(const Vec& v);
Q dot(const Vec& a, const Vec& b);

// Incrementally tracks the span of inserted vectors.
class RowSpace {
 public:
  explicit RowSpace(std::size_t len) : len_(len) {}
  // true if v was independent of what is stored (and is now stored)
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }

 private:
  Vec reduce(Vec v) const;
  std::size_t len_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace stm
