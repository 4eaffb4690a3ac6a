#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "abconv/core/rational.hpp"

namespace abconv {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = Vector<Rational>;
using Mat = Matrix<Rational>;
using Index = Eigen::Index;

Vec zeros(Index n);
Vec unit(Index n, Index i);
Vec vec(std::initializer_list<Rational> values);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<Index> rref(Mat& m);

/// Basis of {x : m x = 0} (one column per basis vector).
Mat nullspace(const Mat& m);

Index rank(const Mat& m);

/// Stacks `rows` as the rows of a matrix with `cols` columns.
Mat stack_rows(const std::vector<Vec>& rows, Index cols);

/// RREF basis of span(vectors). Each basis vector has a 1 in its pivot
/// coordinate and 0 in every other basis vector's pivot coordinate.
struct SpanBasis {
  std::vector<Vec> basis;
  std::vector<Index> pivots;
};
SpanBasis span_basis(const std::vector<Vec>& vectors, Index dim);

/// Positive rescaling so that the first nonzero entry has absolute value 1.
Vec normalize_direction(const Vec& v);

/// Canonical pairing of a functional (as a vector) with a point.
Rational pairing(const Vec& functional, const Vec& x);

bool is_zero(const Vec& v);

/// Lexicographic order on equal-length vectors.
bool lex_less(const Vec& a, const Vec& b);

/// Exact max |v_i|.
Rational max_abs(const Vec& v);

/// Sorted unique copy of `points`.
std::vector<Vec> unique_points(std::vector<Vec> points);

std::string to_string(const Vec& v);

}  // namespace abconv
