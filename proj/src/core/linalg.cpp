#include "abconv/core/linalg.hpp"

#include <algorithm>
#include <utility>

namespace abconv {

Vec zeros(Index n) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = 0;
  return v;
}

Vec unit(Index n, Index i) {
  Vec v = zeros(n);
  v(i) = 1;
  return v;
}

Vec vec(std::initializer_list<Rational> values) {
  Vec v(static_cast<Index>(values.size()));
  Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

std::vector<Index> rref(Mat& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pick = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pick = r;
        break;
      }
    }
    if (pick < 0) continue;
    if (pick != row) m.row(pick).swap(m.row(row));
    const Rational inv = 1 / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Mat nullspace(const Mat& m) {
  Mat reduced = m;
  const std::vector<Index> pivots = rref(reduced);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < m.cols(); ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  Mat basis(m.cols(), static_cast<Index>(free_cols.size()));
  for (Index k = 0; k < basis.cols(); ++k) {
    const Index f = free_cols[static_cast<std::size_t>(k)];
    for (Index r = 0; r < basis.rows(); ++r) basis(r, k) = 0;
    basis(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis(pivots[i], k) = -reduced(static_cast<Index>(i), f);
    }
  }
  return basis;
}

Index rank(const Mat& m) {
  Mat reduced = m;
  return static_cast<Index>(rref(reduced).size());
}

Mat stack_rows(const std::vector<Vec>& rows, Index cols) {
  Mat m(static_cast<Index>(rows.size()), cols);
  for (Index r = 0; r < m.rows(); ++r) {
    const Vec& v = rows[static_cast<std::size_t>(r)];
    if (v.size() != cols) throw DimensionError("stack_rows: row length mismatch");
    m.row(r) = v.transpose();
  }
  return m;
}

SpanBasis span_basis(const std::vector<Vec>& vectors, Index dim) {
  Mat m = stack_rows(vectors, dim);
  SpanBasis out;
  out.pivots = rref(m);
  for (std::size_t i = 0; i < out.pivots.size(); ++i) {
    out.basis.push_back(m.row(static_cast<Index>(i)).transpose());
  }
  return out;
}

Vec normalize_direction(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) {
      const Rational scale = abs_value(v(i));
      Vec out = v;
      for (Index k = 0; k < out.size(); ++k) out(k) /= scale;
      return out;
    }
  }
  return v;
}

Rational pairing(const Vec& functional, const Vec& x) {
  if (functional.size() != x.size()) throw DimensionError("pairing: dimension mismatch");
  Rational acc = 0;
  for (Index i = 0; i < x.size(); ++i) {
    if (functional(i) != 0 && x(i) != 0) acc += functional(i) * x(i);
  }
  return acc;
}

bool is_zero(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

Rational max_abs(const Vec& v) {
  Rational best = 0;
  for (Index i = 0; i < v.size(); ++i) {
    const Rational a = abs_value(v(i));
    if (best < a) best = a;
  }
  return best;
}

std::vector<Vec> unique_points(std::vector<Vec> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v(i));
  }
  return out + ")";
}

}  // namespace abconv
