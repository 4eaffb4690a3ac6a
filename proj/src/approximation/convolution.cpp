#include "abconv/approximation/convolution.hpp"

#include <algorithm>

namespace abconv {

std::string to_string(const LexExt& value) {
  if (value.is_top()) return "top";
  if (value.is_bottom()) return "bottom";
  return to_string(value.value());
}

GridFunction::GridFunction(std::vector<Vec> us, std::vector<Vec> vs, std::vector<std::vector<LexExt>> values)
    : us_(std::move(us)), vs_(std::move(vs)), values_(std::move(values)) {
  if (values_.size() != us_.size()) throw DimensionError("grid function: row count differs from the first grid");
  for (const auto& row : values_) {
    if (row.size() != vs_.size()) throw DimensionError("grid function: column count differs from the second grid");
    for (const LexExt& v : row) {
      if (v.is_bottom()) throw DomainError("grid function: BOTTOM values are not allowed");
    }
  }
}

const char* to_string(Exactness e) {
  switch (e) {
    case Exactness::Exact:
      return "exact";
    case Exactness::InfinitesimallyExact:
      return "infinitesimally-exact";
    case Exactness::Inexact:
      break;
  }
  return "inexact";
}

Exactness classify_exactness(const LexExt& value, const LexExt& sum) {
  if (value == sum) return Exactness::Exact;
  if (value.is_finite() && sum.is_finite() && infinitely_close(value.value(), sum.value())) {
    return Exactness::InfinitesimallyExact;
  }
  return Exactness::Inexact;
}

GridConvolution infimal_convolution(const GridFunction& f1, const GridFunction& f2) {
  if (f1.vs().empty()) throw DomainError("infimal_convolution: empty middle grid");
  if (f1.vs() != f2.us()) throw DimensionError("infimal_convolution: middle grids differ");
  GridConvolution out{f1.us(), f1.vs(), f2.vs(), {}};
  for (std::size_t x = 0; x < out.xs.size(); ++x) {
    for (std::size_t z = 0; z < out.zs.size(); ++z) {
      std::vector<LexExt> sums;
      for (std::size_t y = 0; y < out.ys.size(); ++y) sums.push_back(f1.at(x, y) + f2.at(y, z));
      ConvolutionEntry e;
      e.x = x;
      e.z = z;
      e.value = LexExt::top();
      for (std::size_t y = 0; y < sums.size(); ++y) {
        if (sums[y] < e.value) {
          e.value = sums[y];
          e.witness = y;
        }
      }
      if (e.witness) e.exactness = classify_exactness(e.value, sums[*e.witness]);
      for (std::size_t y = 0; y < sums.size(); ++y) {
        if (e.value.is_finite() && classify_exactness(e.value, sums[y]) != Exactness::Inexact) e.near_witnesses.push_back(y);
      }
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

struct Line {
  Rational slope;
  Rational intercept;
  Rational at(const Rational& y) const { return slope * y + intercept; }
};

Rational upper(const std::vector<Line>& lines, const Rational& y) {
  Rational best = lines.front().at(y);
  for (const Line& l : lines) {
    const Rational v = l.at(y);
    if (best < v) best = v;
  }
  return best;
}

void crossings(const std::vector<Line>& lines, std::vector<Rational>& out) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope != lines[j].slope) {
        out.push_back((lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope));
      }
    }
  }
}

void check_pair(const PolyFunc& f1, const PolyFunc& f2) {
  if (f1.dim() != 2 || f2.dim() != 2) throw DimensionError("polyhedral convolution needs functions of two real variables");
}

}  // namespace

PolyConvolutionValue infimal_convolution(const PolyFunc& f1, const PolyFunc& f2, const Rational& x, const Rational& z) {
  check_pair(f1, f2);
  std::vector<Line> l1, l2;
  for (const auto& p : f1.pieces()) l1.push_back({p.slope(1), Rational(p.slope(0) * x + p.offset)});
  for (const auto& p : f2.pieces()) l2.push_back({p.slope(0), Rational(p.slope(1) * z + p.offset)});
  auto extreme = [](const std::vector<Line>& ls, bool want_max) {
    Rational best = ls.front().slope;
    for (const Line& l : ls) {
      if (want_max ? best < l.slope : l.slope < best) best = l.slope;
    }
    return best;
  };
  const Rational right = extreme(l1, true) + extreme(l2, true);
  const Rational left = extreme(l1, false) + extreme(l2, false);
  if (right < 0 || left > 0) return {ExtScalar::bottom(), std::nullopt};
  std::vector<Rational> ys;
  crossings(l1, ys);
  crossings(l2, ys);
  if (ys.empty()) ys.push_back(Rational(0));
  std::sort(ys.begin(), ys.end());
  std::optional<Rational> best_y;
  Rational best;
  for (const Rational& y : ys) {
    const Rational v = upper(l1, y) + upper(l2, y);
    if (!best_y || v < best) {
      best = v;
      best_y = y;
    }
  }
  return {ExtScalar(best), best_y};
}

std::optional<PolyFunc> convolution_function(const PolyFunc& f1, const PolyFunc& f2) {
  check_pair(f1, f2);
  // pieces of f1(x, y) + f2(y, z): (coefficient of x, of z, of y, offset)
  struct Piece {
    Rational cx, cz, cy, off;
  };
  std::vector<Piece> pieces;
  for (const auto& p : f1.pieces()) {
    for (const auto& r : f2.pieces()) {
      pieces.push_back({p.slope(0), r.slope(1), Rational(p.slope(1) + r.slope(0)), Rational(p.offset + r.offset)});
    }
  }
  std::vector<AffineFunctional> out;
  for (const Piece& p : pieces) {
    if (p.cy == 0) out.push_back({vec({p.cx, p.cz}), p.off});
  }
  for (const Piece& p : pieces) {
    if (p.cy <= 0) continue;
    for (const Piece& n : pieces) {
      if (n.cy >= 0) continue;
      const Rational wp = -n.cy;
      const Rational total = p.cy + wp;
      out.push_back({vec({Rational((p.cy * n.cx + wp * p.cx) / total), Rational((p.cy * n.cz + wp * p.cz) / total)}),
                     Rational((p.cy * n.off + wp * p.off) / total)});
    }
  }
  if (out.empty()) return std::nullopt;
  std::vector<AffineFunctional> unique;
  for (const AffineFunctional& a : out) {
    if (std::find(unique.begin(), unique.end(), a) == unique.end()) unique.push_back(a);
  }
  return PolyFunc(2, unique);
}

}  // namespace abconv
