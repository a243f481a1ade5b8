#pragma once

#include <optional>
#include <vector>

#include "fairdiv/lp.hpp"

// Independent LP ground truth: enumerate every basic point of the
// constraint system (rows plus bound hyperplanes), keep the feasible ones,
// and take the best objective value. Deliberately shares nothing with the
// simplex implementation it cross-checks.
namespace fairdiv::testing {

struct VertexEnumResult {
  bool feasible = false;
  Rational best_value;
  std::vector<Vec> vertices;
};

// Solve the square system rows(sel) . x = rhs(sel) by Gauss-Jordan; empty
// when singular.
inline std::optional<Vec> solve_square(const Mat& a, const Vec& b) {
  const Index k = a.rows();
  Mat work(k, k + 1);
  work.leftCols(k) = a;
  work.col(k) = b;
  for (Index col = 0; col < k; ++col) {
    Index pivot = -1;
    for (Index r = col; r < k; ++r) {
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) work.row(pivot).swap(work.row(col));
    work.row(col) /= work(col, col);
    for (Index r = 0; r < k; ++r) {
      if (r != col && work(r, col) != 0) work.row(r) -= work(r, col) * work.row(col);
    }
  }
  return Vec(work.col(k));
}

inline VertexEnumResult enumerate_vertices(const LinearProgram& lp) {
  const Index k = lp.objective.size();
  // Full constraint list: LP rows then lo/hi bound hyperplanes.
  std::vector<Vec> normals;
  std::vector<Rational> offsets;
  std::vector<bool> equality;
  for (const auto& row : lp.rows) {
    normals.push_back(row.coeffs);
    offsets.push_back(row.rhs);
    equality.push_back(row.rel == Relation::Equal);
  }
  for (Index j = 0; j < k; ++j) {
    Vec lo = Vec::Zero(k);
    lo(j) = -1;  // -x_j <= -lo_j
    normals.push_back(lo);
    offsets.push_back(-lp.bounds[static_cast<size_t>(j)].lo);
    equality.push_back(false);
    Vec hi = Vec::Zero(k);
    hi(j) = 1;
    normals.push_back(hi);
    offsets.push_back(lp.bounds[static_cast<size_t>(j)].hi);
    equality.push_back(false);
  }
  const Index total = static_cast<Index>(normals.size());

  auto satisfies_all = [&](const Vec& x) {
    for (Index c = 0; c < total; ++c) {
      Rational lhs = normals[static_cast<size_t>(c)].dot(x);
      if (equality[static_cast<size_t>(c)] ? lhs != offsets[static_cast<size_t>(c)]
                                           : lhs > offsets[static_cast<size_t>(c)]) {
        return false;
      }
    }
    return true;
  };

  VertexEnumResult result;
  if (k == 0) {
    Vec empty(0);
    if (satisfies_all(empty)) {
      result.feasible = true;
      result.best_value = 0;
      result.vertices.push_back(empty);
    }
    return result;
  }

  std::vector<Index> sel(static_cast<size_t>(k));
  for (Index j = 0; j < k; ++j) sel[static_cast<size_t>(j)] = j;
  for (;;) {
    Mat a(k, k);
    Vec b(k);
    for (Index r = 0; r < k; ++r) {
      a.row(r) = normals[static_cast<size_t>(sel[static_cast<size_t>(r)])].transpose();
      b(r) = offsets[static_cast<size_t>(sel[static_cast<size_t>(r)])];
    }
    if (auto x = solve_square(a, b); x && satisfies_all(*x)) {
      Rational value = lp.objective.dot(*x);
      if (!result.feasible || value > result.best_value) result.best_value = value;
      result.feasible = true;
      result.vertices.push_back(*x);
    }
    // Next k-combination of constraint indices.
    Index pos = k - 1;
    while (pos >= 0 && sel[static_cast<size_t>(pos)] == total - k + pos) --pos;
    if (pos < 0) break;
    ++sel[static_cast<size_t>(pos)];
    for (Index r = pos + 1; r < k; ++r) {
      sel[static_cast<size_t>(r)] = sel[static_cast<size_t>(r - 1)] + 1;
    }
  }
  return result;
}

}  // namespace fairdiv::testing
