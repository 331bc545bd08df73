#pragma once

#include "smashprime/linalg.hpp"
#include "smashprime/rng.hpp"

namespace smashprime::testsupport {

inline Vec qv(FieldSpec f, const std::vector<long>& entries) {
  Vec v;
  v.reserve(entries.size());
  for (long e : entries) v.push_back(Scalar::from_int(f, e));
  return v;
}

inline Matrix qm(FieldSpec f, const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> vr;
  for (const auto& r : rows) vr.push_back(qv(f, r));
  return Matrix::from_rows(f, vr, rows.empty() ? 0 : rows[0].size());
}

inline Matrix random_matrix(Rng& rng, FieldSpec f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar::from_int(f, rng.range(-3, 3));
  return m;
}

}  // namespace smashprime::testsupport
