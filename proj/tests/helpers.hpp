#pragma once
#include <nefgl/parse.hpp>
#include <nefgl/polymatrix.hpp>
#include <string>
#include <vector>

namespace testing {

inline nefgl::Rational Q(long p, long q = 1) { return nefgl::make_rational(p, q); }

inline nefgl::MultiPoly P(const std::string& s, std::size_t n) { return nefgl::poly_parse(s, n); }

// Row-major entries as strings.
inline nefgl::PolyMatrix PM(const std::vector<std::vector<std::string>>& rows, std::size_t nvars) {
  nefgl::PolyMatrix m(rows.size(), nvars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = P(rows[i][j], nvars);
  return m;
}

}  // namespace testing
