#pragma once

#include <cstddef>
#include <string_view>

#include "nefgl/multipoly.hpp"
#include "nefgl/series.hpp"

namespace nefgl {

// expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := base ('^' uint)?, base := rational | m<i> | z<i> | '(' expr ')'.
// A leading sign is accepted on any term.
MultiPoly poly_parse(std::string_view text, std::size_t nvars);

// Same grammar evaluated in the truncated series ring, with exp(.) and
// log1p(.) available as functions of series without constant term.
TruncSeries series_parse(std::string_view text, std::size_t nvars, int max_degree);

}  // namespace nefgl
