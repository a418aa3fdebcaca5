#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ncreal/series.hpp"
#include "ncreal/symreal.hpp"

namespace ncreal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "ncreal-1";

// Rationals are strings "p/q" ("p" when q = 1); matrices are row-major arrays
// of arrays of such strings. Readers throw FormatError on malformed input.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const MatQ& a);
/// Shapes are checked when given; a 0-row matrix needs an explicit cols.
MatQ matrix_from_json(const Json& j, std::optional<Index> rows = std::nullopt,
                      std::optional<Index> cols = std::nullopt);

/// {"terms": [{"C": matrix, "B": matrix}, ...]}
Json to_json(const BimodOp& op);
BimodOp bimod_from_json(const Json& j, Index m, Index n_out, Index n_in);

/// {"format": "ncreal-1", "point": [matrix, ...]}
Json point_to_json(const MatTuple& q);
MatTuple point_from_json(const Json& j);

/// {"format", "m", "g", "n", "point", "c", "b", "A"}
Json to_json(const Realization& r);
Realization realization_from_json(const Json& j);

Json to_json(const SymRealization& sr);
/// {"word": matrix} for every stored coefficient; words as in word_to_string.
Json to_json(const TruncSeries& s);

/// Throws FormatError unless j carries the current format tag.
void check_format(const Json& j);

}  // namespace ncreal
