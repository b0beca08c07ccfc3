#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "handsaw/betti.hpp"
#include "handsaw/graded.hpp"
#include "handsaw/kl.hpp"
#include "handsaw/pyramid.hpp"
#include "handsaw/torus.hpp"

namespace handsaw {

using Json = nlohmann::ordered_json;

// ---- flag parsing -------------------------------------------------------

// "1,1,3,4,2" -> {1,1,3,4,2}; rejects trailing garbage. Empty string -> {}.
std::vector<int> parse_int_list(const std::string& text);
// Zeros grammar "tier:int[,int]*(;tier:...)*" against a pyramid's rows.
std::vector<std::vector<long long>> parse_zeros(const std::string& text, const Pyramid& p);

// ---- JSON rendering -----------------------------------------------------

Json to_json(const Pyramid& p);
Json to_json(const ShiftMatrix& s);
Json to_json(const FixedPointTuple& t);
Json to_json(const CharacterSum& c);
Json to_json(const TruncatedSeries& s);
Json to_json(const SmallnessReport& r);
Json to_json(const GradedDimVector& g);
Json to_json(const EllWeight& w);

// ---- text rendering -----------------------------------------------------

std::string format_shift_matrix(const ShiftMatrix& s);
std::string format_graded_dims(const GradedDimVector& g);
std::string format_ell_weight(const EllWeight& w);

}  // namespace handsaw
