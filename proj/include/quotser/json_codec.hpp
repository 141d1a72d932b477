/*
   Copyright 2026 The quotser authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * json_codec.hpp
 * --------------
 * JSON encoding/decoding for the domain values.  Decoding is strict: unknown
 * fields are rejected and every failure is a SchemaError carrying the JSON
 * pointer of the offending element.  Encoding is canonical (fixed key order,
 * coefficients as decimal strings) so that encode(decode(f)) is byte-stable.
 */

#pragma once

#include <json.hpp>

#include "quotser/algebra.hpp"
#include "quotser/spaces.hpp"

namespace quotser {

using Json = nlohmann::ordered_json;

// Coefficient maps: {"0": "1", "2": "3"}; decode also accepts plain JSON
// integers as values.
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j, const std::string& path);

// {"numerator": {...}, "denominator": [2, 4]}
Json cyclo_to_json(const CycloRational& r);
CycloRational cyclo_from_json(const Json& j, const std::string& path);

Json series_to_json(const TruncatedSeries& s);

Json space_to_json(const SpaceDescriptor& s);
SpaceDescriptor space_from_json(const Json& j, const std::string& path);

Json group_to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const Json& j, const std::string& path);

// Decode helpers shared by the problem-file reader.
const Json& require_field(const Json& j, const char* name, const std::string& path);
int require_int(const Json& j, const std::string& path, long long min_value, long long max_value);
bool require_bool(const Json& j, const std::string& path);
std::string require_string(const Json& j, const std::string& path);
void reject_unknown_fields(const Json& j, std::initializer_list<const char*> known, const std::string& path);

}  // namespace quotser
