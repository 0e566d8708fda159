#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "nullstrata/count.hpp"
#include "nullstrata/oracle.hpp"

namespace nullstrata {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& z);
Json to_json(const IntPolynomial& p);
Json rational_list(const RVec& v);
Json integer_list(const ZVec& v);

Json to_json(const RootDatum& d);
/// {weight: [character coordinates], mult}
Json to_json(const ModuleCharacter& ch);
Json to_json(const Stratum& s, const RootDatum& d);
Json to_json(const CountReport& r, const std::vector<CheckResult>& checks);
Json to_json(const UnipotentReport& r, const RootDatum& d);
Json to_json(const FFCount& c);

/// Parse the JSON character format back (weights given in character coordinates).
ModuleCharacter character_from_json(const Json& j, const DatumPtr& datum);

/// Persistent memo file: a versioned header line, then "key<TAB>c0,c1,...".
std::map<std::string, IntPolynomial> load_memo_file(const std::string& path);
void save_memo_file(const std::string& path, const std::map<std::string, IntPolynomial>& memo);

}  // namespace nullstrata
