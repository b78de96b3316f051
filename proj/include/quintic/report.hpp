#pragma once

#include <string>

#include "json.hpp"
#include "quintic/classify.hpp"
#include "quintic/errors.hpp"
#include "quintic/genus.hpp"
#include "quintic/tables.hpp"

namespace quintic {

using Json = nlohmann::ordered_json;

// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json json_integer(const Integer& x);
// Rational elements print as integers, others as "c0,c1,c2,c3".
Json json_element(const CyclotomicInt& a);

Json to_json(const FormClassification& c);
Json to_json(const AmbiguousRankReport& r);
Json to_json(const Prediction& p);
Json to_json(const DiscrepancyFlag& f);
Json to_json(const DerivationStep& s);
Json matrix_json(const GenusRankReport& r);
Json to_json(const Table& t);
Json error_json(ErrorKind kind, const std::string& message);

std::string table_csv(const Table& t);
std::string table_markdown(const Table& t);

}  // namespace quintic
