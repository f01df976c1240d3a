#pragma once

#include <string>

#include <json.hpp>

#include "affmult/bigint.hpp"
#include "affmult/crystal.hpp"
#include "affmult/multiplicity.hpp"
#include "affmult/partition.hpp"
#include "affmult/paths.hpp"
#include "affmult/rsk.hpp"
#include "affmult/tableau.hpp"

namespace affmult {

// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::json bigint_json(const BigInt& v);

void to_json(nlohmann::json& j, const Partition& p);
void to_json(nlohmann::json& j, const StandardTableau& t);
void to_json(nlohmann::json& j, const ExtendedYoungDiagram& y);
void to_json(nlohmann::json& j, const CrystalTuple& t);
void to_json(nlohmann::json& j, const WeightVector& w);
void to_json(nlohmann::json& j, const PathSequence& seq);
void to_json(nlohmann::json& j, const MultiplicityReport& report);

Partition partition_from_json(const nlohmann::json& j);
StandardTableau tableau_from_json(const nlohmann::json& j);

// Comma-separated one-line permutation, e.g. "3,2,9,8,6,1,7,5,4".
Word word_from_string(const std::string& s);

}  // namespace affmult
