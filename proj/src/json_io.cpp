#include "affmult/json_io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace affmult {

nlohmann::json bigint_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (lo <= v && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void to_json(nlohmann::json& j, const StandardTableau& t) { j = t.rows(); }

void to_json(nlohmann::json& j, const ExtendedYoungDiagram& y) { j = y.seq(); }

void to_json(nlohmann::json& j, const CrystalTuple& t) { j = t.diagrams; }

void to_json(nlohmann::json& j, const WeightVector& w) {
  j = nlohmann::json{{"level", w.level}, {"c", w.c}};
}

void to_json(nlohmann::json& j, const PathSequence& seq) { j = seq.moves; }

void to_json(nlohmann::json& j, const MultiplicityReport& report) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [name, value] : report.values) values[name] = bigint_json(value);
  nlohmann::json breakdown = nlohmann::json::array();
  for (const auto& [mu, term] : report.breakdown)
    breakdown.push_back({{"mu", mu}, {"term", bigint_json(term)}});
  j = nlohmann::json{{"query",
                      {{"k", report.query.k},
                       {"a", report.query.a},
                       {"b", report.query.b},
                       {"ell", report.query.ell},
                       {"n", report.query.rank()}}},
                     {"values", values},
                     {"agree", report.agree},
                     {"breakdown", breakdown}};
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition: expected an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("partition: parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(std::move(parts));
}

StandardTableau tableau_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau: expected an array of rows");
  Filling rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("tableau: rows must be arrays");
    std::vector<int> entries;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw std::invalid_argument("tableau: entries must be integers");
      entries.push_back(x.get<int>());
    }
    rows.push_back(std::move(entries));
  }
  return StandardTableau(std::move(rows));
}

Word word_from_string(const std::string& s) {
  Word w;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      w.push_back(std::stoi(item));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("word: entry out of range: " + item);
    }
  }
  return w;
}

}  // namespace affmult
