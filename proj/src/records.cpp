#include "pairguess/records.hpp"

#include <istream>
#include <limits>
#include <ostream>

#include "json.hpp"
#include "pairguess/errors.hpp"

namespace pairguess {

namespace {

int require_int_field(const nlohmann::json& obj, const char* key, std::size_t line_number) {
  const auto it = obj.find(key);
  if (it == obj.end())
    throw InvalidRecord(line_number, std::string("missing field \"") + key + "\"");
  if (!it->is_number_integer())
    throw InvalidRecord(line_number, std::string("field \"") + key + "\" must be an integer");
  const std::int64_t v = it->get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InvalidRecord(line_number, std::string("field \"") + key + "\" out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string format_record_line(const RoundRecord& record) {
  return "{\"round\":" + std::to_string(record.round) + ",\"x\":" + std::to_string(record.x) +
         ",\"j\":" + std::to_string(record.j) + ",\"guess\":" + std::to_string(record.guess) + "}";
}

RoundRecord parse_record_line(const std::string& line, std::size_t line_number) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidRecord(line_number, std::string("not valid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw InvalidRecord(line_number, "line is not a JSON object");

  RoundRecord record;
  const auto round_it = obj.find("round");
  if (round_it == obj.end())
    throw InvalidRecord(line_number, "missing field \"round\"");
  if (!round_it->is_number_integer())
    throw InvalidRecord(line_number, "field \"round\" must be an integer");
  record.round = round_it->get<std::int64_t>();
  record.x = require_int_field(obj, "x", line_number);
  record.j = require_int_field(obj, "j", line_number);
  record.guess = require_int_field(obj, "guess", line_number);
  return record;
}

void for_each_record(std::istream& in, const std::function<void(const RoundRecord&)>& sink) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    sink(parse_record_line(line, line_number));
  }
}

std::vector<RoundRecord> read_records(std::istream& in) {
  std::vector<RoundRecord> records;
  for_each_record(in, [&records](const RoundRecord& r) { records.push_back(r); });
  return records;
}

void write_records(std::ostream& out, const std::vector<RoundRecord>& records) {
  for (const RoundRecord& r : records) out << format_record_line(r) << '\n';
}

}  // namespace pairguess
