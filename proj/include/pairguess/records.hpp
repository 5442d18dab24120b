#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace pairguess {

// One game round: the referee's draws (value x for the sender, set index
// j for the receiver) and the receiver's announced guess. All 1-based.
struct RoundRecord {
  std::int64_t round = 0;
  int x = 0;
  int j = 0;
  int guess = 0;
};

// The record file format is one JSON object per line with exactly this
// key order, e.g. {"round":1,"x":2,"j":1,"guess":2}
std::string format_record_line(const RoundRecord& record);

// Parses one line. Unknown fields are ignored; a missing or non-integer
// required field, or unparseable JSON, raises InvalidRecord carrying
// `line_number` (1-based).
RoundRecord parse_record_line(const std::string& line, std::size_t line_number);

// Streams every record of a line-delimited file to `sink` in order.
void for_each_record(std::istream& in, const std::function<void(const RoundRecord&)>& sink);

std::vector<RoundRecord> read_records(std::istream& in);

void write_records(std::ostream& out, const std::vector<RoundRecord>& records);

}  // namespace pairguess
