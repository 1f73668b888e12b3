#include "qwalk/transport.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "qwalk/error.hpp"

namespace qwalk {

const char* to_string(EvolutionMode mode) noexcept {
  return mode == EvolutionMode::kAbsorbing ? "absorbing" : "unitary";
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw Error(ErrorKind::kIo, "cannot format number");
  return std::string(buf, ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw Error(ErrorKind::kParse, "not a number: '" + text + "'");
  return value;
}

void write_record_csv(std::ostream& os, const TransportRecord& record) {
  if (record.arrival.size() != record.avg_level.size()) throw_invalid("record columns differ in length");
  os << "step,arrival,avg_level\n";
  for (std::size_t t = 0; t < record.arrival.size(); ++t)
    os << t << ',' << format_double(record.arrival[t]) << ',' << format_double(record.avg_level[t]) << '\n';
}

TransportRecord read_record_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::kParse, "record CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "step,arrival,avg_level") throw Error(ErrorKind::kParse, "unexpected header '" + line + "'");
  TransportRecord record;
  std::size_t expected_step = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string step, arrival, avg;
    if (!std::getline(row, step, ',') || !std::getline(row, arrival, ',') || !std::getline(row, avg))
      throw Error(ErrorKind::kParse, "malformed row '" + line + "'");
    if (step != std::to_string(expected_step))
      throw Error(ErrorKind::kParse, "expected step " + std::to_string(expected_step) + ", got '" + step + "'");
    record.arrival.push_back(parse_double(arrival));
    record.avg_level.push_back(parse_double(avg));
    ++expected_step;
  }
  return record;
}

}  // namespace qwalk
