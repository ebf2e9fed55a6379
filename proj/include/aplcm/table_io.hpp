#pragma once

#include <aplcm/error.hpp>
#include <aplcm/identities.hpp>
#include <aplcm/natural.hpp>

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

namespace aplcm {

// Flat text format:
//   aplcm-table v1 a=<dec> b=<dec> k=<dec> period=<dec>
//   <g-value for residue 0>
//   ...
//   <g-value for residue period-1>
// Every line ends in '\n'.

inline void write_period_table(std::ostream& os, const PeriodTable& t) {
  os << "aplcm-table v1 a=" << t.progression().a() << " b=" << t.progression().b() << " k=" << t.k()
     << " period=" << t.period() << '\n';
  for (const auto& v : t.values()) os << v << '\n';
}

namespace detail {

// Decimal without leading zeros, so that reading then writing is byte-identical.
inline Natural parse_canonical(const std::string& s) {
  if (s.size() > 1 && s[0] == '0') throw FormatError("period table: non-canonical decimal '" + s + "'");
  return Natural::parse(s);
}

}  // namespace detail

inline PeriodTable read_period_table(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("period table: missing header");
  if (is.eof()) throw FormatError("period table: header line not newline-terminated");
  static const std::regex header(R"(aplcm-table v1 a=(\d+) b=(\d+) k=(\d+) period=(\d+))");
  std::smatch m;
  if (!std::regex_match(line, m, header)) throw FormatError("period table: bad header '" + line + "'");
  auto field = [&](int i) {
    const Natural v = detail::parse_canonical(m[i].str());
    if (!v.fits_u64()) throw FormatError("period table: header field out of range");
    return v.to_u64();
  };
  const std::uint64_t a = field(1), b = field(2), k = field(3), period = field(4);
  if (a == 0) throw FormatError("period table: a must be positive");
  if (period == 0) throw FormatError("period table: period must be positive");

  std::vector<Natural> values;
  while (std::getline(is, line)) {
    if (values.size() == period) throw FormatError("period table: more values than the declared period");
    if (is.eof()) throw FormatError("period table: last line not newline-terminated");
    values.push_back(detail::parse_canonical(line));
  }
  if (values.size() != period) {
    throw FormatError("period table: expected " + std::to_string(period) + " values, found " +
                      std::to_string(values.size()));
  }
  return {Progression(a, b), k, std::move(values)};
}

inline void save_period_table(const std::string& path, const PeriodTable& t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FormatError("cannot open '" + path + "' for writing");
  write_period_table(os, t);
  if (!os) throw FormatError("write to '" + path + "' failed");
}

inline PeriodTable load_period_table(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open '" + path + "'");
  return read_period_table(is);
}

}  // namespace aplcm
