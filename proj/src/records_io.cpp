#include "dicke/records_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace dicke::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double x = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw DomainError("malformed number '" + text + "'");
  }
  return x;
}

void write_csv(std::ostream& os, const std::vector<sweep::GridRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << format_double(r.lambda) << ',' << format_double(r.eta) << ','
       << format_double(r.energy) << ',' << r.phase_index << ',' << format_double(r.cw) << ','
       << format_double(r.entropy_bits) << ',' << sweep::flags_to_string(r.flags) << '\n';
  }
}

std::vector<sweep::GridRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw DomainError("CSV header does not match '" + std::string(kCsvHeader) + "'");
  }
  std::vector<sweep::GridRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 7) throw DomainError("CSV row needs 7 fields: " + line);
    sweep::GridRecord r;
    r.lambda = parse_double(fields[0]);
    r.eta = parse_double(fields[1]);
    r.energy = parse_double(fields[2]);
    r.phase_index = std::stoi(fields[3]);
    r.cw = parse_double(fields[4]);
    r.entropy_bits = parse_double(fields[5]);
    r.flags = sweep::flags_from_string(fields[6]);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

nlohmann::json number_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

double number_from(const nlohmann::json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

}  // namespace

nlohmann::json to_json(const std::vector<sweep::GridRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"lambda", number_or_null(r.lambda)},
                   {"eta", number_or_null(r.eta)},
                   {"energy", number_or_null(r.energy)},
                   {"phase_index", r.phase_index},
                   {"cw", number_or_null(r.cw)},
                   {"entropy_bits", number_or_null(r.entropy_bits)},
                   {"flags", sweep::flags_to_string(r.flags)}});
  }
  return arr;
}

std::vector<sweep::GridRecord> from_json(const nlohmann::json& j) {
  std::vector<sweep::GridRecord> out;
  for (const auto& e : j) {
    sweep::GridRecord r;
    r.lambda = number_from(e.at("lambda"));
    r.eta = number_from(e.at("eta"));
    r.energy = number_from(e.at("energy"));
    r.phase_index = e.at("phase_index").get<int>();
    r.cw = number_from(e.at("cw"));
    r.entropy_bits = number_from(e.at("entropy_bits"));
    r.flags = sweep::flags_from_string(e.at("flags").get<std::string>());
    out.push_back(std::move(r));
  }
  return out;
}

std::string dump_json(const nlohmann::json& j) {
  // nlohmann already emits the shortest round-trip representation of doubles.
  return j.dump(2) + "\n";
}

nlohmann::json spec_to_json(const sweep::SweepSpec& spec) {
  auto axis = [](const sweep::Axis& a) {
    return nlohmann::json{{"min", a.min}, {"max", a.max}, {"count", a.count}};
  };
  return {{"solver", sweep::to_string(spec.solver)},
          {"omega_f", spec.omega_f},
          {"omega", spec.omega},
          {"delta", spec.omega - spec.omega_f},
          {"n_atoms", spec.n_atoms},
          {"lambda", axis(spec.lambda)},
          {"eta", axis(spec.eta)},
          {"rwa_n_max", spec.search.resolved_n_max(spec.n_atoms)},
          {"full",
           {{"tolerance", spec.full.tolerance},
            {"tail_threshold", spec.full.tail_threshold},
            {"max_cutoff", spec.full.max_cutoff},
            {"parity_blocks", spec.full.parity_blocks},
            {"dense_max_dim", spec.full.dense_max_dim}}},
          {"threads", sweep::resolve_threads(spec.threads)}};
}

}  // namespace dicke::io
