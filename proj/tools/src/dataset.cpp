#include "atlas/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "bundled_elements.hpp"

namespace atlas {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool is_header(const std::vector<std::string_view>& fields) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
  };
  return fields.size() == 3 && lower(fields[0]) == "z" && lower(fields[1]) == "symbol" &&
         lower(fields[2]) == "name";
}

}  // namespace

DatasetError::DatasetError(Kind kind, int line, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) +
                         (line > 0 ? " at line " + std::to_string(line) : std::string()) + ": " +
                         detail),
      kind_(kind),
      line_(line) {}

std::string_view to_string(DatasetError::Kind kind) {
  switch (kind) {
    case DatasetError::Kind::ParseError: return "ParseError";
    case DatasetError::Kind::DuplicateZ: return "DuplicateZ";
    case DatasetError::Kind::DuplicateSymbol: return "DuplicateSymbol";
    case DatasetError::Kind::BadBounds: return "BadBounds";
    case DatasetError::Kind::Io: return "IoError";
  }
  return "?";
}

const ElementName* ElementDataset::find(AtomicNumber z) const {
  const auto it = entries.find(z);
  return it == entries.end() ? nullptr : &it->second;
}

std::optional<AtomicNumber> ElementDataset::find_symbol(std::string_view symbol) const {
  for (const auto& [z, entry] : entries) {
    if (entry.symbol == symbol) return z;
  }
  return std::nullopt;
}

ElementDataset parse_dataset(std::istream& in) {
  ElementDataset ds;
  std::unordered_set<std::string> symbols;
  std::string raw;
  int line_no = 0;
  bool seen_record = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (!seen_record && is_header(fields)) {
      seen_record = true;
      continue;
    }
    seen_record = true;
    if (fields.size() != 3) {
      throw DatasetError(DatasetError::Kind::ParseError, line_no,
                         "expected 3 fields z,symbol,name, got " + std::to_string(fields.size()));
    }

    AtomicNumber z = 0;
    const auto z_text = fields[0];
    const auto [ptr, ec] = std::from_chars(z_text.data(), z_text.data() + z_text.size(), z);
    if (ec != std::errc() || ptr != z_text.data() + z_text.size() || z < 1) {
      throw DatasetError(DatasetError::Kind::ParseError, line_no,
                         "atomic number must be a positive integer, got '" + std::string(z_text) + "'");
    }
    if (fields[1].empty()) {
      throw DatasetError(DatasetError::Kind::ParseError, line_no, "empty symbol");
    }
    if (ds.entries.count(z) != 0) {
      throw DatasetError(DatasetError::Kind::DuplicateZ, line_no, "Z=" + std::to_string(z));
    }
    std::string symbol(fields[1]);
    if (!symbols.insert(symbol).second) {
      throw DatasetError(DatasetError::Kind::DuplicateSymbol, line_no, "symbol " + symbol);
    }
    ds.entries.emplace(z, ElementName{std::move(symbol), std::string(fields[2])});
  }
  return ds;
}

ElementDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DatasetError(DatasetError::Kind::Io, 0, "cannot open " + path.string());
  }
  return parse_dataset(in);
}

const ElementDataset& bundled_dataset() {
  static const ElementDataset ds = [] {
    std::istringstream in{std::string(kBundledElementsCsv)};
    return parse_dataset(in);
  }();
  return ds;
}

void set_bounds(ElementDataset& ds, AtomicNumber named_max, AtomicNumber observed_max) {
  if (named_max < 0 || named_max > observed_max) {
    throw DatasetError(DatasetError::Kind::BadBounds, 0,
                       "need 0 <= named_max <= observed_max, got " + std::to_string(named_max) +
                           " and " + std::to_string(observed_max));
  }
  ds.named_max = named_max;
  ds.observed_max = observed_max;
}

Occupancy status_of(AtomicNumber z, const ElementDataset& ds) {
  if (z <= ds.named_max) return Occupancy::Named;
  if (z <= ds.observed_max) return Occupancy::ObservedUnnamed;
  return Occupancy::Unobserved;
}

std::string_view to_string(Occupancy status) {
  switch (status) {
    case Occupancy::Named: return "named";
    case Occupancy::ObservedUnnamed: return "observed-unnamed";
    case Occupancy::Unobserved: return "unobserved";
  }
  return "?";
}

mendeleev::ElementRecord element_record(AtomicNumber z, const ElementDataset& ds) {
  mendeleev::ElementRecord record{z, mendeleev::address_from_z(z), std::nullopt, std::nullopt,
                                  status_of(z, ds)};
  if (const ElementName* entry = ds.find(z)) {
    record.symbol = entry->symbol;
    if (!entry->name.empty()) record.name = entry->name;
  }
  return record;
}

}  // namespace atlas
