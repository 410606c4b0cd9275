#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mendeleev/quantum_address.hpp"

namespace atlas {

using mendeleev::AtomicNumber;
using mendeleev::Occupancy;

struct ElementName {
  std::string symbol;
  std::string name;
};

class DatasetError : public std::runtime_error {
 public:
  enum class Kind { ParseError, DuplicateZ, DuplicateSymbol, BadBounds, Io };

  DatasetError(Kind kind, int line, const std::string& detail);

  Kind kind() const { return kind_; }
  //! 1-based line of the offending record; 0 when not tied to a line.
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

std::string_view to_string(DatasetError::Kind kind);

struct ElementDataset {
  std::map<AtomicNumber, ElementName> entries;
  AtomicNumber named_max = 110;
  AtomicNumber observed_max = 116;

  const ElementName* find(AtomicNumber z) const;
  //! Reverse lookup by symbol, case-sensitive.
  std::optional<AtomicNumber> find_symbol(std::string_view symbol) const;
};

//! Parses `z,symbol,name` lines. Blank lines and `#` comments are skipped and a
//! leading `z,symbol,name` header is optional.
ElementDataset parse_dataset(std::istream& in);
ElementDataset load_dataset(const std::filesystem::path& path);

//! Symbols and names for Z = 1..110, bounds 110 / 116.
const ElementDataset& bundled_dataset();

//! Throws DatasetError{BadBounds} unless 0 <= named_max <= observed_max.
void set_bounds(ElementDataset& ds, AtomicNumber named_max, AtomicNumber observed_max);

Occupancy status_of(AtomicNumber z, const ElementDataset& ds);
std::string_view to_string(Occupancy status);

mendeleev::ElementRecord element_record(AtomicNumber z, const ElementDataset& ds);

}  // namespace atlas
