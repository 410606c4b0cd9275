#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/dataset.hpp"
#include "mendeleev/quantum_address.hpp"

namespace atlas {

enum class Format { Ascii, Csv, Json };

struct Annotations {
  bool families = false;
  bool series = false;
  bool status = false;
};

struct RenderSpec {
  int max_row_n = 7;
  Format format = Format::Ascii;
  Annotations annotate;
};

//! Throws std::invalid_argument on an unknown name.
Format parse_format(std::string_view text);
//! Comma-separated subset of {families, series, status}.
Annotations parse_annotations(std::string_view text);

//! One house of the rendered table, in street-major order.
struct Cell {
  mendeleev::AtomicNumber z;
  mendeleev::HouseAddress address;
};

//! Streets 1..max_row_n; each street lists blocks by l, sub-blocks by j, m ascending.
std::vector<Cell> table_cells(int max_row_n);

//! Throws std::invalid_argument when spec.max_row_n < 1.
std::string render_table(const RenderSpec& spec, const ElementDataset& ds);

}  // namespace atlas
