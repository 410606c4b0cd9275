#include "atlas/render.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "mendeleev/chemistry.hpp"

namespace atlas {

namespace {

using mendeleev::HouseAddress;

std::string_view family_tag(mendeleev::FamilyLabel label) {
  switch (label) {
    case mendeleev::FamilyLabel::AlkaliMetal: return "AM";
    case mendeleev::FamilyLabel::AlkalineEarth: return "AE";
    case mendeleev::FamilyLabel::Chalcogen: return "CH";
    case mendeleev::FamilyLabel::Halogen: return "HA";
    case mendeleev::FamilyLabel::NobleGas: return "NG";
    case mendeleev::FamilyLabel::OtherColumn: return "";
  }
  return "";
}

std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Symbol shown in the ascii table; status markers follow the chart convention
// of "X?" for observed-but-unnamed and "no" for unobserved houses.
std::string ascii_label(const Cell& cell, const RenderSpec& spec, const ElementDataset& ds) {
  std::string label;
  if (const ElementName* entry = ds.find(cell.z)) {
    label = entry->symbol;
  } else if (spec.annotate.status) {
    label = status_of(cell.z, ds) == mendeleev::Occupancy::ObservedUnnamed ? "X?" : "no";
  }
  if (spec.annotate.families) {
    const auto tag = family_tag(mendeleev::family_of(mendeleev::Column::of(cell.address)).label);
    if (!tag.empty()) label += "(" + std::string(tag) + ")";
  }
  return label;
}

std::string render_ascii(const RenderSpec& spec, const ElementDataset& ds) {
  constexpr std::size_t kCellWidth = 12;
  std::ostringstream out;
  const auto cells = table_cells(spec.max_row_n);
  std::size_t i = 0;
  while (i < cells.size()) {
    const int n = cells[i].address.n();
    out << "street n=" << n << "  (" << mendeleev::row_capacity(n) << " houses)\n";
    while (i < cells.size() && cells[i].address.n() == n) {
      const HouseAddress& head = cells[i].address;
      const bool block_start = head.l() == 0 || head.in_lower_subblock();
      std::string prefix = block_start ? head.shell().label() : "";
      prefix.resize(6, ' ');
      out << "  " << prefix << "j=" << head.j().str();
      out << std::string(head.j().str().size() < 4 ? 4 - head.j().str().size() : 0, ' ') << " |";

      std::string row;
      while (i < cells.size() && cells[i].address.n() == n && cells[i].address.l() == head.l() &&
             cells[i].address.two_j() == head.two_j()) {
        std::string text = std::to_string(cells[i].z);
        text.insert(0, text.size() < 4 ? 4 - text.size() : 0, ' ');
        text += " " + ascii_label(cells[i], spec, ds);
        if (text.size() < kCellWidth) text.resize(kCellWidth, ' ');
        row += " " + text;
        ++i;
      }
      while (!row.empty() && row.back() == ' ') row.pop_back();
      out << row;
      if (spec.annotate.series && block_start) {
        const auto series = mendeleev::series_membership(mendeleev::z_from_address(head));
        if (series.kind != mendeleev::SeriesKind::None) {
          out << "   [" << mendeleev::to_string(series.kind) << ": " << mendeleev::series_name(series)
              << "]";
        }
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string render_csv(const RenderSpec& spec, const ElementDataset& ds) {
  std::ostringstream out;
  out << "z,n,l,two_j,two_m,symbol";
  if (spec.annotate.families) out << ",family";
  if (spec.annotate.series) out << ",series";
  if (spec.annotate.status) out << ",status";
  out << '\n';
  for (const Cell& cell : table_cells(spec.max_row_n)) {
    const HouseAddress& a = cell.address;
    out << cell.z << ',' << a.n() << ',' << a.l() << ',' << a.two_j() << ',' << a.two_m() << ',';
    if (const ElementName* entry = ds.find(cell.z)) out << csv_escape(entry->symbol);
    if (spec.annotate.families) {
      out << ',' << mendeleev::to_string(mendeleev::family_of(mendeleev::Column::of(a)).label);
    }
    if (spec.annotate.series) {
      const auto series = mendeleev::series_membership(cell.z);
      out << ',';
      if (series.kind != mendeleev::SeriesKind::None) out << mendeleev::to_string(series.kind);
    }
    if (spec.annotate.status) out << ',' << to_string(status_of(cell.z, ds));
    out << '\n';
  }
  return out.str();
}

std::string render_json(const RenderSpec& spec, const ElementDataset& ds) {
  std::string out = "[";
  bool first = true;
  for (const Cell& cell : table_cells(spec.max_row_n)) {
    const HouseAddress& a = cell.address;
    nlohmann::ordered_json record;
    record["z"] = cell.z;
    record["n"] = a.n();
    record["l"] = a.l();
    record["two_j"] = a.two_j();
    record["two_m"] = a.two_m();
    if (const ElementName* entry = ds.find(cell.z)) record["symbol"] = entry->symbol;
    if (spec.annotate.families) {
      record["family"] = mendeleev::to_string(mendeleev::family_of(mendeleev::Column::of(a)).label);
    }
    if (spec.annotate.series) {
      const auto series = mendeleev::series_membership(cell.z);
      if (series.kind == mendeleev::SeriesKind::None) {
        record["series"] = nullptr;
      } else {
        record["series"] = mendeleev::to_string(series.kind);
      }
    }
    if (spec.annotate.status) record["status"] = to_string(status_of(cell.z, ds));
    out += first ? "\n  " : ",\n  ";
    out += record.dump();
    first = false;
  }
  out += first ? "]\n" : "\n]\n";
  return out;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "ascii") return Format::Ascii;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (ascii, csv, json)");
}

Annotations parse_annotations(std::string_view text) {
  Annotations a;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (item == "families") {
      a.families = true;
    } else if (item == "series") {
      a.series = true;
    } else if (item == "status") {
      a.status = true;
    } else if (!item.empty()) {
      throw std::invalid_argument("unknown annotation '" + std::string(item) +
                                  "' (families, series, status)");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return a;
}

std::vector<Cell> table_cells(int max_row_n) {
  std::vector<Cell> cells;
  for (int n = 1; n <= max_row_n; ++n) {
    for (int l = 0; l < n; ++l) {
      for (const HouseAddress& house : mendeleev::houses_in_shell(mendeleev::ShellAddress(n, l))) {
        cells.push_back({mendeleev::z_from_address(house), house});
      }
    }
  }
  return cells;
}

std::string render_table(const RenderSpec& spec, const ElementDataset& ds) {
  if (spec.max_row_n < 1) {
    throw std::invalid_argument("rows must be >= 1, got " + std::to_string(spec.max_row_n));
  }
  switch (spec.format) {
    case Format::Ascii: return render_ascii(spec, ds);
    case Format::Csv: return render_csv(spec, ds);
    case Format::Json: return render_json(spec, ds);
  }
  return {};
}

}  // namespace atlas
