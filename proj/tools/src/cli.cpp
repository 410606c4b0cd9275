#include "atlas/cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "atlas/dataset.hpp"
#include "atlas/render.hpp"
#include "mendeleev/chemistry.hpp"

namespace atlas {

namespace {

using mendeleev::AtomicNumber;
using mendeleev::HouseAddress;
using mendeleev::LadderMove;

constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    values.push_back(parse_int(text.substr(start, comma == text.npos ? text.npos : comma - start)));
    if (comma == text.npos) break;
    start = comma + 1;
  }
  return values;
}

std::string describe_column(const mendeleev::Column& c) {
  return "l=" + std::to_string(c.l) + ", j=" + mendeleev::HalfInt::from_twice(c.two_j).str() +
         ", m=" + mendeleev::HalfInt::from_twice(c.two_m).str();
}

std::string house_label(AtomicNumber z, const ElementDataset& ds) {
  if (const ElementName* entry = ds.find(z)) return entry->symbol;
  return status_of(z, ds) == mendeleev::Occupancy::ObservedUnnamed ? "X?" : "no";
}

std::string configuration_text(AtomicNumber z, bool core, const ElementDataset& ds) {
  const auto cfg = mendeleev::ground_state_configuration(z);
  if (core) {
    if (const auto core_z = mendeleev::noble_gas_core(z)) {
      const ElementName* entry = ds.find(*core_z);
      return cfg.str_with_core(*core_z, entry ? entry->symbol : std::to_string(*core_z));
    }
  }
  return cfg.str();
}

void report(std::ostream& out, AtomicNumber z, const ElementDataset& ds) {
  const auto record = element_record(z, ds);
  const HouseAddress& a = record.address;
  const auto range = mendeleev::block_z_range(a.shell());

  out << "Z        " << z << '\n';
  out << "element  ";
  if (record.symbol) {
    out << *record.symbol;
    if (record.name) out << " (" << *record.name << ')';
  } else {
    out << house_label(z, ds);
  }
  out << '\n';
  out << "status   " << to_string(record.status) << '\n';
  out << "address  n=" << a.n() << " l=" << a.l() << " j=" << a.j().str() << " m=" << a.m().str()
      << "  (2j=" << a.two_j() << " 2m=" << a.two_m() << ")\n";
  out << "block    " << a.shell().label() << "  Z " << range.first << ".." << range.last;
  if (a.l() > 0) out << ", sub-block j=" << a.j().str();
  out << '\n';

  const auto family = mendeleev::family_of(mendeleev::Column::of(a));
  out << "family   ";
  if (family.label == mendeleev::FamilyLabel::OtherColumn) {
    out << "column";
  } else {
    out << mendeleev::to_string(family.label);
  }
  out << " (" << describe_column(family.column) << ")\n";

  const auto series = mendeleev::series_membership(z);
  out << "series   " << mendeleev::to_string(series.kind);
  if (series.kind != mendeleev::SeriesKind::None) {
    out << " (" << mendeleev::series_name(series) << "), Z " << series.z_range.first << ".."
        << series.z_range.last;
  }
  out << '\n';
  if (const auto sub = mendeleev::rare_earth_subblock(z)) {
    out << "f-sub    " << mendeleev::to_string(*sub);
    if (series.kind == mendeleev::SeriesKind::InnerTransition && series.generation == 4) {
      out << (*sub == mendeleev::SubBlock::Light ? " (ceric)" : " (yttric)");
    }
    out << '\n';
  }
  out << "config   " << configuration_text(z, true, ds) << '\n';
}

std::optional<mendeleev::Column> parse_family(std::string_view text) {
  using mendeleev::FamilyLabel;
  struct Alias {
    std::string_view name;
    FamilyLabel label;
  };
  static constexpr Alias aliases[] = {
      {"alkali", FamilyLabel::AlkaliMetal},       {"alkali-metal", FamilyLabel::AlkaliMetal},
      {"alkaline-earth", FamilyLabel::AlkalineEarth}, {"chalcogen", FamilyLabel::Chalcogen},
      {"halogen", FamilyLabel::Halogen},          {"noble", FamilyLabel::NobleGas},
      {"noble-gas", FamilyLabel::NobleGas},
  };
  for (const auto& alias : aliases) {
    if (alias.name == text) return mendeleev::column_of(alias.label);
  }
  const auto values = parse_int_list(text);
  if (values.size() != 3) return std::nullopt;
  const mendeleev::Column column{values[0], values[1], values[2]};
  column.top();  // validates (l, 2j, 2m)
  return column;
}

}  // namespace

HouseAddress parse_house(std::string_view text) {
  const auto values = parse_int_list(text);
  if (values.size() == 1) {
    if (values[0] < 1) throw std::invalid_argument("atomic number must be >= 1");
    return mendeleev::address_from_z(values[0]);
  }
  if (values.size() != 4) {
    throw std::invalid_argument("expected Z or n,l,2j,2m, got '" + std::string(text) + "'");
  }
  return HouseAddress(values[0], values[1], values[2], values[3]);
}

LadderMove parse_move(std::string_view text) {
  if (text == "m+") return LadderMove::m_up();
  if (text == "m-") return LadderMove::m_down();
  if (text == "j") return LadderMove::j_toggle();
  if (text == "l+") return LadderMove::so4(+1);
  if (text == "l-") return LadderMove::so4(-1);
  if (text == "n+") return LadderMove::so21(+1);
  if (text == "n-") return LadderMove::so21(-1);
  if (text.starts_with("taxi:")) return LadderMove::taxi(parse_house(text.substr(5)));
  throw std::invalid_argument("unknown move '" + std::string(text) +
                              "' (m+ m- j l+ l- n+ n- taxi:<house>)");
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Navigate and verify the Madelung / SO(4,2)xSU(2) periodic table", "mendeleev"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string dataset_path;
  AtomicNumber named_max = 110;
  AtomicNumber observed_max = 116;
  app.add_option("--dataset", dataset_path, "Element names file (z,symbol,name lines)");
  app.add_option("--named-max", named_max, "Highest named atomic number")->capture_default_str();
  app.add_option("--observed-max", observed_max, "Highest observed atomic number")
      ->capture_default_str();

  int rows = 7;
  std::string format = "ascii";
  std::string annotate;
  auto* table = app.add_subcommand("table", "Render the table street by street");
  table->add_option("--rows", rows, "Highest street n to render")->capture_default_str();
  table->add_option("--format", format, "ascii, csv or json")->capture_default_str();
  table->add_option("--annotate", annotate, "Comma list of families,series,status");

  AtomicNumber element_z = 0;
  auto* element = app.add_subcommand("element", "Report the house of atomic number Z");
  element->add_option("Z", element_z)->required()->check(CLI::PositiveNumber);

  std::vector<int> quartet;
  auto* address = app.add_subcommand("address", "Report the inhabitant of house n l 2j 2m");
  address->add_option("quartet", quartet, "n l 2j 2m")->required()->expected(4);

  std::string family_spec;
  int count = 7;
  auto* family = app.add_subcommand("family", "List a column: alkali, alkaline-earth, chalcogen, "
                                              "halogen, noble-gas, or l,2j,2m");
  family->add_option("family", family_spec)->required();
  family->add_option("--count", count, "Number of members")->capture_default_str()->check(
      CLI::PositiveNumber);

  std::string walk_start;
  std::vector<std::string> walk_moves;
  auto* walk = app.add_subcommand("walk", "Replay ladder moves from a house (Z or n,l,2j,2m)");
  walk->add_option("start", walk_start)->required();
  walk->add_option("moves", walk_moves, "m+ m- j l+ l- n+ n- taxi:<house>");

  int max_sum = 12;
  auto* verify = app.add_subcommand("verify", "Check the closed-form Z against brute-force filling");
  verify->add_option("--max-sum", max_sum, "Largest n+l checked")->capture_default_str()->check(
      CLI::PositiveNumber);

  AtomicNumber config_z = 0;
  bool core = false;
  auto* config = app.add_subcommand("config", "Idealized Madelung configuration of Z");
  config->add_option("Z", config_z)->required()->check(CLI::PositiveNumber);
  config->add_flag("--core", core, "Abbreviate with the noble-gas core");

  std::vector<const char*> argv;
  argv.push_back("mendeleev");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    ElementDataset ds = dataset_path.empty() ? bundled_dataset() : load_dataset(dataset_path);
    set_bounds(ds, named_max, observed_max);

    if (*table) {
      RenderSpec spec{rows, parse_format(format), parse_annotations(annotate)};
      out << render_table(spec, ds);
    } else if (*element) {
      report(out, element_z, ds);
    } else if (*address) {
      report(out, mendeleev::z_from_address(HouseAddress(quartet[0], quartet[1], quartet[2], quartet[3])),
             ds);
    } else if (*family) {
      const auto column = parse_family(family_spec);
      if (!column) throw std::invalid_argument("unknown family '" + family_spec + "'");
      const auto label = mendeleev::family_of(*column).label;
      out << (label == mendeleev::FamilyLabel::OtherColumn ? "column"
                                                            : std::string(mendeleev::to_string(label)))
          << " (" << describe_column(*column) << ")\n";
      const auto members = mendeleev::family_members(*column, count);
      std::string zs;
      std::string symbols;
      for (AtomicNumber z : members) {
        zs += (zs.empty() ? "" : ", ") + std::to_string(z);
        symbols += (symbols.empty() ? "" : ", ") + house_label(z, ds);
      }
      out << "Z = " << zs << '\n' << "    " << symbols << '\n';
    } else if (*walk) {
      HouseAddress here = parse_house(walk_start);
      out << "start  " << here.str() << "  Z=" << mendeleev::z_from_address(here) << '\n';
      for (const auto& token : walk_moves) {
        const LadderMove move = parse_move(token);
        if (move.kind() == mendeleev::MoveKind::Taxi) {
          const auto ride = mendeleev::taxi(here, move.target());
          here = ride.destination;
          out << token << "  " << here.str() << "  Z=" << mendeleev::z_from_address(here) << "  via";
          for (const auto& step : ride.route) out << ' ' << step.str();
          out << '\n';
          continue;
        }
        const auto result = mendeleev::apply_move(here, move);
        if (!result) {
          out << token << "  error: " << mendeleev::to_string(result.error()) << '\n';
          err << "walk stopped at " << here.str() << ": " << mendeleev::to_string(result.error())
              << '\n';
          return kExitDomainError;
        }
        here = result.value();
        out << token << "  " << here.str() << "  Z=" << mendeleev::z_from_address(here) << '\n';
      }
    } else if (*verify) {
      std::size_t checked = 0;
      for (const auto& entry : mendeleev::oracle_enumerate(max_sum)) {
        const AtomicNumber formula = mendeleev::z_from_address(entry.address);
        if (formula != entry.z) {
          out << "verify: mismatch at " << entry.address.str() << ": formula Z=" << formula
              << ", enumeration Z=" << entry.z << " (" << checked << " houses agreed before it)\n";
          return kExitDomainError;
        }
        ++checked;
      }
      out << "verify: all " << checked << " houses agree (n+l <= " << max_sum << ")\n";
    } else if (*config) {
      out << configuration_text(config_z, core, ds) << '\n';
    }
  } catch (const mendeleev::InvalidAddress& e) {
    err << "error: InvalidAddress: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const DatasetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }
  return 0;
}

}  // namespace atlas
