#include "mendeleev/chemistry.hpp"

#include <algorithm>

#include "mendeleev/ladders.hpp"

namespace mendeleev {

namespace {

struct NamedColumn {
  FamilyLabel label;
  Column column;
};

constexpr NamedColumn kNamedColumns[] = {
    {FamilyLabel::AlkaliMetal, {0, 1, -1}}, {FamilyLabel::AlkalineEarth, {0, 1, 1}},
    {FamilyLabel::Chalcogen, {1, 3, -1}},   {FamilyLabel::Halogen, {1, 3, 1}},
    {FamilyLabel::NobleGas, {1, 3, 3}},
};

}  // namespace

std::string_view to_string(FamilyLabel label) {
  switch (label) {
    case FamilyLabel::AlkaliMetal: return "alkali-metal";
    case FamilyLabel::AlkalineEarth: return "alkaline-earth";
    case FamilyLabel::Chalcogen: return "chalcogen";
    case FamilyLabel::Halogen: return "halogen";
    case FamilyLabel::NobleGas: return "noble-gas";
    case FamilyLabel::OtherColumn: return "other";
  }
  return "?";
}

std::optional<Column> column_of(FamilyLabel label) {
  for (const auto& named : kNamedColumns) {
    if (named.label == label) return named.column;
  }
  return std::nullopt;
}

Family family_of(Column column) {
  for (const auto& named : kNamedColumns) {
    if (named.column == column) return {column, named.label};
  }
  return {column, FamilyLabel::OtherColumn};
}

Family classify_family(AtomicNumber z) { return family_of(Column::of(address_from_z(z))); }

std::vector<AtomicNumber> family_members(Column column, int count) {
  std::vector<AtomicNumber> members;
  if (count <= 0) return members;
  HouseAddress house = column.top();
  members.push_back(z_from_address(house));
  while (static_cast<int>(members.size()) < count) {
    house = step_so21(house, +1).value();
    members.push_back(z_from_address(house));
  }
  return members;
}

std::vector<AtomicNumber> noble_gas_closures(int max_n) {
  if (max_n < 2) return {};
  return family_members(*column_of(FamilyLabel::NobleGas), max_n - 1);
}

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Transition: return "transition";
    case SeriesKind::InnerTransition: return "inner-transition";
    case SeriesKind::NewPeriod121to138: return "new-period";
    case SeriesKind::None: return "none";
  }
  return "?";
}

std::string_view to_string(SubBlock sub_block) {
  return sub_block == SubBlock::Light ? "light" : "heavy";
}

SeriesMembership series_membership(AtomicNumber z) {
  const HouseAddress addr = address_from_z(z);
  const int n = addr.n();
  const int l = addr.l();

  SeriesMembership out;
  if (l == 2 && n >= 3 && n <= 6) {
    out.kind = SeriesKind::Transition;
  } else if (l == 3 && n >= 4 && n <= 6) {
    out.kind = SeriesKind::InnerTransition;
  } else if (l == 4 && n == 5) {
    out.kind = SeriesKind::NewPeriod121to138;
  } else {
    return out;
  }
  out.generation = n;
  out.z_range = block_z_range(addr.shell());
  out.sub_block = addr.in_lower_subblock() ? SubBlock::Light : SubBlock::Heavy;
  return out;
}

std::string_view series_name(const SeriesMembership& membership) {
  switch (membership.kind) {
    case SeriesKind::Transition:
      switch (membership.generation) {
        case 3: return "iron group";
        case 4: return "palladium group";
        case 5: return "platinum group";
        default: return "fourth transition series";
      }
    case SeriesKind::InnerTransition:
      switch (membership.generation) {
        case 4: return "lanthanides";
        case 5: return "actinides";
        default: return "superactinides";
      }
    case SeriesKind::NewPeriod121to138: return "new period without known homologues";
    case SeriesKind::None: break;
  }
  return "";
}

std::optional<SubBlock> rare_earth_subblock(AtomicNumber z) {
  const HouseAddress addr = address_from_z(z);
  if (addr.l() != 3) return std::nullopt;
  return addr.in_lower_subblock() ? SubBlock::Light : SubBlock::Heavy;
}

std::string Configuration::str() const {
  std::string out;
  for (const auto& occ : occupied) {
    if (!out.empty()) out += ' ';
    out += occ.shell.label() + std::to_string(occ.electrons);
  }
  return out;
}

std::string Configuration::str_with_core(AtomicNumber core_z, std::string_view core_label) const {
  std::string out = "[" + std::string(core_label) + "]";
  AtomicNumber skipped = 0;
  for (const auto& occ : occupied) {
    if (skipped < core_z) {
      skipped += occ.electrons;
      continue;
    }
    out += ' ' + occ.shell.label() + std::to_string(occ.electrons);
  }
  if (skipped != core_z) {
    throw std::invalid_argument("core of " + std::to_string(core_z) +
                                " electrons does not end on a shell boundary");
  }
  return out;
}

Configuration ground_state_configuration(AtomicNumber z) {
  if (z < 1) throw std::domain_error("atomic number must be >= 1, got " + std::to_string(z));
  Configuration cfg;
  AtomicNumber remaining = z;
  for (ShellAddress shell(1, 0); remaining > 0; shell = next_shell(shell)) {
    const int placed = static_cast<int>(std::min<AtomicNumber>(remaining, shell_capacity(shell)));
    cfg.occupied.push_back({shell, placed});
    remaining -= placed;
  }
  cfg.total = z;
  return cfg;
}

std::optional<AtomicNumber> noble_gas_core(AtomicNumber z) {
  std::optional<AtomicNumber> core;
  HouseAddress closure = column_of(FamilyLabel::NobleGas)->top();
  for (AtomicNumber c = z_from_address(closure); c < z; c = z_from_address(closure)) {
    core = c;
    closure = step_so21(closure, +1).value();
  }
  return core;
}

std::string_view to_string(LabellingError::Kind kind) {
  return kind == LabellingError::Kind::OddDeficit ? "OddDeficit" : "NegativeDeficit";
}

LabellingCount labelling_count(int order_r, int rank_l) {
  if (order_r < 1 || rank_l < 1) {
    throw std::invalid_argument("order and rank must be positive");
  }
  const int deficit = order_r - 3 * rank_l;
  if (deficit < 0) {
    throw LabellingError(LabellingError::Kind::NegativeDeficit,
                         "NegativeDeficit: r - 3l = " + std::to_string(deficit) + " < 0");
  }
  if (deficit % 2 != 0) {
    throw LabellingError(LabellingError::Kind::OddDeficit,
                         "OddDeficit: r - 3l = " + std::to_string(deficit) + " is odd");
  }
  const int extra = deficit / 2;
  return {order_r, rank_l, rank_l, rank_l, extra, 2 * rank_l + extra};
}

int composed_complete_set(std::span<const LabellingCount> factors) {
  int total = 0;
  for (const auto& f : factors) total += f.complete_set;
  return total;
}

}  // namespace mendeleev
