#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mendeleev/quantum_address.hpp"

namespace mendeleev {

//! An avenue of the table: every house sharing (l, j, m).
struct Column {
  int l;
  int two_j;
  int two_m;

  static Column of(const HouseAddress& addr) { return {addr.l(), addr.two_j(), addr.two_m()}; }
  //! First house of the avenue (lowest street, n = l + 1).
  HouseAddress top() const { return HouseAddress(l + 1, l, two_j, two_m); }

  friend bool operator==(const Column&, const Column&) = default;
};

enum class FamilyLabel { AlkaliMetal, AlkalineEarth, Chalcogen, Halogen, NobleGas, OtherColumn };

struct Family {
  Column column;
  FamilyLabel label;

  friend bool operator==(const Family&, const Family&) = default;
};

std::string_view to_string(FamilyLabel label);

//! Column of a named family; nullopt for OtherColumn.
std::optional<Column> column_of(FamilyLabel label);
Family family_of(Column column);
Family classify_family(AtomicNumber z);

//! First `count` members of a column, walking down its avenue.
std::vector<AtomicNumber> family_members(Column column, int count);

//! Atomic numbers closing the p-shells of streets 2..max_n (the noble gases).
std::vector<AtomicNumber> noble_gas_closures(int max_n);

enum class SeriesKind { Transition, InnerTransition, NewPeriod121to138, None };
enum class SubBlock { Light, Heavy };

std::string_view to_string(SeriesKind kind);
std::string_view to_string(SubBlock sub_block);

struct SeriesMembership {
  SeriesKind kind = SeriesKind::None;
  int generation = 0;  //!< principal number n of the series block
  ZRange z_range{0, 0};
  std::optional<SubBlock> sub_block;
};

//! Transition series are the d blocks with n = 3..6, inner transition series
//! the f blocks with n = 4..6, and the new period is the 5g block (121..138).
SeriesMembership series_membership(AtomicNumber z);

//! "iron group", "lanthanides", ...; empty for SeriesKind::None.
std::string_view series_name(const SeriesMembership& membership);

//! Light (j = 5/2) or Heavy (j = 7/2) for any f-block element.
std::optional<SubBlock> rare_earth_subblock(AtomicNumber z);

struct ShellOccupancy {
  ShellAddress shell;
  int electrons;

  friend bool operator==(const ShellOccupancy&, const ShellOccupancy&) = default;
};

struct Configuration {
  std::vector<ShellOccupancy> occupied;
  AtomicNumber total = 0;

  //! "1s2 2s2 2p6"
  std::string str() const;
  //! Drops the shells filled by `core_z` electrons and writes "[label] ...".
  std::string str_with_core(AtomicNumber core_z, std::string_view core_label) const;
};

//! Idealized Madelung filling: shells taken in order, each up to capacity.
Configuration ground_state_configuration(AtomicNumber z);

//! Largest noble-gas closure strictly below z.
std::optional<AtomicNumber> noble_gas_core(AtomicNumber z);

class LabellingError : public std::domain_error {
 public:
  enum class Kind { OddDeficit, NegativeDeficit };

  LabellingError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(LabellingError::Kind kind);

//! Commuting-operator count for a semi-simple Lie group of order r and rank l:
//! l Cartan generators, l Casimir operators and (r - 3l)/2 extra labels.
struct LabellingCount {
  int order_r;
  int rank_l;
  int cartan;
  int casimirs;
  int racah_extra;
  int complete_set;
};

LabellingCount labelling_count(int order_r, int rank_l);

//! Size of the complete commuting set of a direct product.
int composed_complete_set(std::span<const LabellingCount> factors);

inline constexpr int kSo42Order = 15;
inline constexpr int kSo42Rank = 3;
inline constexpr int kSu2Order = 3;
inline constexpr int kSu2Rank = 1;

}  // namespace mendeleev
