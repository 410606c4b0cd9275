#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mendeleev/half_integer.hpp"

namespace mendeleev {

using AtomicNumber = std::int64_t;

class InvalidAddress : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

//! Atomic shell (n, l); also the block [n+l, n] of the Madelung array.
class ShellAddress {
 public:
  //! Throws InvalidAddress unless n >= 1 and 0 <= l <= n-1.
  ShellAddress(int n, int l);
  static std::optional<ShellAddress> try_make(int n, int l);

  int n() const { return n_; }
  int l() const { return l_; }
  int madelung_sum() const { return n_ + l_; }

  //! Spectroscopic label, e.g. "4f".
  std::string label() const;

  friend bool operator==(ShellAddress, ShellAddress) = default;

 private:
  struct Unchecked {};
  ShellAddress(int n, int l, Unchecked) : n_(n), l_(l) {}

  int n_;
  int l_;
};

char orbital_letter(int l);

//! Madelung order: lexicographic on (n+l, n).
std::strong_ordering compare_shells(ShellAddress a, ShellAddress b);

//! Shell following `shell` in Madelung order.
ShellAddress next_shell(ShellAddress shell);

//! First `count` shells in Madelung order.
std::vector<ShellAddress> enumerate_shells(int count);

//! 2(2l+1)
int shell_capacity(ShellAddress shell);

//! Houses in street n: sum of shell capacities for l = 0..n-1, i.e. 2n^2.
std::int64_t row_capacity(int n);

struct ZRange {
  AtomicNumber first;
  AtomicNumber last;
  bool contains(AtomicNumber z) const { return first <= z && z <= last; }
  friend bool operator==(ZRange, ZRange) = default;
};

ZRange block_z_range(ShellAddress shell);

//! One cell (n, l, j, m) of the table. j = l +- 1/2 and m = -j..j, both
//! half-odd-integers held exactly as HalfInt.
class HouseAddress {
 public:
  //! Throws InvalidAddress when the quartet is not a valid cell.
  HouseAddress(int n, int l, int two_j, int two_m);
  static std::optional<HouseAddress> try_make(int n, int l, int two_j, int two_m);

  ShellAddress shell() const { return shell_; }
  int n() const { return shell_.n(); }
  int l() const { return shell_.l(); }
  HalfInt j() const { return j_; }
  HalfInt m() const { return m_; }
  int two_j() const { return j_.twice(); }
  int two_m() const { return m_.twice(); }

  //! True for the j = l - 1/2 sub-block of an l >= 1 block.
  bool in_lower_subblock() const { return l() > 0 && two_j() == 2 * l() - 1; }

  //! "(4,3,5/2,-5/2)"
  std::string str() const;

  friend bool operator==(const HouseAddress&, const HouseAddress&) = default;

 private:
  HouseAddress(ShellAddress shell, HalfInt j, HalfInt m) : shell_(shell), j_(j), m_(m) {}

  ShellAddress shell_;
  HalfInt j_;
  HalfInt m_;
};

//! The alternative labelling (n, l, m_l, m_s) of a cell.
class AltHouseAddress {
 public:
  AltHouseAddress(int n, int l, int m_l, int two_m_s);
  static std::optional<AltHouseAddress> try_make(int n, int l, int m_l, int two_m_s);

  ShellAddress shell() const { return shell_; }
  int m_l() const { return m_l_; }
  int two_m_s() const { return two_m_s_; }

  friend bool operator==(const AltHouseAddress&, const AltHouseAddress&) = default;

 private:
  AltHouseAddress(ShellAddress shell, int m_l, int two_m_s)
      : shell_(shell), m_l_(m_l), two_m_s_(two_m_s) {}

  ShellAddress shell_;
  int m_l_;
  int two_m_s_;
};

enum class Occupancy { Named, ObservedUnnamed, Unobserved };

struct ElementRecord {
  AtomicNumber z;
  HouseAddress address;
  std::optional<std::string> symbol;
  std::optional<std::string> name;
  Occupancy status;
};

//! Houses of one block: j = l-1/2 sub-block first, then j = l+1/2, m ascending.
std::vector<HouseAddress> houses_in_shell(ShellAddress shell);

//! The closed-form atomic number evaluated exactly. Integral for every valid
//! address; exposed so the integrality can be checked directly.
Rational z_formula_exact(const HouseAddress& addr);

//! Atomic number living at `addr`.
AtomicNumber z_from_address(const HouseAddress& addr);

//! Inverse of z_from_address. Throws std::domain_error for z < 1.
HouseAddress address_from_z(AtomicNumber z);

struct OracleEntry {
  HouseAddress address;
  AtomicNumber z;
};

//! Brute-force filling of every block with n+l <= max_sum, in Madelung order,
//! numbering houses consecutively from 1. Ground truth for z_from_address.
std::vector<OracleEntry> oracle_enumerate(int max_sum);

//! Positional pairing: the (m_s, m_l)-rank of `alt` within its shell picks the
//! house of the same rank in houses_in_shell order.
HouseAddress alt_to_jm(const AltHouseAddress& alt);
AltHouseAddress jm_to_alt(const HouseAddress& addr);

}  // namespace mendeleev
