#include "mendeleev/quantum_address.hpp"

#include <algorithm>
#include <string_view>
#include <tuple>

namespace mendeleev {

namespace {

bool valid_shell(int n, int l) { return n >= 1 && l >= 0 && l <= n - 1; }

bool valid_house(int n, int l, int two_j, int two_m) {
  if (!valid_shell(n, l)) return false;
  if (two_j <= 0 || two_j % 2 == 0) return false;
  if (l == 0 ? two_j != 1 : (two_j != 2 * l - 1 && two_j != 2 * l + 1)) return false;
  if (two_m % 2 == 0) return false;
  return -two_j <= two_m && two_m <= two_j;
}

// Index of an (m_s, m_l) pair within its shell: m_s ascending, then m_l ascending.
int alt_rank(int l, int m_l, int two_m_s) {
  const int spin_index = two_m_s < 0 ? 0 : 1;
  return spin_index * (2 * l + 1) + (m_l + l);
}

// Index of a (j, m) pair within its shell, in houses_in_shell order.
int jm_rank(int l, int two_j, int two_m) {
  const int lower = (l > 0 && two_j == 2 * l - 1) ? 0 : (l > 0 ? 2 * l : 0);
  return lower + (two_m + two_j) / 2;
}

}  // namespace

ShellAddress::ShellAddress(int n, int l) : n_(n), l_(l) {
  if (!valid_shell(n, l)) {
    throw InvalidAddress("invalid shell (n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")");
  }
}

std::optional<ShellAddress> ShellAddress::try_make(int n, int l) {
  if (!valid_shell(n, l)) return std::nullopt;
  return ShellAddress(n, l, Unchecked{});
}

char orbital_letter(int l) {
  static constexpr std::string_view letters = "spdfghiklmnoqrtuvwxyz";
  if (l < 0) return '?';
  if (static_cast<std::size_t>(l) < letters.size()) return letters[static_cast<std::size_t>(l)];
  return '?';
}

std::string ShellAddress::label() const {
  std::string out = std::to_string(n_);
  const char letter = orbital_letter(l_);
  if (letter != '?') {
    out += letter;
  } else {
    out += "[l=" + std::to_string(l_) + "]";
  }
  return out;
}

std::strong_ordering compare_shells(ShellAddress a, ShellAddress b) {
  return std::make_tuple(a.madelung_sum(), a.n()) <=> std::make_tuple(b.madelung_sum(), b.n());
}

ShellAddress next_shell(ShellAddress shell) {
  // Within a fixed n+l, n increases up to n+l itself (the s shell).
  if (shell.l() > 0) return ShellAddress(shell.n() + 1, shell.l() - 1);
  const int sum = shell.madelung_sum() + 1;
  const int n = sum / 2 + 1;  // smallest n with l = sum - n <= n - 1
  return ShellAddress(n, sum - n);
}

std::vector<ShellAddress> enumerate_shells(int count) {
  std::vector<ShellAddress> shells;
  if (count <= 0) return shells;
  shells.reserve(static_cast<std::size_t>(count));
  ShellAddress current(1, 0);
  shells.push_back(current);
  while (static_cast<int>(shells.size()) < count) {
    current = next_shell(current);
    shells.push_back(current);
  }
  return shells;
}

int shell_capacity(ShellAddress shell) { return 2 * (2 * shell.l() + 1); }

std::int64_t row_capacity(int n) {
  std::int64_t total = 0;
  for (int l = 0; l < n; ++l) total += shell_capacity(ShellAddress(n, l));
  return total;
}

ZRange block_z_range(ShellAddress shell) {
  AtomicNumber first = 1;
  for (ShellAddress s(1, 0); compare_shells(s, shell) < 0; s = next_shell(s)) {
    first += shell_capacity(s);
  }
  return {first, first + shell_capacity(shell) - 1};
}

HouseAddress::HouseAddress(int n, int l, int two_j, int two_m)
    : shell_(n, l), j_(HalfInt::from_twice(two_j)), m_(HalfInt::from_twice(two_m)) {
  if (!valid_house(n, l, two_j, two_m)) {
    throw InvalidAddress("invalid house (n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                         ", 2j=" + std::to_string(two_j) + ", 2m=" + std::to_string(two_m) + ")");
  }
}

std::optional<HouseAddress> HouseAddress::try_make(int n, int l, int two_j, int two_m) {
  if (!valid_house(n, l, two_j, two_m)) return std::nullopt;
  return HouseAddress(*ShellAddress::try_make(n, l), HalfInt::from_twice(two_j),
                      HalfInt::from_twice(two_m));
}

std::string HouseAddress::str() const {
  return "(" + std::to_string(n()) + "," + std::to_string(l()) + "," + j_.str() + "," + m_.str() +
         ")";
}

AltHouseAddress::AltHouseAddress(int n, int l, int m_l, int two_m_s)
    : shell_(n, l), m_l_(m_l), two_m_s_(two_m_s) {
  if (m_l < -l || m_l > l || (two_m_s != 1 && two_m_s != -1)) {
    throw InvalidAddress("invalid alternative address (n=" + std::to_string(n) +
                         ", l=" + std::to_string(l) + ", m_l=" + std::to_string(m_l) +
                         ", 2m_s=" + std::to_string(two_m_s) + ")");
  }
}

std::optional<AltHouseAddress> AltHouseAddress::try_make(int n, int l, int m_l, int two_m_s) {
  auto shell = ShellAddress::try_make(n, l);
  if (!shell || m_l < -l || m_l > l || (two_m_s != 1 && two_m_s != -1)) return std::nullopt;
  return AltHouseAddress(*shell, m_l, two_m_s);
}

std::vector<HouseAddress> houses_in_shell(ShellAddress shell) {
  std::vector<HouseAddress> houses;
  houses.reserve(static_cast<std::size_t>(shell_capacity(shell)));
  const int l = shell.l();
  std::vector<int> two_js;
  if (l == 0) {
    two_js = {1};
  } else {
    two_js = {2 * l - 1, 2 * l + 1};
  }
  for (int two_j : two_js) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      houses.emplace_back(shell.n(), l, two_j, two_m);
    }
  }
  return houses;
}

Rational z_formula_exact(const HouseAddress& addr) {
  const std::int64_t s = addr.n() + addr.l();
  const std::int64_t l = addr.l();
  const Rational j = addr.j().to_rational();
  const Rational m = addr.m().to_rational();
  const std::int64_t parity = (s % 2 == 0) ? 1 : -1;

  Rational z = Rational(s * (s * s - 1), 6);
  z += Rational((s + 1) * (s + 1), 2);
  z -= Rational((1 + parity) * (s + 1), 4);
  z -= 4 * l * (l + 1);
  z += l;
  z += j * (2 * l + 1);
  z += m;
  z -= 1;
  return z;
}

AtomicNumber z_from_address(const HouseAddress& addr) {
  const Rational z = z_formula_exact(addr);
  if (z.denominator() != 1) {
    throw std::logic_error("non-integral atomic number at " + addr.str());
  }
  return z.numerator();
}

HouseAddress address_from_z(AtomicNumber z) {
  if (z < 1) throw std::domain_error("atomic number must be >= 1, got " + std::to_string(z));
  ShellAddress shell(1, 0);
  AtomicNumber first = 1;
  while (z >= first + shell_capacity(shell)) {
    first += shell_capacity(shell);
    shell = next_shell(shell);
  }
  const int l = shell.l();
  int offset = static_cast<int>(z - first);
  int two_j = 1;
  if (l > 0) {
    if (offset < 2 * l) {
      two_j = 2 * l - 1;
    } else {
      offset -= 2 * l;
      two_j = 2 * l + 1;
    }
  }
  return HouseAddress(shell.n(), l, two_j, -two_j + 2 * offset);
}

std::vector<OracleEntry> oracle_enumerate(int max_sum) {
  std::vector<ShellAddress> shells;
  for (int n = 1; n <= max_sum; ++n) {
    for (int l = 0; l < n && n + l <= max_sum; ++l) shells.emplace_back(n, l);
  }
  std::sort(shells.begin(), shells.end(), [](ShellAddress a, ShellAddress b) {
    if (a.n() + a.l() != b.n() + b.l()) return a.n() + a.l() < b.n() + b.l();
    return a.n() < b.n();
  });

  std::vector<OracleEntry> entries;
  AtomicNumber z = 0;
  for (ShellAddress shell : shells) {
    const int l = shell.l();
    // Left sub-block j = l - 1/2 (absent for l = 0), then right j = l + 1/2.
    for (int two_j = (l == 0 ? 1 : 2 * l - 1); two_j <= 2 * l + 1; two_j += 2) {
      for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
        entries.push_back({HouseAddress(shell.n(), l, two_j, two_m), ++z});
      }
    }
  }
  return entries;
}

HouseAddress alt_to_jm(const AltHouseAddress& alt) {
  const ShellAddress shell = alt.shell();
  const int rank = alt_rank(shell.l(), alt.m_l(), alt.two_m_s());
  return houses_in_shell(shell)[static_cast<std::size_t>(rank)];
}

AltHouseAddress jm_to_alt(const HouseAddress& addr) {
  const int l = addr.l();
  const int rank = jm_rank(l, addr.two_j(), addr.two_m());
  const int spin_block = 2 * l + 1;
  const int two_m_s = rank < spin_block ? -1 : 1;
  const int m_l = rank % spin_block - l;
  return AltHouseAddress(addr.n(), l, m_l, two_m_s);
}

}  // namespace mendeleev
