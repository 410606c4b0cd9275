#include "mendeleev/ladders.hpp"

#include <algorithm>
#include <cstdlib>

namespace mendeleev {

namespace {

void require_unit(int delta) {
  if (delta != 1 && delta != -1) {
    throw std::invalid_argument("ladder step must be +1 or -1, got " + std::to_string(delta));
  }
}

// Nearest admissible 2j for orbital l, ties toward the smaller j.
int clamp_two_j(int l, int two_j) {
  if (l == 0) return 1;
  const int lower = 2 * l - 1;
  const int upper = 2 * l + 1;
  if (two_j == lower || two_j == upper) return two_j;
  return std::abs(two_j - lower) <= std::abs(two_j - upper) ? lower : upper;
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::So3Su2: return "So3Su2";
    case MoveKind::So4Su2: return "So4Su2";
    case MoveKind::So21: return "So21";
    case MoveKind::Taxi: return "Taxi";
  }
  return "?";
}

std::string_view to_string(MoveError error) {
  switch (error) {
    case MoveError::OutOfBlock: return "OutOfBlock";
    case MoveError::NoSecondSubBlock: return "NoSecondSubBlock";
    case MoveError::MOutOfRange: return "MOutOfRange";
    case MoveError::OutOfStreet: return "OutOfStreet";
    case MoveError::OutOfAvenue: return "OutOfAvenue";
  }
  return "?";
}

LadderMove LadderMove::so4(int delta) {
  require_unit(delta);
  return LadderMove(So4Move{delta});
}

LadderMove LadderMove::so21(int delta) {
  require_unit(delta);
  return LadderMove(So21Move{delta});
}

MoveKind LadderMove::kind() const {
  switch (payload_.index()) {
    case 0: return MoveKind::So3Su2;
    case 1: return MoveKind::So4Su2;
    case 2: return MoveKind::So21;
    default: return MoveKind::Taxi;
  }
}

int LadderMove::delta() const {
  if (const auto* p = std::get_if<So4Move>(&payload_)) return p->delta;
  if (const auto* p = std::get_if<So21Move>(&payload_)) return p->delta;
  throw std::logic_error("delta() on a move without a unit step");
}

std::string LadderMove::str() const {
  switch (kind()) {
    case MoveKind::So3Su2:
      switch (so3_step()) {
        case So3Step::MUp: return "m+";
        case So3Step::MDown: return "m-";
        case So3Step::JToggle: return "j";
      }
      break;
    case MoveKind::So4Su2: return delta() > 0 ? "l+" : "l-";
    case MoveKind::So21: return delta() > 0 ? "n+" : "n-";
    case MoveKind::Taxi: {
      const HouseAddress& t = target();
      return "taxi(" + std::to_string(t.n()) + "," + std::to_string(t.l()) + "," +
             std::to_string(t.two_j()) + "," + std::to_string(t.two_m()) + ")";
    }
  }
  return "?";
}

MoveResult step_so3(const HouseAddress& addr, So3Step step) {
  const int two_j = addr.two_j();
  switch (step) {
    case So3Step::MUp:
    case So3Step::MDown: {
      const int two_m = addr.two_m() + (step == So3Step::MUp ? 2 : -2);
      if (std::abs(two_m) > two_j) return MoveError::OutOfBlock;
      return HouseAddress(addr.n(), addr.l(), two_j, two_m);
    }
    case So3Step::JToggle: {
      const int l = addr.l();
      if (l == 0) return MoveError::NoSecondSubBlock;
      const int new_two_j = two_j == 2 * l - 1 ? 2 * l + 1 : 2 * l - 1;
      if (std::abs(addr.two_m()) > new_two_j) return MoveError::MOutOfRange;
      return HouseAddress(addr.n(), l, new_two_j, addr.two_m());
    }
  }
  throw std::logic_error("unknown So3Step");
}

MoveResult step_so4(const HouseAddress& addr, int delta) {
  require_unit(delta);
  const int l = addr.l() + delta;
  if (l < 0 || l > addr.n() - 1) return MoveError::OutOfStreet;
  const int two_j = clamp_two_j(l, addr.two_j());
  const int two_m = std::clamp(addr.two_m(), -two_j, two_j);
  return HouseAddress(addr.n(), l, two_j, two_m);
}

MoveResult step_so21(const HouseAddress& addr, int delta) {
  require_unit(delta);
  const int n = addr.n() + delta;
  if (n < addr.l() + 1) return MoveError::OutOfAvenue;
  return HouseAddress(n, addr.l(), addr.two_j(), addr.two_m());
}

MoveResult apply_move(const HouseAddress& addr, const LadderMove& move) {
  switch (move.kind()) {
    case MoveKind::So3Su2: return step_so3(addr, move.so3_step());
    case MoveKind::So4Su2: return step_so4(addr, move.delta());
    case MoveKind::So21: return step_so21(addr, move.delta());
    case MoveKind::Taxi: return move.target();
  }
  throw std::logic_error("unknown MoveKind");
}

TaxiRide taxi(const HouseAddress& from, const HouseAddress& to) {
  std::vector<LadderMove> route;
  HouseAddress here = from;
  auto take = [&](const LadderMove& move) {
    here = apply_move(here, move).value();
    route.push_back(move);
  };

  // Going up an avenue is always allowed, and the higher street holds both l values.
  const int street = std::max(from.n(), to.n());
  while (here.n() < street) take(LadderMove::so21(+1));

  while (here.l() != to.l()) take(LadderMove::so4(here.l() < to.l() ? +1 : -1));

  auto walk_m_to = [&](int two_m) {
    while (here.two_m() != two_m) take(here.two_m() < two_m ? LadderMove::m_up() : LadderMove::m_down());
  };
  if (here.two_j() != to.two_j()) {
    // Toggle only once |m| fits the smaller sub-block.
    const int narrow = std::min(here.two_j(), to.two_j());
    walk_m_to(std::clamp(to.two_m(), -narrow, narrow));
    take(LadderMove::j_toggle());
  }
  walk_m_to(to.two_m());

  while (here.n() > to.n()) take(LadderMove::so21(-1));

  return {here, std::move(route)};
}

}  // namespace mendeleev
