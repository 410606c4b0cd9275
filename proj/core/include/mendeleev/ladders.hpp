#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mendeleev/quantum_address.hpp"

namespace mendeleev {

// Bus lines of the table:
//   So3Su2  moves inside a block (m +-1, or toggle between the two j sub-blocks)
//   So4Su2  moves along a street (l +-1 at fixed n)
//   So21    moves along an avenue (n +-1 at fixed l, j, m)
//   Taxi    jumps to any house
enum class MoveKind { So3Su2, So4Su2, So21, Taxi };

enum class So3Step { MUp, MDown, JToggle };

enum class MoveError { OutOfBlock, NoSecondSubBlock, MOutOfRange, OutOfStreet, OutOfAvenue };

std::string_view to_string(MoveKind kind);
std::string_view to_string(MoveError error);

class LadderMove {
 public:
  static LadderMove m_up() { return LadderMove(So3Move{So3Step::MUp}); }
  static LadderMove m_down() { return LadderMove(So3Move{So3Step::MDown}); }
  static LadderMove j_toggle() { return LadderMove(So3Move{So3Step::JToggle}); }
  static LadderMove so3(So3Step step) { return LadderMove(So3Move{step}); }
  //! delta must be +1 or -1.
  static LadderMove so4(int delta);
  static LadderMove so21(int delta);
  static LadderMove taxi(const HouseAddress& target) { return LadderMove(TaxiMove{target}); }

  MoveKind kind() const;

  //! Payload accessors; each is only meaningful for its own kind.
  So3Step so3_step() const { return std::get<So3Move>(payload_).step; }
  int delta() const;
  const HouseAddress& target() const { return std::get<TaxiMove>(payload_).target; }

  //! Short mnemonic: "m+", "m-", "j", "l+", "l-", "n+", "n-", "taxi(n,l,2j,2m)".
  std::string str() const;

  friend bool operator==(const LadderMove&, const LadderMove&) = default;

 private:
  struct So3Move {
    So3Step step;
    friend bool operator==(const So3Move&, const So3Move&) = default;
  };
  struct So4Move {
    int delta;
    friend bool operator==(const So4Move&, const So4Move&) = default;
  };
  struct So21Move {
    int delta;
    friend bool operator==(const So21Move&, const So21Move&) = default;
  };
  struct TaxiMove {
    HouseAddress target;
    friend bool operator==(const TaxiMove&, const TaxiMove&) = default;
  };
  using Payload = std::variant<So3Move, So4Move, So21Move, TaxiMove>;

  explicit LadderMove(Payload payload) : payload_(std::move(payload)) {}

  Payload payload_;
};

//! Either the house reached by a move or the reason the move is refused.
class MoveResult {
 public:
  MoveResult(HouseAddress house) : value_(house) {}  // NOLINT(google-explicit-constructor)
  MoveResult(MoveError error) : value_(error) {}     // NOLINT(google-explicit-constructor)

  bool ok() const { return std::holds_alternative<HouseAddress>(value_); }
  explicit operator bool() const { return ok(); }

  //! Throws std::bad_variant_access when the move was refused.
  const HouseAddress& value() const { return std::get<HouseAddress>(value_); }
  MoveError error() const { return std::get<MoveError>(value_); }

 private:
  std::variant<HouseAddress, MoveError> value_;
};

MoveResult step_so3(const HouseAddress& addr, So3Step step);
MoveResult step_so4(const HouseAddress& addr, int delta);
MoveResult step_so21(const HouseAddress& addr, int delta);

//! Dispatches on the move kind. A taxi move always succeeds.
MoveResult apply_move(const HouseAddress& addr, const LadderMove& move);

struct TaxiRide {
  HouseAddress destination;
  //! Unit bus-line steps from the origin to the destination: So21 up to the
  //! higher of the two streets, So4 across it, So3 inside the target block,
  //! then So21 down the target avenue.
  std::vector<LadderMove> route;
};

TaxiRide taxi(const HouseAddress& from, const HouseAddress& to);

}  // namespace mendeleev
