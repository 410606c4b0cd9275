#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mendeleev/ladders.hpp"

namespace atlas {

//! "n,l,2j,2m" or a bare atomic number. Throws std::invalid_argument.
mendeleev::HouseAddress parse_house(std::string_view text);

//! "m+", "m-", "j", "l+", "l-", "n+", "n-" or "taxi:n,l,2j,2m" (the target may
//! also be an atomic number). Throws std::invalid_argument.
mendeleev::LadderMove parse_move(std::string_view text);

//! Runs the `mendeleev` command line. Returns the process exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atlas
