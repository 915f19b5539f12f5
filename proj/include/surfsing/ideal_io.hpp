#pragma once

#include "surfsing/monomial.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace surfsing {

/// One ideal per block of `gen <a> <b>` lines; blocks separated by `---`.
/// `#` comments and blank lines are ignored.
std::vector<MonomialIdeal> parse_ideals(std::istream& in, const std::string& source = "<input>");
std::vector<MonomialIdeal> parse_ideals_text(const std::string& text,
                                             const std::string& source = "<input>");

/// Writes the ideal back in the block format (no trailing separator).
void write_ideal(std::ostream& out, const MonomialIdeal& ideal);

/// x^2, x*y, y^2 style rendering; `1` for the unit ideal.
std::string describe(const MonomialIdeal& ideal);

} // namespace surfsing
