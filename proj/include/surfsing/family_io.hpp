#pragma once

#include "surfsing/equising.hpp"

#include <istream>
#include <string>

namespace surfsing {

/// Family manifest: one block per fiber, blocks separated by blank lines.
///   fiber t=<label>
///   m=<uint> mu2=<uint> [khat2=<rat>] [k2=<rat>] [chiE=<int>]
///     [chiX=<int>] [chiXtilde=<int>] [e=<rat>[,<rat>...]]
/// Attributes may be spread over several lines of the block. Family-level
/// invariants (unique labels, one special fiber) are left to the checkers.
Family parse_family(std::istream& in, const std::string& source = "<input>");
Family parse_family_text(const std::string& text, const std::string& source = "<input>");

} // namespace surfsing
