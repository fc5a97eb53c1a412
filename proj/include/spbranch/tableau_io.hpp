#pragma once

#include <iosfwd>
#include <string>

#include "spbranch/tableau.hpp"

namespace spbranch {

// Text format: one row per line, entries whitespace-separated, inner cells
// as ".", barred k as "-k". A blank line (or end of input) terminates.
// Only proper tableaux can be rendered or parsed.
std::string tableau_to_text(const Tableau& t);
Tableau tableau_from_text(const std::string& text);
Tableau tableau_from_stream(std::istream& in);

// JSON format: {"outer":[...],"inner":[...],"rows":[[...]]}; rows hold skew
// cells only, left to right, barred letters as negative integers.
std::string tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const std::string& json);

} // namespace spbranch
