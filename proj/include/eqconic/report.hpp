#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqconic/counterexamples.hpp"

namespace eqconic {

using Json = nlohmann::ordered_json;

/// {"ambient": str, "coeffs": [{"class": str, "n": int}]}, every class listed.
Json to_json(const BurnsideElement& x);
/// {"group", "sigma", "orbits", "lhs", "rhs", "equal", "table"}.
Json to_json(const VerificationReport& report);
Json table_json(const std::vector<TableRow>& rows);
Json marks_json(const BurnsideRing& ring);
Json to_json(const PencilCase& pencil, const PencilAnalysis& analysis);

/// "K <= G | LHS^K | RHS^K" followed by one row per entry.
void write_table(std::ostream& out, const std::vector<TableRow>& rows);
void write_text(std::ostream& out, const VerificationReport& report);
void write_marks(std::ostream& out, const BurnsideRing& ring);
void write_text(std::ostream& out, const PencilCase& pencil, const PencilAnalysis& analysis);

std::string degeneration_to_string(const Degeneration& d);

}  // namespace eqconic
