#pragma once

#include "schottky/lattice.hpp"

#include <istream>
#include <string>

namespace schottky {

struct GramInput {
    int dim = 0;
    std::vector<double> entries;  // row-major, unvalidated
    GramMode mode = GramMode::PPAV;
};

// JSON {"dim": d, "entries": [...], "mode": "ppav"|"plain"} or plain text
// (first token d, then d*d numbers). Throws ValidationError(ParseError).
GramInput parse_gram(const std::string& text);
GramInput read_gram_file(const std::string& path);

// parse + validate.
GramMatrix load_gram(const std::string& path);

// JSON with 17 significant digits.
std::string to_json(const GramMatrix& gram);

} // namespace schottky
