#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zengarden/board.hpp"
#include "zengarden/engine.hpp"

namespace zengarden {

class ScriptError : public std::runtime_error {
public:
    ScriptError(int line, const std::string& detail);
    int line() const { return line_; }

private:
    int line_;
};

/// Script text: one clause per line as 17 integers `c p1 d1 ... p8 d8`;
/// lines starting with ';' and blank lines are ignored. When a board is given,
/// entries outside [1, C] are rejected.
std::vector<Clause> parse_script(std::istream& in, const Board* board = nullptr);
std::vector<Clause> load_script(const std::filesystem::path& path, const Board* board = nullptr);

std::string format_clause(const Clause& clause);
std::string format_script(std::span<const Clause> clauses);

/// Garden as text: '=' raked, '.' unraked, '#' rock, '@' ornament, '1'..'3'
/// uncollected leaves, 'M' the monk when on sand.
std::string render(const GameState& state);

}  // namespace zengarden
