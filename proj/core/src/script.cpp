#include "zengarden/script.hpp"

#include <fstream>
#include <sstream>

namespace zengarden {

ScriptError::ScriptError(int line, const std::string& detail)
    : std::runtime_error("script line " + std::to_string(line) + ": " + detail), line_(line) {}

std::vector<Clause> parse_script(std::istream& in, const Board* board) {
    std::vector<Clause> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == ';') continue;

        std::istringstream fields(raw);
        std::vector<long long> values;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                values.push_back(std::stoll(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::logic_error&) {
                throw ScriptError(line_no, "not an integer: '" + token + "'");
            }
        }
        if (values.size() != 1 + 2 * kClausePairs)
            throw ScriptError(line_no, "expected 17 integers, got " + std::to_string(values.size()));

        Clause clause;
        clause.entry = static_cast<int>(values[0]);
        if (values[0] < 1 || (board && values[0] > board->circumference()))
            throw ScriptError(line_no, "perimeter index " + std::to_string(values[0]) + " out of range" +
                                           (board ? " [1, " + std::to_string(board->circumference()) + "]" : ""));
        for (int j = 0; j < kClausePairs; ++j) {
            const long long p = values[static_cast<std::size_t>(1 + 2 * j)];
            const long long d = values[static_cast<std::size_t>(2 + 2 * j)];
            if (p < 0 || p > Board::kMaxDim) throw ScriptError(line_no, "push count out of range");
            if (d != 1 && d != 2) throw ScriptError(line_no, "direction choice must be 1 or 2");
            clause.pairs[static_cast<std::size_t>(j)] = {static_cast<int>(p), static_cast<int>(d)};
        }
        out.push_back(clause);
    }
    return out;
}

std::vector<Clause> load_script(const std::filesystem::path& path, const Board* board) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open script file " + path.string());
    return parse_script(in, board);
}

std::string format_clause(const Clause& clause) {
    std::string s = std::to_string(clause.entry);
    for (const auto& [p, d] : clause.pairs) s += ' ' + std::to_string(p) + ' ' + std::to_string(d);
    return s;
}

std::string format_script(std::span<const Clause> clauses) {
    std::string s;
    for (const auto& c : clauses) s += format_clause(c) + '\n';
    return s;
}

std::string render(const GameState& state) {
    const Board& board = state.board();
    std::string out;
    for (int r = 0; r < board.height(); ++r) {
        for (int c = 0; c < board.width(); ++c) {
            const Cell cell{c, r};
            char ch = '.';
            if (state.monk() && state.monk()->cell == cell)
                ch = 'M';
            else if (board.at(cell) == CellKind::Rock)
                ch = '#';
            else if (state.has_ornament(cell))
                ch = '@';
            else if (const int leaf = state.leaf_at(cell))
                ch = static_cast<char>('0' + leaf);
            else if (state.is_raked(cell))
                ch = '=';
            out += ch;
        }
        out += '\n';
    }
    return out;
}

}  // namespace zengarden
