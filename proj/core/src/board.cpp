#include "zengarden/board.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace zengarden {

namespace {

constexpr std::string_view kMagic = "zpg1";

std::optional<CellKind> kind_from_char(char ch) {
    switch (ch) {
        case '.': return CellKind::Sand;
        case '#': return CellKind::Rock;
        case '@': return CellKind::Ornament;
        case '1': return CellKind::Leaf1;
        case '2': return CellKind::Leaf2;
        case '3': return CellKind::Leaf3;
        default: return std::nullopt;
    }
}

std::string_view rstrip(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::North: return "N";
        case Direction::East: return "E";
        case Direction::South: return "S";
        case Direction::West: return "W";
    }
    return "?";
}

char to_char(CellKind k) {
    switch (k) {
        case CellKind::Sand: return '.';
        case CellKind::Rock: return '#';
        case CellKind::Ornament: return '@';
        case CellKind::Leaf1: return '1';
        case CellKind::Leaf2: return '2';
        case CellKind::Leaf3: return '3';
    }
    return '?';
}

ParseError::ParseError(int line, int column, std::string detail, const std::string& source)
    : BoardError((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) +
                 (column > 0 ? ", column " + std::to_string(column) : "") + ": " + detail),
      line_(line),
      column_(column),
      detail_(std::move(detail)) {}

Board::Board(int width, int height, std::vector<CellKind> cells, std::string name)
    : width_(width), height_(height), cells_(std::move(cells)), name_(std::move(name)) {
    if (width_ < 1 || height_ < 1) throw BoardError("board must have at least one row and one column");
    if (width_ > kMaxDim || height_ > kMaxDim)
        throw BoardError("board exceeds " + std::to_string(kMaxDim) + "x" + std::to_string(kMaxDim));
    if (cells_.size() != static_cast<std::size_t>(width_ * height_))
        throw BoardError("cell count does not match board dimensions");

    for (int i = 0; i < cell_count(); ++i) {
        if (is_required(i)) ++required_count_;
        if (const int order = leaf_order(at(i)); order > 0) {
            if (leaves_[order - 1]) throw BoardError("leaf " + std::to_string(order) + " appears more than once");
            leaves_[order - 1] = cell_at(i);
        }
    }
    if (required_count_ == 0) throw BoardError("board has no sand to rake");
}

std::optional<Cell> Board::leaf(int order) const {
    if (order < 1 || order > kMaxLeafOrder) return std::nullopt;
    return leaves_[order - 1];
}

int Board::leaf_count() const {
    int n = 0;
    for (const auto& l : leaves_) n += l.has_value();
    return n;
}

PerimeterEntry Board::entry_of(int face) const {
    const int x = width_;
    const int y = height_;
    if (face < 1 || face > circumference())
        throw std::out_of_range("perimeter index " + std::to_string(face) + " outside [1, " +
                                std::to_string(circumference()) + "]");
    if (face <= x) return {{face - 1, 0}, Direction::South};
    if (face <= x + y) return {{x - 1, face - x - 1}, Direction::West};
    if (face <= 2 * x + y) return {{x - 1 - (face - x - y - 1), y - 1}, Direction::North};
    return {{0, y - 1 - (face - 2 * x - y - 1)}, Direction::East};
}

std::string Board::serialize() const {
    std::string out(kMagic);
    out += '\n';
    if (!name_.empty()) out += "; " + name_ + '\n';
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c) out += to_char(at(Cell{c, r}));
        out += '\n';
    }
    return out;
}

Board parse_board(std::istream& in, std::string name) {
    std::string raw;
    int line_no = 0;
    bool seen_magic = false;
    int width = -1;
    int height = 0;
    std::vector<CellKind> cells;
    int leaf_line[kMaxLeafOrder] = {0, 0, 0};

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = rstrip(raw);
        if (!seen_magic) {
            if (line != kMagic) throw ParseError(line_no, 0, "expected 'zpg1' header");
            seen_magic = true;
            continue;
        }
        if (line.empty() || line.front() == ';') continue;

        if (width < 0) {
            width = static_cast<int>(line.size());
        } else if (static_cast<int>(line.size()) != width) {
            throw ParseError(line_no, 0,
                             "ragged rows: expected " + std::to_string(width) + " columns, got " +
                                 std::to_string(line.size()));
        }
        for (std::size_t i = 0; i < line.size(); ++i) {
            const auto kind = kind_from_char(line[i]);
            if (!kind)
                throw ParseError(line_no, static_cast<int>(i) + 1,
                                 std::string("unknown cell character '") + line[i] + "'");
            if (const int order = leaf_order(*kind); order > 0) {
                if (leaf_line[order - 1] != 0)
                    throw ParseError(line_no, static_cast<int>(i) + 1,
                                     "duplicate leaf " + std::to_string(order) + " (first on line " +
                                         std::to_string(leaf_line[order - 1]) + ")");
                leaf_line[order - 1] = line_no;
            }
            cells.push_back(*kind);
        }
        ++height;
    }
    if (!seen_magic) throw ParseError(1, 0, "empty input, expected 'zpg1' header");
    if (height == 0) throw ParseError(line_no, 0, "empty grid");
    if (width > Board::kMaxDim || height > Board::kMaxDim)
        throw ParseError(line_no, 0, "board exceeds 64x64");
    try {
        return Board(width, height, std::move(cells), std::move(name));
    } catch (const BoardError& e) {
        throw ParseError(line_no, 0, e.what());
    }
}

Board parse_board(std::string_view text, std::string name) {
    std::istringstream in{std::string(text)};
    return parse_board(in, std::move(name));
}

Board load_board(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw BoardError("cannot open board file " + path.string());
    try {
        return parse_board(in, path.stem().string());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), e.detail(), path.string());
    }
}

}  // namespace zengarden
