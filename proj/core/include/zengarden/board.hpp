#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zengarden {

enum class Direction : std::uint8_t { North, East, South, West };

constexpr Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

constexpr bool perpendicular(Direction a, Direction b) {
    return (static_cast<int>(a) + static_cast<int>(b)) % 2 == 1;
}

std::string_view to_string(Direction d);

/// Grid coordinate, (column, row) with the origin at the upper-left square.
struct Cell {
    int col = 0;
    int row = 0;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell neighbour(Cell c, Direction d) {
    switch (d) {
        case Direction::North: return {c.col, c.row - 1};
        case Direction::East: return {c.col + 1, c.row};
        case Direction::South: return {c.col, c.row + 1};
        case Direction::West: return {c.col - 1, c.row};
    }
    return c;
}

enum class CellKind : std::uint8_t { Sand, Rock, Ornament, Leaf1, Leaf2, Leaf3 };

/// Leaf collection order (1 yellow, 2 orange, 3 red); 0 for anything else.
constexpr int leaf_order(CellKind k) {
    switch (k) {
        case CellKind::Leaf1: return 1;
        case CellKind::Leaf2: return 2;
        case CellKind::Leaf3: return 3;
        default: return 0;
    }
}

constexpr CellKind leaf_kind(int order) {
    return static_cast<CellKind>(static_cast<int>(CellKind::Leaf1) + order - 1);
}

constexpr int kMaxLeafOrder = 3;

/// A perimeter face: the sand square it borders and the heading of a monk entering from it.
struct PerimeterEntry {
    Cell cell;
    Direction heading;

    friend constexpr bool operator==(const PerimeterEntry&, const PerimeterEntry&) = default;
};

class BoardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the text parser. Line and column are 1-based; column is 0 when the
/// problem concerns a whole line.
class ParseError : public BoardError {
public:
    ParseError(int line, int column, std::string detail, const std::string& source = {});

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    int line_;
    int column_;
    std::string detail_;
};

/// Immutable garden definition. Safe to share between threads.
class Board {
public:
    static constexpr int kMaxDim = 64;

    /// Throws BoardError when dimensions are out of range, the cell count does
    /// not match, a leaf order repeats, or no square needs raking.
    Board(int width, int height, std::vector<CellKind> cells, std::string name = {});

    int width() const { return width_; }
    int height() const { return height_; }
    int cell_count() const { return width_ * height_; }
    int circumference() const { return 2 * width_ + 2 * height_; }
    int required_count() const { return required_count_; }
    const std::string& name() const { return name_; }

    bool contains(Cell c) const {
        return c.col >= 0 && c.row >= 0 && c.col < width_ && c.row < height_;
    }
    int index(Cell c) const { return c.row * width_ + c.col; }
    Cell cell_at(int index) const { return {index % width_, index / width_}; }

    CellKind at(Cell c) const { return cells_[static_cast<std::size_t>(index(c))]; }
    CellKind at(int index) const { return cells_[static_cast<std::size_t>(index)]; }

    /// Sand and leaf squares must be raked to finish the garden.
    bool is_required(int index) const {
        const CellKind k = at(index);
        return k != CellKind::Rock && k != CellKind::Ornament;
    }

    /// Position of the leaf with the given order, if the board has one.
    std::optional<Cell> leaf(int order) const;
    int leaf_count() const;

    /// Faces are numbered 1..C clockwise from the north face of the upper-left
    /// square. Throws std::out_of_range outside [1, C].
    PerimeterEntry entry_of(int face) const;

    /// Round-trips through parse_board.
    std::string serialize() const;

    friend bool operator==(const Board& a, const Board& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.cells_ == b.cells_;
    }

private:
    int width_;
    int height_;
    std::vector<CellKind> cells_;
    std::string name_;
    int required_count_ = 0;
    std::optional<Cell> leaves_[kMaxLeafOrder];
};

char to_char(CellKind k);

Board parse_board(std::istream& in, std::string name = {});
Board parse_board(std::string_view text, std::string name = {});

/// Loads a board file; the board name defaults to the file stem.
Board load_board(const std::filesystem::path& path);

}  // namespace zengarden
