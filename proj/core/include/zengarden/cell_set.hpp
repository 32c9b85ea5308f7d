#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

#include <boost/container/small_vector.hpp>

namespace zengarden {

/// Fixed-size bit set over the cell indices of one board. Boards up to 128
/// cells keep their bits inline, so copying a game state does not allocate.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[word(i)] >> bit(i)) & 1U; }
    void set(int i) { words_[word(i)] |= mask(i); }
    void reset(int i) { words_[word(i)] &= ~mask(i); }

    int count() const {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    bool is_subset_of(const CellSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(size_);
        for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
        return h;
    }

    friend bool operator==(const CellSet& a, const CellSet& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    static std::size_t word(int i) { return static_cast<std::size_t>(i) >> 6; }
    static unsigned bit(int i) { return static_cast<unsigned>(i) & 63U; }
    static std::uint64_t mask(int i) { return std::uint64_t{1} << bit(i); }

    int size_ = 0;
    boost::container::small_vector<std::uint64_t, 2> words_;
};

}  // namespace zengarden
