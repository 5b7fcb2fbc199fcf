#ifndef HDESIGN_EXACT_COVER_HPP
#define HDESIGN_EXACT_COVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hdesign {

enum class CoverStatus { Found, Exhausted, BudgetExceeded };

struct CoverResult {
    CoverStatus status = CoverStatus::Exhausted;
    std::vector<int> rows;  // chosen row indices when found
    std::uint64_t nodes = 0;
};

// Dancing-links exact cover: every column must be covered exactly once.
// Columns are chosen by fewest remaining rows, first in column order on ties;
// rows of a column are tried in insertion order. Single use after a
// successful solve.
class ExactCover {
public:
    explicit ExactCover(int columns);

    // Returns the row index.
    int add_row(std::span<const int> columns);
    int rows() const { return static_cast<int>(row_start_.size()); }

    CoverResult solve(std::uint64_t node_limit = 0,
        std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

private:
    void cover(int c);
    void uncover(int c);
    bool search();

    // Node arrays; indices 0..columns are headers (0 is the root).
    std::vector<int> left_, right_, up_, down_, col_, row_;
    std::vector<int> size_;
    std::vector<int> row_start_;
    std::vector<int> stack_;
    int columns_;
    std::uint64_t nodes_ = 0;
    std::uint64_t limit_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    bool stopped_ = false;
};

} // namespace hdesign

#endif // HDESIGN_EXACT_COVER_HPP
