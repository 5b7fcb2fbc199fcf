#include "hdesign/exact_cover.hpp"

#include <stdexcept>

namespace hdesign {

ExactCover::ExactCover(int columns)
    : columns_(columns)
{
    if (columns < 0)
        throw std::invalid_argument("ExactCover: negative column count");
    const int headers = columns + 1;
    left_.resize(static_cast<std::size_t>(headers));
    right_.resize(static_cast<std::size_t>(headers));
    up_.resize(static_cast<std::size_t>(headers));
    down_.resize(static_cast<std::size_t>(headers));
    col_.resize(static_cast<std::size_t>(headers));
    row_.assign(static_cast<std::size_t>(headers), -1);
    size_.assign(static_cast<std::size_t>(headers), 0);
    for (int i = 0; i < headers; ++i) {
        left_[static_cast<std::size_t>(i)] = (i + headers - 1) % headers;
        right_[static_cast<std::size_t>(i)] = (i + 1) % headers;
        up_[static_cast<std::size_t>(i)] = i;
        down_[static_cast<std::size_t>(i)] = i;
        col_[static_cast<std::size_t>(i)] = i;
    }
}

int ExactCover::add_row(std::span<const int> columns)
{
    if (columns.empty())
        throw std::invalid_argument("ExactCover: empty row");
    const int r = static_cast<int>(row_start_.size());
    int first = -1;
    for (int c0 : columns) {
        if (c0 < 0 || c0 >= columns_)
            throw std::invalid_argument("ExactCover: column out of range");
        const int c = c0 + 1;
        const int x = static_cast<int>(col_.size());
        col_.push_back(c);
        row_.push_back(r);
        up_.push_back(up_[static_cast<std::size_t>(c)]);
        down_.push_back(c);
        down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(c)])] = x;
        up_[static_cast<std::size_t>(c)] = x;
        ++size_[static_cast<std::size_t>(c)];
        if (first < 0) {
            first = x;
            left_.push_back(x);
            right_.push_back(x);
        } else {
            left_.push_back(left_[static_cast<std::size_t>(first)]);
            right_.push_back(first);
            right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(first)])] = x;
            left_[static_cast<std::size_t>(first)] = x;
        }
    }
    row_start_.push_back(first);
    return r;
}

void ExactCover::cover(int c)
{
    auto C = static_cast<std::size_t>(c);
    right_[static_cast<std::size_t>(left_[C])] = right_[C];
    left_[static_cast<std::size_t>(right_[C])] = left_[C];
    for (int i = down_[C]; i != c; i = down_[static_cast<std::size_t>(i)])
        for (int j = right_[static_cast<std::size_t>(i)]; j != i; j = right_[static_cast<std::size_t>(j)]) {
            auto J = static_cast<std::size_t>(j);
            up_[static_cast<std::size_t>(down_[J])] = up_[J];
            down_[static_cast<std::size_t>(up_[J])] = down_[J];
            --size_[static_cast<std::size_t>(col_[J])];
        }
}

void ExactCover::uncover(int c)
{
    auto C = static_cast<std::size_t>(c);
    for (int i = up_[C]; i != c; i = up_[static_cast<std::size_t>(i)])
        for (int j = left_[static_cast<std::size_t>(i)]; j != i; j = left_[static_cast<std::size_t>(j)]) {
            auto J = static_cast<std::size_t>(j);
            ++size_[static_cast<std::size_t>(col_[J])];
            up_[static_cast<std::size_t>(down_[J])] = j;
            down_[static_cast<std::size_t>(up_[J])] = j;
        }
    right_[static_cast<std::size_t>(left_[C])] = c;
    left_[static_cast<std::size_t>(right_[C])] = c;
}

bool ExactCover::search()
{
    if (right_[0] == 0)
        return true;
    ++nodes_;
    if (limit_ && nodes_ > limit_) {
        stopped_ = true;
        return false;
    }
    if (deadline_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) {
        stopped_ = true;
        return false;
    }
    int best = -1;
    int best_size = 0;
    for (int c = right_[0]; c != 0; c = right_[static_cast<std::size_t>(c)]) {
        int s = size_[static_cast<std::size_t>(c)];
        if (best < 0 || s < best_size) {
            best = c;
            best_size = s;
            if (s <= 1)
                break;
        }
    }
    if (best_size == 0)
        return false;
    cover(best);
    for (int r = down_[static_cast<std::size_t>(best)]; r != best; r = down_[static_cast<std::size_t>(r)]) {
        stack_.push_back(row_[static_cast<std::size_t>(r)]);
        for (int j = right_[static_cast<std::size_t>(r)]; j != r; j = right_[static_cast<std::size_t>(j)])
            cover(col_[static_cast<std::size_t>(j)]);
        if (search())
            return true;
        for (int j = left_[static_cast<std::size_t>(r)]; j != r; j = left_[static_cast<std::size_t>(j)])
            uncover(col_[static_cast<std::size_t>(j)]);
        stack_.pop_back();
        if (stopped_)
            break;
    }
    uncover(best);
    return false;
}

CoverResult ExactCover::solve(std::uint64_t node_limit, std::optional<std::chrono::steady_clock::time_point> deadline)
{
    nodes_ = 0;
    limit_ = node_limit;
    deadline_ = deadline;
    stopped_ = false;
    stack_.clear();
    CoverResult res;
    if (search()) {
        res.status = CoverStatus::Found;
        res.rows = stack_;
    } else {
        res.status = stopped_ ? CoverStatus::BudgetExceeded : CoverStatus::Exhausted;
    }
    res.nodes = nodes_;
    return res;
}

} // namespace hdesign
