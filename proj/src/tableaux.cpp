#include "orbitlr/tableaux.hpp"

#include <algorithm>
#include <functional>

#include "orbitlr/error.hpp"

namespace orbitlr {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!inner_.contained_in(outer_))
        throw Error(ErrorKind::ShapeMismatch,
                    inner_.to_string() + " is not contained in " + outer_.to_string());
}

std::vector<int> SkewTableau::content() const {
    std::vector<int> counts;
    for (const auto& row : rows)
        for (int v : row) {
            if (v <= 0)
                continue;
            if (static_cast<std::size_t>(v) > counts.size())
                counts.resize(v, 0);
            ++counts[v - 1];
        }
    while (!counts.empty() && counts.back() == 0)
        counts.pop_back();
    return counts;
}

bool SkewTableau::is_semistandard() const {
    if (rows.size() != shape.rows())
        return false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.row_size(r))
            return false;
        for (std::size_t j = 0; j < rows[r].size(); ++j) {
            if (rows[r][j] <= 0)
                return false;
            if (j > 0 && rows[r][j - 1] > rows[r][j])
                return false;
            if (r == 0)
                continue;
            const int col = shape.row_begin(r) + static_cast<int>(j);
            if (col >= shape.row_begin(r - 1)) {
                const int above = rows[r - 1][col - shape.row_begin(r - 1)];
                if (above >= rows[r][j])
                    return false;
            }
        }
    }
    return true;
}

std::vector<int> reverse_reading_word(const SkewTableau& tableau) {
    std::vector<int> word;
    for (const auto& row : tableau.rows)
        word.insert(word.end(), row.rbegin(), row.rend());
    return word;
}

bool is_yamanouchi(std::span<const int> word) {
    std::vector<int> counts;
    for (int v : word) {
        if (static_cast<std::size_t>(v) > counts.size())
            counts.resize(v, 0);
        ++counts[v - 1];
        if (v > 1 && counts[v - 1] > counts[v - 2])
            return false;
    }
    return true;
}

namespace {

/**
 * Backtracking over the skew cells in reverse reading order (rows top to
 * bottom, right to left inside a row), so the Yamanouchi condition is checked
 * on each prefix as it is built. Rows are weakly increasing left to right and
 * columns strictly increasing, which bounds every entry by its right
 * neighbour and by the entry above.
 */
class LrSearch {
public:
    LrSearch(const SkewShape& shape, const Partition& content)
        : shape_(shape), content_(content), counts_(content.length(), 0) {
        rows_.resize(shape.rows());
        for (std::size_t r = 0; r < shape.rows(); ++r)
            rows_[r].assign(shape.row_size(r), 0);
    }

    void run(const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
        visit_ = &visit;
        place(0, shape_.rows() ? shape_.row_end(0) - 1 : 0);
    }

private:
    void place(std::size_t r, int c) {
        // advance to the next row when the current one is exhausted
        while (r < shape_.rows() && c < shape_.row_begin(r)) {
            ++r;
            if (r < shape_.rows())
                c = shape_.row_end(r) - 1;
        }
        if (r >= shape_.rows()) {
            (*visit_)(rows_);
            return;
        }
        const int offset = c - shape_.row_begin(r);
        int lo = 1;
        int hi = static_cast<int>(content_.length());
        if (c + 1 < shape_.row_end(r))
            hi = std::min(hi, rows_[r][offset + 1]);
        if (r > 0 && c >= shape_.row_begin(r - 1))
            lo = rows_[r - 1][c - shape_.row_begin(r - 1)] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (counts_[v - 1] >= content_[v - 1])
                continue;
            if (v > 1 && counts_[v - 2] <= counts_[v - 1])
                continue;
            ++counts_[v - 1];
            rows_[r][offset] = v;
            place(r, c - 1);
            --counts_[v - 1];
        }
        rows_[r][offset] = 0;
    }

    const SkewShape& shape_;
    const Partition& content_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> rows_;
    const std::function<void(const std::vector<std::vector<int>>&)>* visit_ = nullptr;
};

void check_weight(const SkewShape& shape, const Partition& content) {
    if (content.weight() != shape.size())
        throw Error(ErrorKind::ShapeMismatch, "content " + content.to_string() + " has weight " +
                                                  std::to_string(content.weight()) + " but shape has " +
                                                  std::to_string(shape.size()) + " cells");
}

}  // namespace

std::vector<SkewTableau> lr_tableaux(const SkewShape& shape, const Partition& content) {
    check_weight(shape, content);
    std::vector<SkewTableau> out;
    LrSearch(shape, content).run([&](const auto& rows) { out.push_back(SkewTableau{shape, rows}); });
    std::sort(out.begin(), out.end(),
              [](const SkewTableau& a, const SkewTableau& b) { return a.rows < b.rows; });
    return out;
}

std::int64_t count_lr_tableaux(const SkewShape& shape, const Partition& content) {
    check_weight(shape, content);
    std::int64_t count = 0;
    LrSearch(shape, content).run([&](const auto&) { ++count; });
    return count;
}

std::int64_t syt_count_hook(const Partition& lambda) {
    const int n = lambda.weight();
    if (n > 20)
        throw Error(ErrorKind::InvalidArgument, "hook-length count limited to weight 20");
    const Partition cols = conjugate(lambda);
    // Divide out hooks as the factorial is built so intermediates stay exact and small.
    std::vector<std::int64_t> hooks;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks.push_back((lambda[i] - j - 1) + (cols[j] - static_cast<int>(i) - 1) + 1);
    std::int64_t numerator = 1;
    for (int k = 2; k <= n; ++k)
        numerator *= k;
    std::int64_t denominator = 1;
    for (auto h : hooks)
        denominator *= h;
    return numerator / denominator;
}

namespace {

std::int64_t count_ssyt(const Partition& lambda, int k, std::vector<std::vector<int>>& grid,
                        std::size_t r, int c) {
    if (c >= lambda[r]) {
        ++r;
        c = 0;
    }
    if (r >= lambda.length())
        return 1;
    int lo = 1;
    if (c > 0)
        lo = grid[r][c - 1];
    if (r > 0)
        lo = std::max(lo, grid[r - 1][c] + 1);
    std::int64_t total = 0;
    for (int v = lo; v <= k; ++v) {
        grid[r][c] = v;
        total += count_ssyt(lambda, k, grid, r, c + 1);
    }
    return total;
}

}  // namespace

std::int64_t ssyt_count(const Partition& lambda, int k) {
    if (k < static_cast<int>(lambda.length()))
        throw Error(ErrorKind::TooFewVariables, lambda.to_string() + " needs at least " +
                                                    std::to_string(lambda.length()) + " letters");
    std::vector<std::vector<int>> grid(lambda.length());
    for (std::size_t r = 0; r < lambda.length(); ++r)
        grid[r].assign(lambda[r], 0);
    return count_ssyt(lambda, k, grid, 0, 0);
}

}  // namespace orbitlr
