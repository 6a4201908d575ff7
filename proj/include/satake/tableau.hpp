#pragma once

// Semistandard tableaux and the Lascoux-Schutzenberger charge statistic,
// the type-A oracle for Kostka-Foulkes polynomials.

#include <algorithm>
#include <functional>
#include <vector>

#include "satake/qpolynomial.hpp"
#include "satake/root_system.hpp"

namespace satake {

using Partition = std::vector<long>;

inline constexpr int kMaxTableauRows = 3;

inline bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0)
            return false;
        if (i > 0 && p[i] > p[i - 1])
            return false;
    }
    return true;
}

inline long partition_size(const Partition& p)
{
    long s = 0;
    for (long x : p)
        s += x;
    return s;
}

/// Drops trailing zero parts.
inline Partition trimmed(Partition p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

/// Partitions of n with at most max_parts parts, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(long n, int max_parts)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(long, long)> rec = [&](long remaining, long cap) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts)
            return;
        for (long part = std::min(remaining, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// GL_{rows} partition -> SL_{rows} weight via consecutive row differences.
inline Weight partition_to_weight(const RootSystem& system, const Partition& p)
{
    const int rows = system.rank() + 1;
    if (system.type().family != Family::A)
        throw Error("partition_to_weight: type A only");
    if (!is_partition(p) || static_cast<int>(trimmed(p).size()) > rows)
        throw Error("partition_to_weight: not a partition with at most " + std::to_string(rows) + " rows");
    Partition padded = p;
    padded.resize(rows, 0);
    IntVector w(system.rank());
    for (int i = 0; i < system.rank(); ++i)
        w[i] = padded[i] - padded[i + 1];
    return system.weight(std::move(w));
}

class Tableau {
public:
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
    {
        if (rows_.size() > static_cast<std::size_t>(kMaxTableauRows))
            throw Error("tableau has more than 3 rows");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty())
                throw Error("tableau has an empty row");
            if (r > 0 && rows_[r].size() > rows_[r - 1].size())
                throw Error("tableau shape is not a partition");
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                const int v = rows_[r][c];
                if (v < 1 || v > kMaxTableauRows)
                    throw Error("tableau entry out of range 1..3");
                if (c > 0 && rows_[r][c - 1] > v)
                    throw Error("tableau row is not weakly increasing");
                if (r > 0 && rows_[r - 1][c] >= v)
                    throw Error("tableau column is not strictly increasing");
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    Partition shape() const
    {
        Partition s;
        for (const auto& row : rows_)
            s.push_back(static_cast<long>(row.size()));
        return s;
    }

    /// content[i] = number of entries equal to i + 1.
    Partition content() const
    {
        Partition c(kMaxTableauRows, 0);
        for (const auto& row : rows_)
            for (int v : row)
                ++c[v - 1];
        return trimmed(c);
    }

    /// Rows read left to right, from the bottom row up.
    std::vector<int> reading_word() const
    {
        std::vector<int> w;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
            w.insert(w.end(), it->begin(), it->end());
        return w;
    }

private:
    std::vector<std::vector<int>> rows_;
};

/// Charge of a word with partition content. Standard subwords are peeled off
/// by scanning leftwards cyclically for 1, 2, ...; the index rises by one
/// each time the scan wraps around.
inline long charge(const std::vector<int>& word)
{
    const int n = static_cast<int>(word.size());
    int max_letter = 0;
    for (int v : word) {
        if (v < 1)
            throw Error("charge: letters must be positive");
        max_letter = std::max(max_letter, v);
    }
    Partition content(max_letter, 0);
    for (int v : word)
        ++content[v - 1];
    if (!is_partition(content))
        throw Error("charge: content is not a partition");

    std::vector<bool> used(n, false);
    long total = 0;
    int remaining = n;
    while (remaining > 0) {
        int pos = n;  // virtual position just right of the word
        int letter = 1;
        long index = 0;
        for (;;) {
            int found = -1;
            bool wrapped = false;
            for (int step = 1; step <= n; ++step) {
                int p = pos - step;
                if (p < 0) {
                    p += n;
                    wrapped = true;
                }
                if (!used[p] && word[p] == letter) {
                    found = p;
                    break;
                }
            }
            if (found < 0)
                break;
            if (letter > 1 && wrapped)
                ++index;
            total += index;
            used[found] = true;
            --remaining;
            pos = found;
            ++letter;
        }
    }
    return total;
}

inline long charge(const Tableau& t) { return charge(t.reading_word()); }

/// All semistandard tableaux of the given shape and content.
inline std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content)
{
    const Partition sh = trimmed(shape);
    const Partition ct = trimmed(content);
    if (!is_partition(sh) || !is_partition(ct))
        throw Error("semistandard_tableaux: shape and content must be partitions");
    if (sh.size() > static_cast<std::size_t>(kMaxTableauRows) || ct.size() > static_cast<std::size_t>(kMaxTableauRows))
        throw Error("semistandard_tableaux: at most 3 rows");
    if (partition_size(sh) != partition_size(ct))
        throw Error("semistandard_tableaux: |shape| != |content|");

    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(sh.size());
    for (std::size_t r = 0; r < sh.size(); ++r)
        rows[r].assign(sh[r], 0);
    Partition left = ct;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == sh.size()) {
            out.emplace_back(rows);
            return;
        }
        if (c == rows[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, rows[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(left.size()); ++v) {
            if (left[v - 1] == 0)
                continue;
            --left[v - 1];
            rows[r][c] = v;
            fill(r, c + 1);
            ++left[v - 1];
        }
        rows[r][c] = 0;
    };
    fill(0, 0);
    return out;
}

/// K_{shape,content}(q) = sum over SSYT(shape, content) of q^charge.
inline QPolynomial kostka_charge(const Partition& shape, const Partition& content)
{
    QPolynomial k;
    for (const auto& t : semistandard_tableaux(shape, content))
        k.add_term(static_cast<unsigned>(charge(t)), 1);
    return k;
}

} // namespace satake
