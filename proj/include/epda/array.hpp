#ifndef EPDA_ARRAY_HPP
#define EPDA_ARRAY_HPP

#include <map>
#include <utility>
#include <vector>

#include "epda/errors.hpp"

namespace epda {

/// One cell of a delivery array: either the caching symbol (star) or a
/// positive integer label naming a transmission slot.
class Entry {
   public:
    static Entry star() { return Entry(0); }

    static Entry label(int s) {
        if (s < 1) throw FormatError("label must be a positive integer, got " + std::to_string(s));
        return Entry(s);
    }

    bool is_star() const { return value_ == 0; }
    bool is_label() const { return value_ != 0; }

    int label() const {
        if (is_star()) throw std::logic_error("entry is a star, not a label");
        return value_;
    }

    friend bool operator==(Entry a, Entry b) { return a.value_ == b.value_; }
    friend bool operator!=(Entry a, Entry b) { return a.value_ != b.value_; }

   private:
    explicit Entry(int v) : value_(v) {}
    int value_;
};

/// F x K grid of stars and labels together with its declared parameters
/// (K users, L antennas, F subfiles, Z stars per column, S slot labels).
/// Immutable after construction; rows and columns are numbered from 1
/// throughout, matching the convention used in reports and serialization.
///
/// Construction enforces only the structural invariants (grid shape and
/// 1 <= L <= K).  Whether Z and S actually describe the grid is the job of
/// verify_epda / verify_pda, so that inconsistent declarations surface as
/// condition failures with witnesses rather than as exceptions.
class DeliveryArray {
   public:
    DeliveryArray(int users, int antennas, int subfiles, int stars_per_column, int alphabet_size,
                  std::vector<Entry> grid)
        : users_(users),
          antennas_(antennas),
          subfiles_(subfiles),
          stars_per_column_(stars_per_column),
          alphabet_size_(alphabet_size),
          grid_(std::move(grid)) {
        if (users_ < 1 || subfiles_ < 1)
            throw FormatError("array needs at least one row and one column");
        if (antennas_ < 1 || antennas_ > users_)
            throw FormatError("antenna count L must satisfy 1 <= L <= K, got L=" +
                              std::to_string(antennas_) + ", K=" + std::to_string(users_));
        if (stars_per_column_ < 0 || alphabet_size_ < 0)
            throw FormatError("Z and S must be non-negative");
        if (grid_.size() != static_cast<std::size_t>(users_) * subfiles_)
            throw FormatError("grid has " + std::to_string(grid_.size()) + " cells, expected " +
                              std::to_string(static_cast<long long>(users_) * subfiles_));
    }

    int users() const { return users_; }              // K
    int antennas() const { return antennas_; }        // L
    int subfiles() const { return subfiles_; }        // F
    int stars_per_column() const { return stars_per_column_; }  // Z
    int alphabet_size() const { return alphabet_size_; }        // S

    /// Cell at row j, column k (both 1-based).
    Entry at(int j, int k) const {
        return grid_[static_cast<std::size_t>(j - 1) * users_ + (k - 1)];
    }

    const std::vector<Entry>& cells() const { return grid_; }

    /// Copy with a single cell replaced.  Declared parameters are kept, so
    /// the result may no longer verify; used for mutation-style testing.
    DeliveryArray with_entry(int j, int k, Entry e) const {
        std::vector<Entry> g = grid_;
        g[static_cast<std::size_t>(j - 1) * users_ + (k - 1)] = e;
        return DeliveryArray(users_, antennas_, subfiles_, stars_per_column_, alphabet_size_,
                             std::move(g));
    }

    /// Copy with a different declared antenna count (used when treating an
    /// L=1 array explicitly as a PDA or vice versa).
    DeliveryArray with_antennas(int antennas) const {
        return DeliveryArray(users_, antennas, subfiles_, stars_per_column_, alphabet_size_, grid_);
    }

    /// Occurrence coordinates of every label, keyed by label value.
    /// Coordinates are (row, column), 1-based, in row-major scan order.
    std::map<int, std::vector<std::pair<int, int>>> occurrences() const {
        std::map<int, std::vector<std::pair<int, int>>> occ;
        for (int j = 1; j <= subfiles_; ++j)
            for (int k = 1; k <= users_; ++k) {
                const Entry e = at(j, k);
                if (e.is_label()) occ[e.label()].emplace_back(j, k);
            }
        return occ;
    }

    friend bool operator==(const DeliveryArray& a, const DeliveryArray& b) {
        return a.users_ == b.users_ && a.antennas_ == b.antennas_ && a.subfiles_ == b.subfiles_ &&
               a.stars_per_column_ == b.stars_per_column_ && a.alphabet_size_ == b.alphabet_size_ &&
               a.grid_ == b.grid_;
    }
    friend bool operator!=(const DeliveryArray& a, const DeliveryArray& b) { return !(a == b); }

   private:
    int users_;
    int antennas_;
    int subfiles_;
    int stars_per_column_;
    int alphabet_size_;
    std::vector<Entry> grid_;  // row-major
};

/// Restriction of a parent array to the rows and columns containing one
/// particular label.  Original 1-based indices are retained in order.
struct SubArray {
    std::vector<int> parent_rows;
    std::vector<int> parent_cols;
    std::vector<Entry> grid;  // row-major, parent_rows.size() x parent_cols.size()

    int rows() const { return static_cast<int>(parent_rows.size()); }
    int cols() const { return static_cast<int>(parent_cols.size()); }

    /// Cell at local position (i, l), both 1-based.
    Entry at(int i, int l) const {
        return grid[static_cast<std::size_t>(i - 1) * parent_cols.size() + (l - 1)];
    }
};

/// Sub-array of A keeping exactly the rows and columns where label s occurs.
inline SubArray subarray(const DeliveryArray& a, int s) {
    std::vector<char> row_has(a.subfiles() + 1, 0), col_has(a.users() + 1, 0);
    bool found = false;
    for (int j = 1; j <= a.subfiles(); ++j)
        for (int k = 1; k <= a.users(); ++k) {
            const Entry e = a.at(j, k);
            if (e.is_label() && e.label() == s) {
                row_has[j] = col_has[k] = 1;
                found = true;
            }
        }
    if (!found) throw UnknownInteger("integer " + std::to_string(s) + " does not occur in the array");

    SubArray sub;
    for (int j = 1; j <= a.subfiles(); ++j)
        if (row_has[j]) sub.parent_rows.push_back(j);
    for (int k = 1; k <= a.users(); ++k)
        if (col_has[k]) sub.parent_cols.push_back(k);
    sub.grid.reserve(sub.parent_rows.size() * sub.parent_cols.size());
    for (int j : sub.parent_rows)
        for (int k : sub.parent_cols) sub.grid.push_back(a.at(j, k));
    return sub;
}

}  // namespace epda

#endif
