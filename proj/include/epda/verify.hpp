#ifndef EPDA_VERIFY_HPP
#define EPDA_VERIFY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epda/array.hpp"
#include "epda/errors.hpp"

namespace epda {

enum class Condition { C1, C2, C2Prime, C3, C4, D1, D2, D3a, D3b };

inline std::string_view to_string(Condition c) {
    switch (c) {
        case Condition::C1: return "C1";
        case Condition::C2: return "C2";
        case Condition::C2Prime: return "C2'";
        case Condition::C3: return "C3";
        case Condition::C4: return "C4";
        case Condition::D1: return "D1";
        case Condition::D2: return "D2";
        case Condition::D3a: return "D3a";
        case Condition::D3b: return "D3b";
    }
    return "?";
}

/// Evidence for one condition failure.  Coordinates are 1-based (row, col);
/// row 0 marks a whole-column witness (used by the per-column star count).
/// `label` is the integer involved, 0 when the failure is not label-specific.
struct Witness {
    int label = 0;
    std::vector<std::pair<int, int>> cells;
    std::string detail;
};

struct ConditionResult {
    Condition id;
    bool passed;
    std::vector<Witness> witnesses;  // empty iff passed
};

/// Outcome of checking every condition of the array definition.  Total:
/// all conditions are always evaluated so that fixtures can assert the
/// exact failing set.  Regularity is informational; an irregular array is
/// still valid, so the C2' row is appended only when it holds.
struct VerificationReport {
    bool passed = false;
    std::vector<ConditionResult> condition_results;
    std::optional<long long> regularity;

    const ConditionResult* find(Condition c) const {
        for (const auto& r : condition_results)
            if (r.id == c) return &r;
        return nullptr;
    }

    bool condition_passed(Condition c) const {
        const ConditionResult* r = find(c);
        return r != nullptr && r->passed;
    }
};

namespace detail {

constexpr std::size_t kMaxWitnessesPerCondition = 16;

inline void add_witness(ConditionResult& result, Witness w) {
    result.passed = false;
    if (result.witnesses.size() < kMaxWitnessesPerCondition)
        result.witnesses.push_back(std::move(w));
}

inline ConditionResult check_star_counts(const DeliveryArray& a, Condition id) {
    ConditionResult result{id, true, {}};
    for (int k = 1; k <= a.users(); ++k) {
        int stars = 0;
        for (int j = 1; j <= a.subfiles(); ++j)
            if (a.at(j, k).is_star()) ++stars;
        if (stars != a.stars_per_column()) {
            add_witness(result, Witness{0,
                                        {{0, k}},
                                        "column " + std::to_string(k) + " has " +
                                            std::to_string(stars) + " stars, expected " +
                                            std::to_string(a.stars_per_column())});
        }
    }
    return result;
}

using OccurrenceMap = std::map<int, std::vector<std::pair<int, int>>>;

inline ConditionResult check_alphabet(const DeliveryArray& a, const OccurrenceMap& occ,
                                      Condition id) {
    ConditionResult result{id, true, {}};
    for (int s = 1; s <= a.alphabet_size(); ++s) {
        if (occ.find(s) == occ.end())
            add_witness(result,
                        Witness{s, {}, "integer " + std::to_string(s) + " never occurs"});
    }
    for (const auto& [s, cells] : occ) {
        if (s > a.alphabet_size())
            add_witness(result, Witness{s,
                                        {cells.front()},
                                        "label " + std::to_string(s) +
                                            " exceeds the declared alphabet size " +
                                            std::to_string(a.alphabet_size())});
    }
    return result;
}

inline ConditionResult check_column_uniqueness(const DeliveryArray& a, const OccurrenceMap& occ) {
    ConditionResult result{Condition::C3, true, {}};
    for (const auto& [s, cells] : occ) {
        std::vector<int> first_row(a.users() + 1, 0);
        for (const auto& [j, k] : cells) {
            if (first_row[k] != 0) {
                add_witness(result, Witness{s,
                                            {{first_row[k], k}, {j, k}},
                                            "integer " + std::to_string(s) +
                                                " appears twice in column " + std::to_string(k)});
            } else {
                first_row[k] = j;
            }
        }
    }
    return result;
}

inline ConditionResult check_row_load(const DeliveryArray& a, const OccurrenceMap& occ) {
    ConditionResult result{Condition::C4, true, {}};
    for (const auto& [s, cells] : occ) {
        std::vector<int> rows, cols;
        for (const auto& [j, k] : cells) {
            rows.push_back(j);
            cols.push_back(k);
        }
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

        for (int j : rows) {
            std::vector<std::pair<int, int>> loaded;
            for (int k : cols)
                if (a.at(j, k).is_label()) loaded.emplace_back(j, k);
            if (static_cast<int>(loaded.size()) > a.antennas()) {
                add_witness(result,
                            Witness{s, std::move(loaded),
                                    "row " + std::to_string(j) + " of the sub-array for integer " +
                                        std::to_string(s) + " carries more than " +
                                        std::to_string(a.antennas()) + " integers"});
            }
        }
    }
    return result;
}

inline std::optional<long long> regularity_of(const OccurrenceMap& occ) {
    if (occ.empty()) return std::nullopt;
    const std::size_t g = occ.begin()->second.size();
    for (const auto& [s, cells] : occ)
        if (cells.size() != g) return std::nullopt;
    return static_cast<long long>(g);
}

inline void finalize(VerificationReport& report, const OccurrenceMap& occ) {
    report.passed = true;
    for (const auto& r : report.condition_results)
        if (!r.passed) report.passed = false;
    report.regularity = regularity_of(occ);
    if (report.regularity)
        report.condition_results.push_back(ConditionResult{Condition::C2Prime, true, {}});
}

}  // namespace detail

/// Checks the four defining conditions of a (K,L,F,Z,S) delivery array:
/// C1 every column holds exactly Z stars; C2 every integer in [S] occurs
/// (and no label exceeds S); C3 no integer repeats within a column; C4 no
/// row of any per-integer sub-array carries more than L integers.
VerificationReport inline verify_epda(const DeliveryArray& a) {
    const auto occ = a.occurrences();
    VerificationReport report;
    report.condition_results.push_back(detail::check_star_counts(a, Condition::C1));
    report.condition_results.push_back(detail::check_alphabet(a, occ, Condition::C2));
    report.condition_results.push_back(detail::check_column_uniqueness(a, occ));
    report.condition_results.push_back(detail::check_row_load(a, occ));
    detail::finalize(report, occ);
    return report;
}

/// Checks the single-antenna conditions D1-D3 for an array declared with
/// L=1.  D3a: equal integers lie in distinct rows and distinct columns;
/// D3b: the 2x2 sub-array they span has stars on the opposite corners.
VerificationReport inline verify_pda(const DeliveryArray& p) {
    if (p.antennas() != 1)
        throw ParameterInfeasible("PDA verification requires L=1, got L=" +
                                  std::to_string(p.antennas()));

    const auto occ = p.occurrences();
    VerificationReport report;
    report.condition_results.push_back(detail::check_star_counts(p, Condition::D1));
    report.condition_results.push_back(detail::check_alphabet(p, occ, Condition::D2));

    ConditionResult d3a{Condition::D3a, true, {}};
    ConditionResult d3b{Condition::D3b, true, {}};
    for (const auto& [s, cells] : occ) {
        for (std::size_t x = 0; x < cells.size(); ++x) {
            for (std::size_t y = x + 1; y < cells.size(); ++y) {
                const auto [j1, k1] = cells[x];
                const auto [j2, k2] = cells[y];
                if (j1 == j2 || k1 == k2) {
                    detail::add_witness(
                        d3a, Witness{s,
                                     {{j1, k1}, {j2, k2}},
                                     "integer " + std::to_string(s) + " repeats in the same " +
                                         (j1 == j2 ? "row" : "column")});
                    continue;
                }
                if (!p.at(j1, k2).is_star() || !p.at(j2, k1).is_star()) {
                    detail::add_witness(
                        d3b, Witness{s,
                                     {{j1, k1}, {j2, k2}},
                                     "occurrences of " + std::to_string(s) +
                                         " lack stars on the opposite corners of their 2x2 block"});
                }
            }
        }
    }
    report.condition_results.push_back(std::move(d3a));
    report.condition_results.push_back(std::move(d3b));
    detail::finalize(report, occ);
    return report;
}

}  // namespace epda

#endif
