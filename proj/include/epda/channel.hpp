#ifndef EPDA_CHANNEL_HPP
#define EPDA_CHANNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "epda/combinatorics.hpp"
#include "epda/errors.hpp"
#include "epda/linalg.hpp"
#include "epda/rng.hpp"

namespace epda {

/// Numerical tolerances shared by the channel and delivery pipeline.
constexpr double kEpsRank = 1e-8;    // genericity / dependence detection
constexpr double kEpsOrth = 1e-10;   // zero-forcing residual ceiling
constexpr double kEpsGen = 1e-6;     // own-channel gain floor
constexpr double kEpsDecode = 1e-6;  // end-to-end relative error ceiling

/// K user channel rows of L complex gains each, drawn from a seeded
/// standard complex normal stream.  Rows are 1-based like array columns.
struct ChannelMatrix {
    int users = 0;     // K
    int antennas = 0;  // L
    std::uint64_t seed = 0;
    std::vector<CVector> gains;  // gains[k-1] = h_k

    const CVector& row(int k) const { return gains[static_cast<std::size_t>(k - 1)]; }
};

namespace detail {

/// Linear independence of every subset of min(L,K) rows, which covers all
/// smaller subsets too.  Checked exhaustively while the subset count stays
/// within budget; larger systems fall back to a whole-matrix rank check
/// and rely on the delivery path, which detects a dependent subset exactly
/// where it would be used.
inline bool channel_is_generic(const std::vector<CVector>& rows, int L,
                               long long subset_budget = 256) {
    const int K = static_cast<int>(rows.size());
    const int m = std::min(L, K);
    if (rank_of_rows(rows, L, kEpsRank) < m) return false;
    if (binomial<long long>(K, m) > subset_budget) return true;

    bool ok = true;
    ColexSubsets(K, m).for_each([&](const std::vector<int>& subset) {
        if (!ok) return;
        std::vector<CVector> picked;
        picked.reserve(subset.size());
        for (int k : subset) picked.push_back(rows[k - 1]);
        if (rank_of_rows(std::move(picked), L, kEpsRank) < m) ok = false;
    });
    return ok;
}

}  // namespace detail

/// Draws h_k entries i.i.d. from the seeded complex normal stream and
/// enforces genericity, re-drawing from the continuing stream up to 16
/// times before giving up on the seed.
inline ChannelMatrix generate_channel(int K, int L, std::uint64_t seed) {
    if (K < 1 || L < 1 || L > K)
        throw ParameterInfeasible("channel requires K >= L >= 1, got K=" + std::to_string(K) +
                                  ", L=" + std::to_string(L));
    ComplexNormalStream stream(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<CVector> rows(K, CVector(L));
        for (int k = 0; k < K; ++k)
            for (int l = 0; l < L; ++l) rows[k][l] = stream.next();
        if (detail::channel_is_generic(rows, L))
            return ChannelMatrix{K, L, seed, std::move(rows)};
    }
    throw DegenerateChannel("seed " + std::to_string(seed) +
                            " produced no generic channel in 16 draws");
}

}  // namespace epda

#endif
