#ifndef EPDA_CONSTRUCTIONS_HPP
#define EPDA_CONSTRUCTIONS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "epda/array.hpp"
#include "epda/combinatorics.hpp"
#include "epda/errors.hpp"
#include "epda/verify.hpp"

namespace epda {

namespace detail {

/// Cyclic index into [1:K]: residue 0 maps to K.  Accepts any integer.
inline int mod1(long long i, int K) {
    long long r = i % K;
    if (r < 0) r += K;
    return r == 0 ? K : static_cast<int>(r);
}

/// Mutable grid with collision detection, used while a construction fills
/// in its cells.  -1 = unset, 0 = star, >=1 = label.
class GridFiller {
   public:
    GridFiller(int rows, int cols) : cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, -1) {}

    void put_star(int j, int k) { put(j, k, 0); }
    void put_label(int j, int k, int s) { put(j, k, s); }

    std::vector<Entry> take() const {
        std::vector<Entry> grid;
        grid.reserve(cells_.size());
        for (int v : cells_) {
            if (v < 0) throw std::logic_error("construction left a cell unset");
            grid.push_back(v == 0 ? Entry::star() : Entry::label(v));
        }
        return grid;
    }

   private:
    void put(int j, int k, int v) {
        int& cell = cells_[static_cast<std::size_t>(j - 1) * cols_ + (k - 1)];
        if (cell != -1)
            throw std::logic_error("construction wrote cell (" + std::to_string(j) + "," +
                                   std::to_string(k) + ") twice");
        cell = v;
    }

    int cols_;
    std::vector<int> cells_;
};

}  // namespace detail

/// The classic single-antenna array: rows indexed by the t-subsets of [K]
/// in colexicographic order, stars where the user belongs to the subset,
/// and the colexicographic rank of the enlarged subset elsewhere.  Yields a
/// (t+1)-regular array with F=C(K,t), Z=C(K-1,t-1), S=C(K,t+1), L=1.
inline DeliveryArray man_pda(int K, int t) {
    if (K < 1 || t < 0 || t > K)
        throw ParameterInfeasible("man_pda requires 0 <= t <= K, got K=" + std::to_string(K) +
                                  ", t=" + std::to_string(t));
    const long long F = binomial<long long>(K, t);
    const long long Z = binomial<long long>(K - 1, t - 1);
    const long long S = binomial<long long>(K, t + 1);

    std::vector<Entry> grid;
    grid.reserve(static_cast<std::size_t>(F) * K);
    ColexSubsets(K, t).for_each([&](const std::vector<int>& subset) {
        std::vector<int> enlarged(subset.size() + 1);
        for (int k = 1; k <= K; ++k) {
            const bool member = std::binary_search(subset.begin(), subset.end(), k);
            if (member) {
                grid.push_back(Entry::star());
                continue;
            }
            auto mid = std::copy(subset.begin(),
                                 std::lower_bound(subset.begin(), subset.end(), k),
                                 enlarged.begin());
            *mid = k;
            std::copy(std::lower_bound(subset.begin(), subset.end(), k), subset.end(), mid + 1);
            grid.push_back(Entry::label(static_cast<int>(colex_rank(enlarged))));
        }
    });
    return DeliveryArray(K, 1, static_cast<int>(F), static_cast<int>(Z), static_cast<int>(S),
                         std::move(grid));
}

/// Cyclic K x K array with Z stars per column placed on the wrapped band
/// (j-k) mod K in [0,Z), and each integer s in [K-Z] put at row
/// <Z+s+k-1>_K of column k.  K-regular with parameters (K, K-Z, K, Z, K-Z);
/// every per-integer sub-array is the whole array.
inline DeliveryArray construction_one(int K, int Z) {
    if (K < 2 || Z < 1 || Z > K - 1)
        throw ParameterInfeasible("construction I requires 1 <= Z <= K-1, got K=" +
                                  std::to_string(K) + ", Z=" + std::to_string(Z));
    detail::GridFiller fill(K, K);
    for (int j = 1; j <= K; ++j)
        for (int k = 1; k <= K; ++k)
            if (((j - k) % K + K) % K < Z) fill.put_star(j, k);
    const int S = K - Z;
    for (int s = 1; s <= S; ++s)
        for (int k = 1; k <= K; ++k) fill.put_label(detail::mod1(Z + s + k - 1, K), k, s);
    return DeliveryArray(K, K - Z, K, Z, S, fill.take());
}

/// Cyclic K x K array over the alphabet [(n-1)K] with the same star band as
/// construction I.  Each integer s = p*K + q lands in exactly two rows, L
/// cells in one and Z cells in the other, the offsets growing with p:
///   p even:  row q gets columns <p/2*(Z+L)+q+i>_K        for i in [L],
///            row <p/2*(Z+L)+Z+q>_K gets columns <q-Z+i>_K for i in [Z];
///   p odd:   row q gets columns <(p-1)/2*(Z+L)+L+q+i>_K  for i in [Z],
///            row <(p+1)/2*(Z+L)+q>_K gets columns <q-Z+i>_K for i in [L].
/// Feasible when (n-1) | (K - n*Z), L = (K-n*Z)/(n-1) >= 1 and
/// K >= (2n-1)*Z; the result is a (Z+L)-regular (K, L, K, Z, (n-1)K) array.
inline DeliveryArray construction_two(int K, int Z, int n) {
    if (n < 2) throw ParameterInfeasible("construction II requires n >= 2, got n=" + std::to_string(n));
    if (Z < 1) throw ParameterInfeasible("construction II requires Z >= 1, got Z=" + std::to_string(Z));
    if (K < 2 || (K - n * Z) % (n - 1) != 0 || (K - n * Z) / (n - 1) < 1)
        throw ParameterInfeasible("construction II requires (n-1) | (K - n*Z) with a positive "
                                  "quotient; got K=" + std::to_string(K) + ", Z=" +
                                  std::to_string(Z) + ", n=" + std::to_string(n));
    if (K < (2 * n - 1) * Z)
        throw ParameterInfeasible("construction II requires K >= (2n-1)*Z: " + std::to_string(K) +
                                  " < " + std::to_string((2 * n - 1) * Z));
    const int L = (K - n * Z) / (n - 1);

    detail::GridFiller fill(K, K);
    for (int j = 1; j <= K; ++j)
        for (int k = 1; k <= K; ++k)
            if (((j - k) % K + K) % K < Z) fill.put_star(j, k);

    for (int p = 0; p <= n - 2; ++p) {
        for (int q = 1; q <= K; ++q) {
            const int s = p * K + q;
            if (p % 2 == 0) {
                for (int i = 1; i <= L; ++i)
                    fill.put_label(q, detail::mod1(static_cast<long long>(p / 2) * (Z + L) + q + i, K), s);
                const int row = detail::mod1(static_cast<long long>(p / 2) * (Z + L) + Z + q, K);
                for (int i = 1; i <= Z; ++i) fill.put_label(row, detail::mod1(q - Z + i, K), s);
            } else {
                for (int i = 1; i <= Z; ++i)
                    fill.put_label(
                        q, detail::mod1(static_cast<long long>((p - 1) / 2) * (Z + L) + L + q + i, K), s);
                const int row = detail::mod1(static_cast<long long>((p + 1) / 2) * (Z + L) + q, K);
                for (int i = 1; i <= L; ++i) fill.put_label(row, detail::mod1(q - Z + i, K), s);
            }
        }
    }
    return DeliveryArray(K, L, K, Z, (n - 1) * K, fill.take());
}

/// Horizontal tiling of u copies of a verified array; K, L and the
/// regularity scale by u while F, Z and S stay fixed.
inline DeliveryArray row_concat(const DeliveryArray& a, int u) {
    if (u < 1) throw ParameterInfeasible("row concatenation requires u >= 1, got " + std::to_string(u));
    if (!verify_epda(a).passed)
        throw InvalidEpda("row concatenation requires an array that passes verification");
    if (u == 1) return a;

    const int K = a.users();
    std::vector<Entry> grid;
    grid.reserve(static_cast<std::size_t>(a.subfiles()) * K * u);
    for (int j = 1; j <= a.subfiles(); ++j)
        for (int copy = 0; copy < u; ++copy)
            for (int k = 1; k <= K; ++k) grid.push_back(a.at(j, k));
    return DeliveryArray(u * K, u * a.antennas(), a.subfiles(), a.stars_per_column(),
                         a.alphabet_size(), std::move(grid));
}

/// Full-DoF scheme for K = t + L: construction I on the parameters reduced
/// by gamma = gcd(K, t, L), then gamma-fold concatenation.  Delivery time
/// (K-t)/(t+L) = L/K with subpacketization K/gamma.
inline DeliveryArray scheme_theorem_a(int K, int t) {
    if (K < 2 || t < 1 || t > K - 1)
        throw ParameterInfeasible("theorem-A scheme requires 1 <= t <= K-1, got K=" +
                                  std::to_string(K) + ", t=" + std::to_string(t));
    const int L = K - t;
    const int gamma = static_cast<int>(gcd3(K, t, L));
    return row_concat(construction_one(K / gamma, t / gamma), gamma);
}

/// Full-DoF scheme for K = n*t + (n-1)*L with L >= t: construction II on
/// the gamma-reduced parameters, then gamma-fold concatenation.  Delivery
/// time is exactly n-1 with subpacketization K/gamma.
inline DeliveryArray scheme_theorem_b(int K, int t, int n) {
    if (n < 2) throw ParameterInfeasible("theorem-B scheme requires n >= 2, got n=" + std::to_string(n));
    if (t < 1) throw ParameterInfeasible("theorem-B scheme requires t >= 1, got t=" + std::to_string(t));
    if ((K - n * t) % (n - 1) != 0 || (K - n * t) / (n - 1) < 1)
        throw ParameterInfeasible("theorem-B scheme requires L = (K - n*t)/(n-1) to be a positive "
                                  "integer; got K=" + std::to_string(K) + ", t=" + std::to_string(t) +
                                  ", n=" + std::to_string(n));
    const int L = (K - n * t) / (n - 1);
    if (L < t)
        throw ParameterInfeasible("theorem-B scheme requires L >= t: " + std::to_string(L) + " < " +
                                  std::to_string(t));
    const int gamma = static_cast<int>(gcd3(K, t, L));
    return row_concat(construction_two(K / gamma, t / gamma, n), gamma);
}

/// The grouping-based scheme expressed as an array: the single-antenna
/// array on K/L users with cache parameter t/L, concatenated L times.
/// Needs L | K and L | t; the result has subpacketization C(K/L, t/L) and
/// delivery time (K-t)/(t+L).
inline DeliveryArray lae_epda(int K, int L, int t) {
    if (L < 1 || K < 1 || K % L != 0 || t < 0 || t % L != 0 || t > K)
        throw ParameterInfeasible("grouped scheme requires L | K and L | t with 0 <= t <= K, got K=" +
                                  std::to_string(K) + ", L=" + std::to_string(L) + ", t=" +
                                  std::to_string(t));
    return row_concat(man_pda(K / L, t / L), L);
}

/// System parameters (K users, cache parameter t, L antennas, optional
/// family index n) together with the gcd reduction shared by the scheme
/// synthesizers and the comparison tables.
struct SchemeParams {
    int K = 0;
    int t = 0;
    int L = 0;
    std::optional<int> n;

    int gamma() const { return static_cast<int>(gcd3(K, t, L)); }
    int reduced_users() const { return K / gamma(); }
    int reduced_t() const { return t / gamma(); }
    int reduced_antennas() const { return L / gamma(); }

    bool fits_theorem_a() const { return K == t + L; }
    bool fits_theorem_b() const { return n && K == *n * t + (*n - 1) * L && L >= t; }
};

}  // namespace epda

#endif
