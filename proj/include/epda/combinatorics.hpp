#ifndef EPDA_COMBINATORICS_HPP
#define EPDA_COMBINATORICS_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace epda {

/// Binomial coefficient C(n, k), exact in the integer type I.
/// Each intermediate product is divisible by the running index, so the
/// division below is always exact.
template <class I = long long>
I binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return I(0);
    if (k > n - k) k = n - k;
    I result(1);
    for (int i = 1; i <= k; ++i) {
        result *= I(n - k + i);
        result /= I(i);
    }
    return result;
}

inline long long gcd3(long long a, long long b, long long c) {
    return std::gcd(std::gcd(a, b), c);
}

/// Enumerates the m-subsets of [1:n] in colexicographic order.
/// Yields sorted vectors; an empty m yields the single empty subset.
class ColexSubsets {
   public:
    ColexSubsets(int n, int m) : n_(n), m_(m) {}

    template <class Fn>
    void for_each(Fn&& fn) const {
        if (m_ < 0 || m_ > n_) return;
        std::vector<int> a(m_);
        for (int i = 0; i < m_; ++i) a[i] = i + 1;
        while (true) {
            fn(const_cast<const std::vector<int>&>(a));
            // advance: bump the lowest element that has headroom, reset below
            int i = 0;
            while (i < m_) {
                const int limit = (i + 1 < m_) ? a[i + 1] : n_ + 1;
                if (a[i] + 1 < limit) break;
                ++i;
            }
            if (i == m_) return;
            ++a[i];
            for (int l = 0; l < i; ++l) a[l] = l + 1;
        }
    }

   private:
    int n_;
    int m_;
};

/// 1-based colexicographic rank of a sorted subset of [1:n].
/// rank({a_1 < ... < a_m}) = 1 + sum_i C(a_i - 1, i).
inline long long colex_rank(const std::vector<int>& subset) {
    long long rank = 1;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        rank += binomial<long long>(subset[i] - 1, static_cast<int>(i) + 1);
    }
    return rank;
}

}  // namespace epda

#endif
