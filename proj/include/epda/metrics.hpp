#ifndef EPDA_METRICS_HPP
#define EPDA_METRICS_HPP

#include <map>
#include <optional>

#include "epda/array.hpp"
#include "epda/rational.hpp"
#include "epda/verify.hpp"

namespace epda {

/// Exact figures of merit of a verified delivery array.  All ratios are
/// reduced rationals; dof is present only when the array is regular.
struct SchemeMetrics {
    Rational memory_ratio;    // Z/F
    Rational delivery_time;   // S/F
    Rational local_gain;      // 1 - Z/F
    Rational dof_bound;       // L + K*Z/F
    std::optional<long long> dof;  // regularity g, users served per slot
    std::map<int, long long> per_integer_counts;
};

/// Computes metrics for an array that passes verification.  When the array
/// is g-regular the counting identities g*S = K*(F-Z) and
/// T = (K/g)*(1 - Z/F) hold; both are re-derived here as a cross-check.
inline SchemeMetrics metrics(const DeliveryArray& a) {
    const VerificationReport report = verify_epda(a);
    if (!report.passed) throw InvalidEpda("metrics requested for an array that fails verification");

    SchemeMetrics m;
    const long long K = a.users(), L = a.antennas(), F = a.subfiles(), Z = a.stars_per_column(),
                    S = a.alphabet_size();
    m.memory_ratio = Rational(Z, F);
    m.delivery_time = S == 0 ? Rational(0) : Rational(S, F);
    m.local_gain = Rational(1) - m.memory_ratio;
    m.dof_bound = Rational(L) + Rational(K * Z, F);

    for (const auto& [s, cells] : a.occurrences())
        m.per_integer_counts[s] = static_cast<long long>(cells.size());

    if (report.regularity) {
        const long long g = *report.regularity;
        m.dof = g;
        if (g * S != K * (F - Z))
            throw std::logic_error("regular array violates the slot-count identity g*S = K*(F-Z)");
        if (m.delivery_time != Rational(K, g) * m.local_gain)
            throw std::logic_error("regular array violates T = (K/g)*(1 - Z/F)");
        if (Rational(g) > m.dof_bound)
            throw std::logic_error("regularity exceeds the bound L + K*Z/F");
    }
    return m;
}

}  // namespace epda

#endif
