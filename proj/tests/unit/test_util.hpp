#pragma once

#include <random>
#include <string>
#include <vector>

#include "hpade/linalg.hpp"
#include "hpade/scalar.hpp"
#include "hpade/series.hpp"

namespace testutil {

inline hpade::Rational R(const char* s) { return hpade::parse_rational(s); }

inline hpade::Rational random_rational(std::mt19937& rng, int num_range = 9, int den_max = 5) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_max);
    return hpade::Rational(num(rng), den(rng));
}

inline hpade::PowerSeries random_power_series(std::mt19937& rng, long K) {
    std::vector<hpade::Rational> c;
    for (long i = 0; i <= K; ++i) c.push_back(random_rational(rng));
    return hpade::PowerSeries(std::move(c));
}

/// Cofactor expansion along the first row.
template <class T>
T cofactor_det(const hpade::Matrix<T>& m) {
    std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        hpade::Matrix<T> sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
                if (cc != c) sub(r - 1, k++) = m(r, cc);
            }
        }
        T term = m(0, c) * cofactor_det(sub);
        if (c % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

/// a and b are nonzero scalar multiples of each other.
template <class T>
bool proportional(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    bool any = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (!(a[i] * b[j] == a[j] * b[i])) return false;
        }
        if (!hpade::ScalarTraits<T>::is_zero(a[i])) any = true;
    }
    return any;
}

}  // namespace testutil
