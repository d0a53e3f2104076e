#pragma once

#include <string>
#include <vector>

#include "hpade/errors.hpp"

namespace hpade {

/// (n, m_1..m_k) with m = sum m_j and n_j = n + m - m_j.
class MultiIndex {
public:
    MultiIndex(long n, std::vector<long> m_vec);

    long n() const noexcept { return n_; }
    const std::vector<long>& m_vec() const noexcept { return m_vec_; }
    std::size_t k() const noexcept { return m_vec_.size(); }
    long m() const noexcept { return m_; }
    long m_j(std::size_t j) const { return m_vec_.at(j); }
    long n_j(std::size_t j) const { return n_ + m_ - m_vec_.at(j); }
    bool zero() const noexcept { return m_ == 0; }

    /// "(n, (m_1, ..., m_k))"
    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    long n_;
    std::vector<long> m_vec_;
    long m_ = 0;
};

/// All multi-indices with 0 <= n <= n_max and 0 <= m_j <= m_max, k components,
/// in lexicographic order of (n, m_1, ..., m_k).
std::vector<MultiIndex> index_box(std::size_t k, long n_max, long m_max);

}  // namespace hpade
