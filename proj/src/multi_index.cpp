#include "hpade/multi_index.hpp"

namespace hpade {

MultiIndex::MultiIndex(long n, std::vector<long> m_vec) : n_(n), m_vec_(std::move(m_vec)) {
    if (n_ < 0) throw Error("multi-index: n must be nonnegative");
    if (m_vec_.empty()) throw Error("multi-index: need at least one component");
    for (long mj : m_vec_) {
        if (mj < 0) throw Error("multi-index: m_j must be nonnegative");
        m_ += mj;
    }
}

std::string MultiIndex::to_string() const {
    std::string s = "(" + std::to_string(n_) + ", (";
    for (std::size_t j = 0; j < m_vec_.size(); ++j) {
        if (j) s += ", ";
        s += std::to_string(m_vec_[j]);
    }
    return s + "))";
}

std::vector<MultiIndex> index_box(std::size_t k, long n_max, long m_max) {
    std::vector<MultiIndex> out;
    for (long n = 0; n <= n_max; ++n) {
        std::vector<long> m(k, 0);
        while (true) {
            out.emplace_back(n, m);
            std::size_t j = k;
            while (j > 0) {
                --j;
                if (m[j] < m_max) {
                    ++m[j];
                    break;
                }
                m[j] = 0;
                if (j == 0) {
                    j = k + 1;
                    break;
                }
            }
            if (j == k + 1 || k == 0) break;
        }
    }
    return out;
}

}  // namespace hpade
