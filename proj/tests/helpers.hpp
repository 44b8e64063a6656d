#pragma once

#include <cmath>

#include <doctest.h>

#include "mdrlab/qcore.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Vec to_vec(const mdrlab::Ket &k) {
    oracle::Vec v;
    for (int i = 0; i < k.dim(); ++i) v.push_back(k[i]);
    return v;
}

inline oracle::Mat to_mat(const mdrlab::Op &op) {
    oracle::Mat m = oracle::zeros(static_cast<std::size_t>(op.dim()));
    for (int r = 0; r < op.dim(); ++r)
        for (int c = 0; c < op.dim(); ++c) m[r][c] = op.matrix()(r, c);
    return m;
}

inline mdrlab::Matrix to_matrix(const oracle::Mat &m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    mdrlab::Matrix out(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) out(r, c) = m[r][c];
    return out;
}

inline mdrlab::Ket ket(std::initializer_list<mdrlab::Cplx> amps) {
    mdrlab::Amplitudes a(static_cast<Eigen::Index>(amps.size()));
    Eigen::Index i = 0;
    for (auto z : amps) a(i++) = z;
    return mdrlab::Ket::normalized(std::move(a));
}

inline double max_abs_diff(const oracle::Mat &a, const oracle::Mat &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

inline double max_abs_diff(const oracle::Vec &a, const oracle::Vec &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace testing
