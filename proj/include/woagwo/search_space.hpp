#pragma once

#include <cstddef>
#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace woagwo {

// The feasible box: per-coordinate bounds with lower[i] < upper[i].
struct SearchSpace {
    std::size_t dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;

    static SearchSpace box(std::vector<double> lo, std::vector<double> hi) {
        if (lo.empty() || lo.size() != hi.size())
            throw std::invalid_argument("SearchSpace: bound vectors empty or mismatched");
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (!(lo[i] < hi[i]))
                throw std::invalid_argument("SearchSpace: lower[" + std::to_string(i) +
                                            "] must be < upper[" + std::to_string(i) + "]");
        SearchSpace s;
        s.dim = lo.size();
        s.lower = std::move(lo);
        s.upper = std::move(hi);
        return s;
    }

    static SearchSpace uniform_box(std::size_t dim, double lo, double hi) {
        return box(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
    }

    bool contains(std::span<const double> x) const {
        if (x.size() != dim) return false;
        for (std::size_t i = 0; i < dim; ++i)
            if (x[i] < lower[i] || x[i] > upper[i]) return false;
        return true;
    }
};

inline void check_dim(const SearchSpace& space, std::span<const double> x, const char* who) {
    if (x.size() != space.dim)
        throw std::invalid_argument(std::string(who) + ": dimension mismatch, got " +
                                    std::to_string(x.size()) + " expected " +
                                    std::to_string(space.dim));
}

// Project x onto the box, coordinate-wise. In-bounds inputs come back unchanged.
inline std::vector<double> clamp(const SearchSpace& space, std::span<const double> x) {
    check_dim(space, x, "clamp");
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t i = 0; i < space.dim; ++i)
        out[i] = std::min(space.upper[i], std::max(space.lower[i], out[i]));
    return out;
}

inline void clamp_in_place(const SearchSpace& space, std::vector<double>& x) {
    check_dim(space, x, "clamp");
    for (std::size_t i = 0; i < space.dim; ++i)
        x[i] = std::min(space.upper[i], std::max(space.lower[i], x[i]));
}

} // namespace woagwo
