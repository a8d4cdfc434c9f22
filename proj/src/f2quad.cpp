#include "km2/f2quad.hpp"

#include <bit>
#include <stdexcept>

namespace km2::f2quad {

namespace {

unsigned f2_rank(std::vector<std::uint32_t> rows) {
    unsigned rank = 0;
    for (unsigned col = 0; col < 32 && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && !((rows[sel] >> col) & 1)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace

F2QuadForm::F2QuadForm(unsigned dim, std::vector<std::uint32_t> upper_rows)
    : dim_(dim), upper_(std::move(upper_rows)) {
    if (dim > 20) throw std::invalid_argument("form dimension capped at 20");
    if (upper_.size() != dim) throw std::invalid_argument("need one row per variable");
    for (unsigned i = 0; i < dim_; ++i) {
        if (upper_[i] & ((std::uint32_t{1} << i) - 1))
            throw std::invalid_argument("row has bits below the diagonal");
        if (upper_[i] >> dim_) throw std::invalid_argument("row has bits beyond the dimension");
    }
}

F2QuadForm F2QuadForm::standard(unsigned sigma, unsigned rank_mod_8) {
    if (rank_mod_8 != 2 && rank_mod_8 != 6)
        throw std::invalid_argument("rank residue must be 2 or 6 mod 8");
    if (sigma == 0 && rank_mod_8 == 6)
        throw std::invalid_argument("the zero-dimensional form exists only for residue 2");
    const unsigned n = 2 * sigma;
    std::vector<std::uint32_t> rows(n, 0);
    for (unsigned i = 0; i + 1 < n; i += 2) rows[i] |= std::uint32_t{1} << (i + 1);
    if (rank_mod_8 == 6) {
        rows[0] |= 0x1;  // t1^2
        rows[1] |= 0x2;  // t2^2
    }
    return F2QuadForm(n, std::move(rows));
}

bool F2QuadForm::eval(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (unsigned i = 0; i < dim_; ++i)
        if ((x >> i) & 1) acc ^= upper_[i] & x;
    return std::popcount(acc) & 1;
}

bool F2QuadForm::bilinear(std::uint32_t x, std::uint32_t y) const {
    return eval(x ^ y) ^ eval(x) ^ eval(y);
}

unsigned F2QuadForm::radical_dim() const {
    // Rows of the polar matrix B = U + U^T.
    std::vector<std::uint32_t> b(dim_, 0);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = i + 1; j < dim_; ++j)
            if ((upper_[i] >> j) & 1) {
                b[i] |= std::uint32_t{1} << j;
                b[j] |= std::uint32_t{1} << i;
            }
    return dim_ - f2_rank(b);
}

std::uint64_t F2QuadForm::count_zeros() const {
    if (!nondegenerate()) throw std::domain_error("zero count needs a nondegenerate form");
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << dim_); ++x)
        if (!eval(static_cast<std::uint32_t>(x))) ++count;
    return count;
}

int F2QuadForm::arf() const {
    const std::uint64_t zeros = count_zeros();
    if (dim_ == 0) return 0;
    const unsigned sigma = dim_ / 2;
    const std::uint64_t plus = (std::uint64_t{1} << (2 * sigma - 1)) +
                               (std::uint64_t{1} << (sigma - 1));
    const std::uint64_t minus = (std::uint64_t{1} << (2 * sigma - 1)) -
                                (std::uint64_t{1} << (sigma - 1));
    if (zeros == plus) return 0;
    if (zeros == minus) return 1;
    throw std::logic_error("zero count matches neither quadric type");
}

std::vector<std::vector<std::uint32_t>> F2QuadForm::totally_singular_subspaces(unsigned d) const {
    std::vector<std::vector<std::uint32_t>> found;
    if (d == 0) {
        found.push_back({});
        return found;
    }
    if (d > dim_) return found;

    // Reduced echelon bases: choose pivot columns, then fill the free entries
    // (non-pivot columns to the right of each pivot).
    std::vector<unsigned> pivots(d);
    for (unsigned i = 0; i < d; ++i) pivots[i] = i;

    const auto emit_for_pivots = [&]() {
        std::uint32_t pivot_mask = 0;
        for (unsigned p : pivots) pivot_mask |= std::uint32_t{1} << p;
        std::vector<std::vector<unsigned>> free_cols(d);
        unsigned total_free = 0;
        for (unsigned i = 0; i < d; ++i) {
            for (unsigned c = pivots[i] + 1; c < dim_; ++c) {
                if (pivot_mask & (std::uint32_t{1} << c)) continue;
                free_cols[i].push_back(c);
                ++total_free;
            }
        }
        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << total_free); ++fill) {
            std::vector<std::uint32_t> rows(d);
            unsigned bit = 0;
            for (unsigned i = 0; i < d; ++i) {
                std::uint32_t row = std::uint32_t{1} << pivots[i];
                for (unsigned c : free_cols[i]) {
                    if ((fill >> bit) & 1) row |= std::uint32_t{1} << c;
                    ++bit;
                }
                rows[i] = row;
            }
            bool singular = true;
            for (std::uint32_t combo = 1; combo < (std::uint32_t{1} << d) && singular; ++combo) {
                std::uint32_t v = 0;
                for (unsigned i = 0; i < d; ++i)
                    if ((combo >> i) & 1) v ^= rows[i];
                if (eval(v)) singular = false;
            }
            if (singular) found.push_back(rows);
        }
    };

    while (true) {
        emit_for_pivots();
        // Next pivot combination in lexicographic order.
        int i = static_cast<int>(d) - 1;
        while (i >= 0 && pivots[i] == dim_ - d + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (unsigned j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return found;
}

F2QuadForm F2QuadForm::induced_on_perp_quotient(std::uint32_t singular) const {
    if (singular == 0 || singular >> dim_)
        throw std::invalid_argument("need a nonzero vector inside the space");
    if (eval(singular)) throw std::invalid_argument("vector is not singular");
    if (!nondegenerate()) throw std::domain_error("induced form needs a nondegenerate form");

    // Basis of the orthogonal complement, then drop the line itself: pick
    // vectors in echelon order until dim-2 independent ones outside the line.
    std::vector<std::uint32_t> basis;
    std::vector<std::uint32_t> echelon;  // row-reduced copies, with `singular` seeded
    const auto try_add = [&](std::uint32_t v) {
        std::uint32_t r = v;
        for (std::uint32_t e : echelon) {
            const int lead = 31 - std::countl_zero(e);
            if ((r >> lead) & 1) r ^= e;
        }
        if (r == 0) return false;
        echelon.push_back(r);
        for (std::size_t i = echelon.size(); i-- > 1;)
            if ((31 - std::countl_zero(echelon[i])) > (31 - std::countl_zero(echelon[i - 1])))
                std::swap(echelon[i], echelon[i - 1]);
        return true;
    };
    try_add(singular);
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << dim_) && basis.size() + 2 < dim_ + 0u; ++v) {
        const auto x = static_cast<std::uint32_t>(v);
        if (bilinear(x, singular)) continue;
        if (try_add(x)) basis.push_back(x);
        if (basis.size() == dim_ - 2) break;
    }
    if (basis.size() != dim_ - 2) throw std::logic_error("complement basis extraction failed");

    const unsigned n = dim_ - 2;
    std::vector<std::uint32_t> rows(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (eval(basis[i])) rows[i] |= std::uint32_t{1} << i;
        for (unsigned j = i + 1; j < n; ++j)
            if (bilinear(basis[i], basis[j])) rows[i] |= std::uint32_t{1} << j;
    }
    return F2QuadForm(n, std::move(rows));
}

std::uint64_t overlattice_count(unsigned r, unsigned sigma) {
    if (r % 4 != 2) throw std::invalid_argument("rank must be 2 mod 4");
    if (2 * sigma > r) throw std::invalid_argument("need 2*sigma <= rank");
    if (sigma == 0) {
        if (r % 8 != 2) throw std::invalid_argument("sigma 0 needs rank 2 mod 8");
        return 0;
    }
    const unsigned eps = (r - 2) / 4;
    const std::uint64_t base = std::uint64_t{1} << (2 * sigma - 1);
    const std::uint64_t half = std::uint64_t{1} << (sigma - 1);
    return (eps % 2 == 0) ? base + half - 1 : base - half - 1;
}

}  // namespace km2::f2quad
