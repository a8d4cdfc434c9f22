#pragma once

#include <cstdint>
#include <vector>

namespace km2::f2quad {

/// Quadratic form q(x) = x^T U x over F2, with U stored as a
/// strictly-upper-plus-diagonal bit matrix (row i holds bits j >= i). The
/// polar form B = U + U^T is alternating; its kernel is the radical.
class F2QuadForm {
public:
    F2QuadForm(unsigned dim, std::vector<std::uint32_t> upper_rows);

    /// The standard form on 2*sigma variables: the sum of hyperbolic pairs
    /// t1 t2 + ... + t_{2s-1} t_{2s} for rank residue 2 mod 8, with the extra
    /// squares t1^2 + t2^2 for residue 6 mod 8.
    static F2QuadForm standard(unsigned sigma, unsigned rank_mod_8);

    unsigned dim() const noexcept { return dim_; }
    const std::vector<std::uint32_t>& upper_rows() const noexcept { return upper_; }

    bool eval(std::uint32_t x) const;                        // q(x)
    bool bilinear(std::uint32_t x, std::uint32_t y) const;   // B(x,y)

    unsigned radical_dim() const;
    bool nondegenerate() const { return radical_dim() == 0; }

    /// Brute-force count over all 2^dim vectors; requires nondegeneracy.
    std::uint64_t count_zeros() const;

    /// 0 for the plus type (zero count 2^{2s-1} + 2^{s-1}), 1 for the minus
    /// type; requires nondegeneracy.
    int arf() const;

    /// All d-dimensional subspaces on which q vanishes identically, as
    /// reduced-echelon bases (rows are bitmasks, pivots ascending). The
    /// enumeration order is canonical, so counts and listings are stable.
    std::vector<std::vector<std::uint32_t>> totally_singular_subspaces(unsigned d) const;

    /// The form induced on (line)^perp / line for a singular nonzero vector.
    F2QuadForm induced_on_perp_quotient(std::uint32_t singular) const;

    friend bool operator==(const F2QuadForm&, const F2QuadForm&) = default;

private:
    unsigned dim_;
    std::vector<std::uint32_t> upper_;
};

/// Closed-form count of index-2 even overlattices of a 2-elementary lattice
/// of rank r (r = 2 mod 4) and invariant sigma:
/// 2^{2s-1} + (-1)^{(r-2)/4} 2^{s-1} - 1.
std::uint64_t overlattice_count(unsigned r, unsigned sigma);

}  // namespace km2::f2quad
