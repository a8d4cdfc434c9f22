#pragma once

#include <array>
#include <optional>

#include "km2/gf2k.hpp"

namespace km2::lie {

using gf2k::FieldElement;
using gf2k::FieldSpec;

/// Order-2 subgroup-scheme types in characteristic 2.
enum class LineType { Mu2, Alpha2 };

/// Element a + lambda*e of the four-dimensional restricted Lie algebra built
/// from a three-dimensional abelian ideal (trivial bracket, trivial 2-map)
/// and the scaling vector e acting as the identity on it. The a-coordinates
/// follow the vector-field basis with weights 4, 2, 0.
class LieElement {
public:
    LieElement(FieldElement a4, FieldElement a2, FieldElement a0, FieldElement lambda);

    static LieElement zero(FieldSpec spec);

    const FieldSpec& spec() const noexcept { return coords_[0].spec(); }
    const FieldElement& a4() const noexcept { return coords_[0]; }
    const FieldElement& a2() const noexcept { return coords_[1]; }
    const FieldElement& a0() const noexcept { return coords_[2]; }
    const FieldElement& lambda() const noexcept { return coords_[3]; }
    const std::array<FieldElement, 4>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    bool in_abelian_part() const noexcept { return coords_[3].is_zero(); }

    LieElement operator+(const LieElement& rhs) const;
    LieElement scale(const FieldElement& c) const;

    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    std::array<FieldElement, 4> coords_;
};

/// [a + le, a' + l'e] = l a' - l' a; the result has no e-component.
LieElement bracket(const LieElement& x, const LieElement& y);

/// The 2-map (a + le)^[2] = l * (a + le).
LieElement p_map(const LieElement& x);

struct ProductLieElement {
    LieElement left;
    LieElement right;

    bool is_zero() const noexcept { return left.is_zero() && right.is_zero(); }

    ProductLieElement operator+(const ProductLieElement& rhs) const {
        return {left + rhs.left, right + rhs.right};
    }
    ProductLieElement scale(const FieldElement& c) const {
        return {left.scale(c), right.scale(c)};
    }

    friend bool operator==(const ProductLieElement&, const ProductLieElement&) = default;
};

ProductLieElement bracket(const ProductLieElement& x, const ProductLieElement& y);
ProductLieElement p_map(const ProductLieElement& x);

/// Eigenvalue lambda with x^[2] = lambda * x, found by a rank test on
/// {x, x^[2]}; nullopt when the 2-image leaves the line through x. Throws on
/// the zero vector.
std::optional<FieldElement> is_p_closed(const LieElement& x);
std::optional<FieldElement> is_p_closed(const ProductLieElement& x);

/// Mu2 for a nonzero eigenvalue, Alpha2 for eigenvalue zero. Throws when the
/// element is not 2-closed.
LineType classify_line(const LieElement& x);
LineType classify_line(const ProductLieElement& x);

const char* to_string(LineType t);

}  // namespace km2::lie
