#include "km2/lie.hpp"

#include <stdexcept>

namespace km2::lie {

namespace {

void require_same_spec(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) throw std::invalid_argument("mismatched field specs");
}

template <std::size_t N>
std::optional<FieldElement> eigenvalue_by_rank(const std::array<FieldElement, N>& x,
                                               const std::array<FieldElement, N>& y) {
    // x nonzero; answer c with y = c x, if the pair has rank one.
    std::size_t pivot = N;
    for (std::size_t i = 0; i < N; ++i) {
        if (!x[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    const FieldElement c = y[pivot] / x[pivot];
    for (std::size_t i = 0; i < N; ++i)
        if (!(y[i] == c * x[i])) return std::nullopt;
    return c;
}

}  // namespace

LieElement::LieElement(FieldElement a4, FieldElement a2, FieldElement a0, FieldElement lambda)
    : coords_{a4, a2, a0, lambda} {
    require_same_spec(a4.spec(), a2.spec());
    require_same_spec(a4.spec(), a0.spec());
    require_same_spec(a4.spec(), lambda.spec());
}

LieElement LieElement::zero(FieldSpec spec) {
    const auto z = FieldElement::zero(spec);
    return {z, z, z, z};
}

bool LieElement::is_zero() const noexcept {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

LieElement LieElement::operator+(const LieElement& rhs) const {
    return {coords_[0] + rhs.coords_[0], coords_[1] + rhs.coords_[1], coords_[2] + rhs.coords_[2],
            coords_[3] + rhs.coords_[3]};
}

LieElement LieElement::scale(const FieldElement& c) const {
    return {coords_[0] * c, coords_[1] * c, coords_[2] * c, coords_[3] * c};
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    require_same_spec(x.spec(), y.spec());
    const FieldElement zero = FieldElement::zero(x.spec());
    // l a' + l' a; characteristic 2 swallows the sign.
    return {x.lambda() * y.a4() + y.lambda() * x.a4(),
            x.lambda() * y.a2() + y.lambda() * x.a2(),
            x.lambda() * y.a0() + y.lambda() * x.a0(), zero};
}

LieElement p_map(const LieElement& x) { return x.scale(x.lambda()); }

ProductLieElement bracket(const ProductLieElement& x, const ProductLieElement& y) {
    return {bracket(x.left, y.left), bracket(x.right, y.right)};
}

ProductLieElement p_map(const ProductLieElement& x) { return {p_map(x.left), p_map(x.right)}; }

std::optional<FieldElement> is_p_closed(const LieElement& x) {
    if (x.is_zero()) throw std::invalid_argument("the zero vector spans no line");
    return eigenvalue_by_rank(x.coords(), p_map(x).coords());
}

std::optional<FieldElement> is_p_closed(const ProductLieElement& x) {
    if (x.is_zero()) throw std::invalid_argument("the zero vector spans no line");
    const auto y = p_map(x);
    const std::array<FieldElement, 8> xs{x.left.coords()[0],  x.left.coords()[1],
                                         x.left.coords()[2],  x.left.coords()[3],
                                         x.right.coords()[0], x.right.coords()[1],
                                         x.right.coords()[2], x.right.coords()[3]};
    const std::array<FieldElement, 8> ys{y.left.coords()[0],  y.left.coords()[1],
                                         y.left.coords()[2],  y.left.coords()[3],
                                         y.right.coords()[0], y.right.coords()[1],
                                         y.right.coords()[2], y.right.coords()[3]};
    return eigenvalue_by_rank(xs, ys);
}

namespace {

LineType classify_eigenvalue(const std::optional<FieldElement>& ev) {
    if (!ev) throw std::invalid_argument("element is not 2-closed");
    return ev->is_zero() ? LineType::Alpha2 : LineType::Mu2;
}

}  // namespace

LineType classify_line(const LieElement& x) { return classify_eigenvalue(is_p_closed(x)); }

LineType classify_line(const ProductLieElement& x) { return classify_eigenvalue(is_p_closed(x)); }

const char* to_string(LineType t) { return t == LineType::Mu2 ? "mu2" : "alpha2"; }

}  // namespace km2::lie
