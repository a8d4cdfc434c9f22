#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace km2::gf2k {

/// A binary field GF(2^k), 1 <= k <= 16, presented by an explicit irreducible
/// modulus over F2. Elements are bitmask-encoded residues: bit i of an
/// encoding is the coefficient of x^i, and encodings are canonical (< 2^k).
class FieldSpec {
public:
    static constexpr unsigned max_degree = 16;

    FieldSpec(unsigned degree, std::uint32_t modulus);

    /// GF(2), presented with modulus x.
    static FieldSpec f2();

    /// Parses "gf<2^k>:<hex modulus>", e.g. "gf16:0x13".
    static FieldSpec parse(std::string_view text);

    unsigned degree() const noexcept { return degree_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint64_t order() const noexcept { return std::uint64_t{1} << degree_; }
    std::string to_string() const;

    /// The extension field of degree factor*degree(), presented with the
    /// smallest irreducible modulus of that degree. factor*degree() <= 16.
    FieldSpec extension(unsigned factor) const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    unsigned degree_;
    std::uint32_t modulus_;
};

class FieldElement {
public:
    FieldElement(FieldSpec spec, std::uint32_t bits);

    static FieldElement zero(FieldSpec spec) { return {spec, 0}; }
    static FieldElement one(FieldSpec spec) { return {spec, 1}; }

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t bits() const noexcept { return bits_; }
    bool is_zero() const noexcept { return bits_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const { return *this + rhs; }
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    FieldElement pow(std::uint64_t exponent) const;
    FieldElement inverse() const;
    FieldElement square() const { return *this * *this; }
    /// The unique square root (Frobenius is bijective in characteristic 2).
    FieldElement sqrt() const;

    std::string to_string() const;  // hex bitmask, e.g. "0x13"

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    FieldSpec spec_;
    std::uint32_t bits_;
};

/// Maps a into the extension field `target`; requires spec.degree() to divide
/// target.degree(). The map sends x to the smallest-encoding root of the
/// source modulus in the target field, so it is deterministic.
FieldElement embed(const FieldElement& a, const FieldSpec& target);

/// Univariate polynomial over a FieldSpec, coefficients lowest degree first.
class UniPoly {
public:
    explicit UniPoly(FieldSpec field);  // the zero polynomial
    UniPoly(FieldSpec field, std::vector<std::uint32_t> coeff_bits);

    static UniPoly from_coeffs(const std::vector<FieldElement>& coeffs);
    static UniPoly monomial(FieldSpec field, unsigned degree, FieldElement coeff);

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;

    FieldElement eval(const FieldElement& x) const;

    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly scale(const FieldElement& c) const;
    UniPoly monic() const;

    UniPoly derivative() const;
    /// this(inner(x)), by Horner over polynomial arithmetic.
    UniPoly compose(const UniPoly& inner) const;

    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& num, const UniPoly& den);
    static UniPoly gcd(UniPoly a, UniPoly b);  // monic unless both zero

    /// Embeds every coefficient into the extension field `target`.
    UniPoly embedded(const FieldSpec& target) const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();

    FieldSpec field_;
    std::vector<std::uint32_t> coeffs_;
};

/// All roots in the coefficient field with multiplicities, found by exhaustive
/// evaluation and deflation. Pairs are ordered by element encoding.
std::vector<std::pair<FieldElement, int>> roots(const UniPoly& f);

/// True iff gcd(f, f') is constant. f must be nonconstant.
bool is_separable(const UniPoly& f);

/// All solutions beta of l4*beta^4 + l2*beta^2 + tau*beta = c, obtained by
/// F2-linear algebra on the additive map beta -> l4*beta^4 + l2*beta^2 +
/// tau*beta. The result is empty or a coset of the kernel; it is sorted by
/// element encoding. (l4, l2, tau) must not all be zero.
std::vector<FieldElement> additive_solve(const FieldElement& l4, const FieldElement& l2,
                                         const FieldElement& tau, const FieldElement& c);

/// Graded-lexicographic order on exponent vectors, first-declared variable
/// strongest. Vectors must have equal length.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial over a FieldSpec in a fixed ordered list of
/// at most 10 named variables. No zero coefficients are stored.
class MultiPoly {
public:
    static constexpr std::size_t max_variables = 10;

    using TermMap = std::map<std::vector<int>, std::uint32_t, GrlexLess>;

    MultiPoly(FieldSpec field, std::vector<std::string> variables);  // zero

    static MultiPoly constant(FieldSpec field, std::vector<std::string> variables,
                              const FieldElement& c);
    static MultiPoly variable(FieldSpec field, std::vector<std::string> variables,
                              std::size_t index);

    const FieldSpec& field() const noexcept { return field_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * x^exps into the polynomial, dropping the term if it cancels.
    void add_term(const std::vector<int>& exps, const FieldElement& c);
    FieldElement coeff(const std::vector<int>& exps) const;

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly scale(const FieldElement& c) const;
    MultiPoly pow(unsigned exponent) const;

    MultiPoly derivative(std::size_t var) const;
    /// Substitutes `value` (same field and variable list) for variable `var`.
    MultiPoly substitute(std::size_t var, const MultiPoly& value) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    FieldSpec field_;
    std::vector<std::string> variables_;
    TermMap terms_;
};

/// Result of the colength computation, including the data needed to audit it:
/// the Groebner basis that was used and the standard monomials it defines.
struct ColengthDetail {
    bool finite = false;
    long dimension = 0;                                // valid when finite
    std::vector<std::vector<int>> standard_monomials;  // when finite
    std::vector<MultiPoly> groebner_basis;
};

/// Vector-space dimension of k[x_1..x_n]/(gens) via a Buchberger procedure in
/// graded-lexicographic order. At most 3 variables. Returns infinite
/// (finite=false) if the ideal is not zero-dimensional; an empty or all-zero
/// generator list is infinite.
ColengthDetail ideal_colength_detail(const std::vector<MultiPoly>& gens);

/// Shorthand: the dimension, or nullopt when infinite.
std::optional<long> ideal_colength(const std::vector<MultiPoly>& gens);

}  // namespace km2::gf2k
