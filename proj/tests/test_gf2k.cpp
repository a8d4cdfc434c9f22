#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "km2/gf2k.hpp"

using namespace km2::gf2k;

namespace {

FieldSpec gf2() { return FieldSpec::f2(); }
FieldSpec gf4() { return {2, 0x7}; }    // x^2+x+1
FieldSpec gf8() { return {3, 0xb}; }    // x^3+x+1
FieldSpec gf16() { return {4, 0x13}; }  // x^4+x+1

FieldElement fe(const FieldSpec& f, std::uint32_t bits) { return {f, bits}; }

// Brute-force root finder: evaluate at every field element, multiplicities by
// repeated exact division against (x + e) using only eval/arithmetic.
std::vector<std::pair<std::uint32_t, int>> brute_roots(const UniPoly& f) {
    std::vector<std::pair<std::uint32_t, int>> found;
    const FieldSpec field = f.field();
    UniPoly work = f;
    for (std::uint64_t b = 0; b < field.order(); ++b) {
        const FieldElement e(field, static_cast<std::uint32_t>(b));
        int mult = 0;
        while (work.degree() > 0 && work.eval(e).is_zero()) {
            work = UniPoly::divrem(work, UniPoly(field, {e.bits(), 1})).first;
            ++mult;
        }
        if (mult) found.emplace_back(static_cast<std::uint32_t>(b), mult);
    }
    return found;
}

// Independent colength oracle: the dimension of R/(I + m^B) computed by exact
// linear algebra in the truncated algebra R/m^B, where the ideal's image is
// the span of all truncated monomial multiples of the generators. The value
// increases with B and freezes at the true colength as soon as m^B lands in I
// (two consecutive equal values certify the plateau, by Nakayama). No
// Groebner machinery involved.
long truncated_algebra_dimension(const std::vector<MultiPoly>& gens) {
    const FieldSpec field = gens.front().field();
    const std::size_t n = gens.front().variables().size();

    auto monomials_below = [&](int bound) {
        std::vector<std::vector<int>> out;
        std::vector<int> e(n, 0);
        while (true) {
            long td = 0;
            for (int x : e) td += x;
            if (td < bound) out.push_back(e);
            std::size_t v = 0;
            while (v < n) {
                if (++e[v] < bound) break;
                e[v] = 0;
                ++v;
            }
            if (v == n) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    long prev = -1;
    for (int bound = 2; bound <= 14; ++bound) {
        const auto monos = monomials_below(bound);
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

        std::vector<std::vector<std::uint32_t>> rows;
        for (const MultiPoly& g : gens) {
            if (g.is_zero()) continue;
            for (const auto& m : monos) {
                std::vector<std::uint32_t> row(monos.size(), 0);
                bool nonzero = false;
                for (const auto& [e, c] : g.terms()) {
                    std::vector<int> s(n);
                    long td = 0;
                    for (std::size_t i = 0; i < n; ++i) {
                        s[i] = e[i] + m[i];
                        td += s[i];
                    }
                    if (td >= bound) continue;  // truncated away in R/m^B
                    row[index.at(s)] = c;
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }

        std::size_t rank = 0;
        for (std::size_t col = monos.size(); col-- > 0 && rank < rows.size();) {
            std::size_t sel = rank;
            while (sel < rows.size() && rows[sel][col] == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[rank], rows[sel]);
            const FieldElement inv = fe(field, rows[rank][col]).inverse();
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                const FieldElement factor = fe(field, rows[r][col]) * inv;
                for (std::size_t cidx = 0; cidx < monos.size(); ++cidx)
                    rows[r][cidx] =
                        (fe(field, rows[r][cidx]) + fe(field, rows[rank][cidx]) * factor).bits();
            }
            ++rank;
        }

        const long dim = static_cast<long>(monos.size()) - static_cast<long>(rank);
        if (dim == prev) return dim;
        prev = dim;
    }
    return -1;  // did not stabilize
}

}  // namespace

TEST_SUITE_BEGIN("gf2k");

TEST_CASE("field spec validation and parsing") {
    CHECK(gf16().to_string() == "gf16:0x13");
    CHECK(FieldSpec::parse("gf16:0x13") == gf16());
    CHECK(FieldSpec::parse("gf4:7") == gf4());
    CHECK(FieldSpec::f2().order() == 2);

    CHECK_THROWS_AS(FieldSpec(4, 0x14), std::invalid_argument);   // x^4+x^2 reducible
    CHECK_THROWS_AS(FieldSpec(4, 0x7), std::invalid_argument);    // wrong degree
    CHECK_THROWS_AS(FieldSpec(17, 0x3), std::invalid_argument);   // over the cap
    CHECK_THROWS_AS(FieldSpec::parse("gf15:0x13"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("gq16:0x13"), std::invalid_argument);
}

TEST_CASE("extension picks the smallest irreducible modulus") {
    CHECK(gf2().extension(2) == FieldSpec(2, 0x7));
    CHECK(gf2().extension(4) == gf16());
    CHECK(gf4().extension(2) == gf16());
    CHECK_THROWS_AS(gf16().extension(5), std::invalid_argument);
}

TEST_CASE("base arithmetic") {
    const auto F4 = gf4();
    const auto t = fe(F4, 0x2);
    CHECK(t * t == fe(F4, 0x3));  // t^2 = t+1

    const auto F16 = gf16();
    CHECK(fe(F16, 0x2).pow(4) == fe(F16, 0x3));  // t^4 = t+1

    for (std::uint32_t b = 0; b < 16; ++b) {
        const auto a = fe(F16, b);
        CHECK((a + a).is_zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == FieldElement::one(F16));
            CHECK(a.pow(15) == FieldElement::one(F16));
        }
        CHECK(a.sqrt().square() == a);
    }

    CHECK_THROWS_AS(fe(F16, 1) / fe(F16, 0), std::domain_error);
    CHECK_THROWS_AS(fe(F16, 0).inverse(), std::domain_error);
    CHECK_THROWS_AS(fe(F16, 1) + fe(F4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldElement(F4, 4), std::invalid_argument);
}

TEST_CASE("frobenius is additive") {
    for (const FieldSpec& f : {gf2(), gf4(), gf8(), gf16()}) {
        for (std::uint64_t a = 0; a < f.order(); ++a)
            for (std::uint64_t b = 0; b < f.order(); ++b) {
                const auto x = fe(f, static_cast<std::uint32_t>(a));
                const auto y = fe(f, static_cast<std::uint32_t>(b));
                CHECK((x + y).square() == x.square() + y.square());
            }
    }
    // Randomized for a larger field.
    const FieldSpec f12 = gf2().extension(12);
    std::mt19937 rng(20230517);
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(f12.order() - 1));
    for (int i = 0; i < 2000; ++i) {
        const auto x = fe(f12, dist(rng));
        const auto y = fe(f12, dist(rng));
        CHECK((x + y).square() == x.square() + y.square());
    }
}

TEST_CASE("embedding is a field homomorphism") {
    const auto F4 = gf4(), F16 = gf16();
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            const auto x = fe(F4, a), y = fe(F4, b);
            CHECK(embed(x + y, F16) == embed(x, F16) + embed(y, F16));
            CHECK(embed(x * y, F16) == embed(x, F16) * embed(y, F16));
        }
    CHECK(embed(FieldElement::one(F4), F16) == FieldElement::one(F16));
    // The image of t satisfies the GF(4) modulus.
    const auto im = embed(fe(F4, 0x2), F16);
    CHECK((im.square() + im + FieldElement::one(F16)).is_zero());
    CHECK_THROWS_AS(embed(fe(gf8(), 0x2), F16), std::invalid_argument);
}

TEST_CASE("unipoly divrem and gcd") {
    const auto F4 = gf4();
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> dist(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint32_t> fa(1 + rng() % 6), fb(1 + rng() % 4);
        for (auto& c : fa) c = dist(rng);
        for (auto& c : fb) c = dist(rng);
        const UniPoly f(F4, fa), g(F4, fb);
        if (g.is_zero()) continue;
        const auto [q, r] = UniPoly::divrem(f, g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
    CHECK_THROWS_AS(UniPoly::divrem(UniPoly(F4, {1}), UniPoly(F4)), std::domain_error);
}

TEST_CASE("roots with multiplicities") {
    const auto F4 = gf4();
    // x^4 + x over GF(4): every element is a root, each simple.
    const UniPoly f(F4, {0, 1, 0, 0, 1});
    const auto rs = roots(f);
    REQUIRE(rs.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rs[i].first.bits() == i);
        CHECK(rs[i].second == 1);
    }

    // x^2 + 1 = (x+1)^2 over GF(2).
    const auto rs2 = roots(UniPoly(gf2(), {1, 0, 1}));
    REQUIRE(rs2.size() == 1);
    CHECK(rs2[0].first.bits() == 1);
    CHECK(rs2[0].second == 2);

    // u^4+u^2+u = u(u^3+u+1): the cubic factor splits over GF(8) but has no
    // root in GF(16), so the root counts differ between the two fields.
    const UniPoly g8(gf8(), {0, 1, 1, 0, 1});
    const auto rs8 = roots(g8);
    CHECK(rs8.size() == 4);
    for (const auto& [e, m] : rs8) CHECK(m == 1);
    CHECK(is_separable(g8));
    const auto rs16 = roots(UniPoly(gf16(), {0, 1, 1, 0, 1}));
    REQUIRE(rs16.size() == 1);
    CHECK(rs16[0].first.is_zero());

    CHECK_THROWS_AS(roots(UniPoly(F4)), std::invalid_argument);

    // Cross-check against the independent brute-force finder.
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::uint32_t> dist(0, 15);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint32_t> c(1 + rng() % 6);
        for (auto& x : c) x = dist(rng);
        const UniPoly p(gf16(), c);
        if (p.is_zero()) continue;
        const auto got = roots(p);
        const auto want = brute_roots(p);
        REQUIRE(got.size() == want.size());
        int total = 0;
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].first.bits() == want[i].first);
            CHECK(got[i].second == want[i].second);
            total += got[i].second;
        }
        CHECK(total <= p.degree());
    }
}

TEST_CASE("separability") {
    const auto F4 = gf4();
    // l4 b^4 + l2 b^2 + tau b + c with tau != 0: derivative is the unit tau.
    const UniPoly sep(F4, {0x3, 0x2, 0x1, 0, 0x2});
    CHECK(is_separable(sep));
    // b^4 + b^2 has zero derivative.
    CHECK_FALSE(is_separable(UniPoly(F4, {0, 0, 1, 0, 1})));
    CHECK(is_separable(UniPoly(F4, {1, 1})));
    CHECK_THROWS_AS(is_separable(UniPoly(F4, {1})), std::invalid_argument);

    // Separable implies all multiplicities are 1.
    for (const UniPoly& p : {sep, UniPoly(F4, {0, 1, 0, 0, 1})}) {
        if (!is_separable(p)) continue;
        for (const auto& [e, m] : roots(p)) CHECK(m == 1);
    }
}

TEST_CASE("additive solve") {
    const auto F16 = gf16();
    const auto one16 = FieldElement::one(F16);
    const auto zero16 = FieldElement::zero(F16);

    // beta^4 + beta = 0: the four elements of GF(4) inside GF(16).
    const auto sols = additive_solve(one16, zero16, one16, zero16);
    REQUIRE(sols.size() == 4);
    for (const auto& s : sols) CHECK((s.pow(4) + s).is_zero());

    const auto F2 = gf2();
    const auto sols2 = additive_solve(FieldElement::one(F2), FieldElement::zero(F2),
                                      FieldElement::one(F2), FieldElement::zero(F2));
    REQUIRE(sols2.size() == 2);

    const auto F4 = gf4();
    const auto sols3 = additive_solve(FieldElement::zero(F4), FieldElement::one(F4),
                                      FieldElement::zero(F4), FieldElement::one(F4));
    REQUIRE(sols3.size() == 1);
    CHECK(sols3[0] == FieldElement::one(F4));

    CHECK_THROWS_AS(additive_solve(zero16, zero16, zero16, one16), std::invalid_argument);
}

TEST_CASE("additive solve solution sets are kernel cosets") {
    const auto F16 = gf16();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::uint32_t> dist(0, 15);
    for (int trial = 0; trial < 200; ++trial) {
        const auto l4 = fe(F16, dist(rng));
        const auto l2 = fe(F16, dist(rng));
        const auto tau = fe(F16, dist(rng));
        const auto c = fe(F16, dist(rng));
        if (l4.is_zero() && l2.is_zero() && tau.is_zero()) continue;

        std::vector<std::uint32_t> brute;
        for (std::uint32_t b = 0; b < 16; ++b) {
            const auto x = fe(F16, b);
            if (l4 * x.pow(4) + l2 * x.square() + tau * x == c) brute.push_back(b);
        }
        const auto got = additive_solve(l4, l2, tau, c);
        REQUIRE(got.size() == brute.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].bits() == brute[i]);

        const auto kernel =
            additive_solve(l4, l2, tau, FieldElement::zero(F16));
        CHECK((kernel.size() == 1 || kernel.size() == 2 || kernel.size() == 4));
        CHECK((got.empty() || got.size() == kernel.size()));
        if (!got.empty()) {
            // Differences of solutions enumerate the kernel exactly.
            std::set<std::uint32_t> diffs;
            for (const auto& s : got) diffs.insert((s + got.front()).bits());
            std::set<std::uint32_t> kbits;
            for (const auto& s : kernel) kbits.insert(s.bits());
            CHECK(diffs == kbits);
        }
    }
}

TEST_CASE("multipoly arithmetic basics") {
    const auto F4 = gf4();
    const std::vector<std::string> vars{"x", "y"};
    const auto x = MultiPoly::variable(F4, vars, 0);
    const auto y = MultiPoly::variable(F4, vars, 1);
    const auto one = MultiPoly::constant(F4, vars, FieldElement::one(F4));

    const auto p = (x + y) * (x + y);
    CHECK(p == x * x + y * y);  // char 2

    const auto q = x * x * y + y;
    CHECK(q.derivative(0).is_zero());
    CHECK(q.derivative(1) == x * x + one);

    // (x^2 y + y) with y := x^2 gives x^4 + x^2.
    const auto sub = q.substitute(1, x * x);
    CHECK(sub == x.pow(4) + x * x);

    CHECK_THROWS_AS(MultiPoly(F4, {}), std::invalid_argument);
    MultiPoly bad(F4, vars);
    CHECK_THROWS_AS(bad.add_term({1}, FieldElement::one(F4)), std::invalid_argument);
}

TEST_CASE("ideal colength on the named instances") {
    const auto F2 = gf2();
    const std::vector<std::string> vars{"x", "y", "z"};
    const auto one = FieldElement::one(F2);
    const auto x = MultiPoly::variable(F2, vars, 0);
    const auto y = MultiPoly::variable(F2, vars, 1);
    const auto z = MultiPoly::variable(F2, vars, 2);

    CHECK(ideal_colength({x, y, z}) == 1);

    // z^2 + xy with its partials y and x.
    const auto f_a1 = z * z + x * y;
    CHECK(ideal_colength({f_a1, f_a1.derivative(0), f_a1.derivative(1), f_a1.derivative(2)}) == 2);

    // z^2 + x^2 y + x y^2 with partials y^2 and x^2.
    const auto f_d4 = z * z + x * x * y + x * y * y;
    CHECK(f_d4.derivative(0) == y * y);
    CHECK(f_d4.derivative(1) == x * x);
    CHECK(ideal_colength({f_d4, y * y, x * x}) == 8);

    CHECK_FALSE(ideal_colength({}).has_value());
    CHECK_FALSE(ideal_colength({f_a1}).has_value());  // not zero-dimensional
    CHECK_FALSE(ideal_colength({MultiPoly(F2, vars)}).has_value());

    MultiPoly too_many(F2, {"a", "b", "c", "d"});
    too_many.add_term({1, 0, 0, 0}, one);
    CHECK_THROWS_AS(ideal_colength({too_many}), std::invalid_argument);
}

TEST_CASE("colength matches the Macaulay oracle and standard monomials are an order ideal") {
    const auto F2 = gf2();
    const auto F16 = gf16();
    const std::vector<std::string> vars{"x", "y", "z"};

    const auto build = [&](const FieldSpec& f) {
        const auto x = MultiPoly::variable(f, vars, 0);
        const auto y = MultiPoly::variable(f, vars, 1);
        const auto z = MultiPoly::variable(f, vars, 2);
        return std::tuple(x, y, z);
    };

    std::vector<std::vector<MultiPoly>> instances;
    {
        const auto [x, y, z] = build(F2);
        const auto f = z * z + x * y;
        instances.push_back({f, y, x});
        const auto g = z * z + x * x * y + x * y * y;
        instances.push_back({g, y * y, x * x});
        instances.push_back({x * x + y, y * y, z});
    }
    {
        const auto [x, y, z] = build(F16);
        const auto t = MultiPoly::constant(F16, vars, fe(F16, 0x2));
        instances.push_back({x * x * x + t * y, y * y, z + x});
    }

    for (const auto& gens : instances) {
        const auto detail = ideal_colength_detail(gens);
        REQUIRE(detail.finite);
        CHECK(detail.dimension <= 20);
        CHECK(detail.dimension == truncated_algebra_dimension(gens));

        // Order-ideal property: every divisor of a standard monomial is standard.
        std::set<std::vector<int>> standard(detail.standard_monomials.begin(),
                                            detail.standard_monomials.end());
        for (const auto& e : standard) {
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                auto d = e;
                d[v] -= 1;
                CHECK(standard.count(d) == 1);
            }
        }
    }
}

TEST_SUITE_END();
