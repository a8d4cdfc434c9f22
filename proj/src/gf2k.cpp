#include "km2/gf2k.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace km2::gf2k {

namespace {

// Polynomials over F2 as bitmasks, bit i = coefficient of x^i.

int f2_degree(std::uint64_t p) {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

std::uint64_t f2_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t f2_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = f2_degree(m);
    for (int d = f2_degree(a); d >= dm; d = f2_degree(a)) a ^= m << (d - dm);
    return a;
}

bool f2_irreducible(std::uint32_t mask, unsigned k) {
    if (k == 1) return true;
    for (unsigned d = 1; 2 * d <= k; ++d) {
        for (std::uint64_t q = std::uint64_t{1} << d; q < (std::uint64_t{2} << d); ++q) {
            if (f2_mod(mask, q) == 0) return false;
        }
    }
    return true;
}

std::uint32_t smallest_irreducible(unsigned degree) {
    for (std::uint32_t m = std::uint32_t{1} << degree; m < (std::uint32_t{2} << degree); ++m) {
        if (f2_irreducible(m, degree)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

void require_same_spec(const FieldSpec& a, const FieldSpec& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what) + ": mismatched field specs");
}

}  // namespace

FieldSpec::FieldSpec(unsigned degree, std::uint32_t modulus)
    : degree_(degree), modulus_(modulus) {
    if (degree < 1 || degree > max_degree)
        throw std::invalid_argument("field degree must be in [1, 16]");
    if (f2_degree(modulus) != static_cast<int>(degree))
        throw std::invalid_argument("modulus must have degree equal to the field degree");
    if (!f2_irreducible(modulus, degree))
        throw std::invalid_argument("modulus is reducible over F2");
}

FieldSpec FieldSpec::f2() { return FieldSpec(1, 0x2); }

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text.substr(0, 2) != "gf") throw std::invalid_argument("field spec must start with 'gf'");
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("field spec must look like gf<order>:<hex modulus>");
    const std::string order_str(text.substr(2, colon - 2));
    std::string mod_str(text.substr(colon + 1));
    std::size_t pos = 0;
    unsigned long order = 0;
    try {
        order = std::stoul(order_str, &pos, 10);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field order in spec string");
    }
    if (pos != order_str.size() || order < 2 || (order & (order - 1)) != 0)
        throw std::invalid_argument("field order must be a power of two");
    unsigned degree = 0;
    while ((order >> degree) != 1) ++degree;
    if (mod_str.rfind("0x", 0) == 0 || mod_str.rfind("0X", 0) == 0) mod_str = mod_str.substr(2);
    unsigned long mod = 0;
    try {
        mod = std::stoul(mod_str, &pos, 16);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad hex modulus in spec string");
    }
    if (pos != mod_str.size()) throw std::invalid_argument("bad hex modulus in spec string");
    return FieldSpec(degree, static_cast<std::uint32_t>(mod));
}

std::string FieldSpec::to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "gf%llu:0x%x", static_cast<unsigned long long>(order()),
                  modulus_);
    return buf;
}

FieldSpec FieldSpec::extension(unsigned factor) const {
    if (factor == 0) throw std::invalid_argument("extension factor must be positive");
    if (factor == 1) return *this;
    const unsigned n = degree_ * factor;
    if (n > max_degree) throw std::invalid_argument("extension degree exceeds the k <= 16 cap");
    return FieldSpec(n, smallest_irreducible(n));
}

FieldElement::FieldElement(FieldSpec spec, std::uint32_t bits) : spec_(spec), bits_(bits) {
    if (bits >= spec.order()) throw std::invalid_argument("element encoding out of range");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_spec(spec_, rhs.spec_, "add");
    return {spec_, bits_ ^ rhs.bits_};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_spec(spec_, rhs.spec_, "mul");
    const std::uint64_t prod = f2_mul(bits_, rhs.bits_);
    return {spec_, static_cast<std::uint32_t>(f2_mod(prod, spec_.modulus()))};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    require_same_spec(spec_, rhs.spec_, "div");
    return *this * rhs.inverse();
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    FieldElement base = *this;
    FieldElement acc = one(spec_);
    while (exponent) {
        if (exponent & 1) acc = acc * base;
        base = base * base;
        exponent >>= 1;
    }
    return acc;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in GF(2^k)");
    return pow(spec_.order() - 2);
}

FieldElement FieldElement::sqrt() const {
    return pow(spec_.order() / 2);  // x -> x^(2^(k-1)) inverts Frobenius
}

std::string FieldElement::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", bits_);
    return buf;
}

FieldElement embed(const FieldElement& a, const FieldSpec& target) {
    const FieldSpec& src = a.spec();
    if (src == target) return a;
    if (target.degree() % src.degree() != 0)
        throw std::invalid_argument("no embedding: source degree does not divide target degree");

    static std::map<std::tuple<unsigned, std::uint32_t, unsigned, std::uint32_t>, std::uint32_t>
        root_cache;
    static std::mutex cache_mutex;

    const auto key = std::make_tuple(src.degree(), src.modulus(), target.degree(), target.modulus());
    std::uint32_t root_bits = 0;
    bool have_root = false;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = root_cache.find(key);
        if (it != root_cache.end()) {
            root_bits = it->second;
            have_root = true;
        }
    }
    if (!have_root) {
        // Smallest-encoding root of the source modulus in the target field.
        bool found = false;
        for (std::uint64_t cand = 0; cand < target.order(); ++cand) {
            FieldElement t(target, static_cast<std::uint32_t>(cand));
            FieldElement value = FieldElement::zero(target);
            for (int i = f2_degree(src.modulus()); i >= 0; --i) {
                value = value * t;
                if ((src.modulus() >> i) & 1) value += FieldElement::one(target);
            }
            if (value.is_zero()) {
                root_bits = static_cast<std::uint32_t>(cand);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("modulus has no root in the target field");
        std::lock_guard<std::mutex> lock(cache_mutex);
        root_cache.emplace(key, root_bits);
    }

    const FieldElement root(target, root_bits);
    FieldElement result = FieldElement::zero(target);
    for (int i = 31; i >= 0; --i) {
        result = result * root;
        if ((a.bits() >> i) & 1) result += FieldElement::one(target);
    }
    return result;
}

UniPoly::UniPoly(FieldSpec field) : field_(field) {}

UniPoly::UniPoly(FieldSpec field, std::vector<std::uint32_t> coeff_bits)
    : field_(field), coeffs_(std::move(coeff_bits)) {
    for (std::uint32_t c : coeffs_) {
        if (c >= field_.order()) throw std::invalid_argument("coefficient encoding out of range");
    }
    trim();
}

UniPoly UniPoly::from_coeffs(const std::vector<FieldElement>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("from_coeffs needs at least one coefficient");
    std::vector<std::uint32_t> bits;
    bits.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        require_same_spec(c.spec(), coeffs.front().spec(), "from_coeffs");
        bits.push_back(c.bits());
    }
    return UniPoly(coeffs.front().spec(), std::move(bits));
}

UniPoly UniPoly::monomial(FieldSpec field, unsigned degree, FieldElement coeff) {
    require_same_spec(field, coeff.spec(), "monomial");
    std::vector<std::uint32_t> bits(degree + 1, 0);
    bits[degree] = coeff.bits();
    return UniPoly(field, std::move(bits));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldElement UniPoly::coeff(std::size_t i) const {
    return {field_, i < coeffs_.size() ? coeffs_[i] : 0};
}

FieldElement UniPoly::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return {field_, coeffs_.back()};
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    require_same_spec(field_, x.spec(), "eval");
    FieldElement acc = FieldElement::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + FieldElement(field_, *it);
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    require_same_spec(field_, rhs.field_, "poly add");
    std::vector<std::uint32_t> bits(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        std::uint32_t c = 0;
        if (i < coeffs_.size()) c ^= coeffs_[i];
        if (i < rhs.coeffs_.size()) c ^= rhs.coeffs_[i];
        bits[i] = c;
    }
    return UniPoly(field_, std::move(bits));
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    require_same_spec(field_, rhs.field_, "poly mul");
    if (is_zero() || rhs.is_zero()) return UniPoly(field_);
    std::vector<FieldElement> acc(coeffs_.size() + rhs.coeffs_.size() - 1,
                                  FieldElement::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const FieldElement a(field_, coeffs_[i]);
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            acc[i + j] += a * FieldElement(field_, rhs.coeffs_[j]);
        }
    }
    return from_coeffs(acc);
}

UniPoly UniPoly::scale(const FieldElement& c) const {
    require_same_spec(field_, c.spec(), "poly scale");
    std::vector<std::uint32_t> bits;
    bits.reserve(coeffs_.size());
    for (std::uint32_t b : coeffs_) bits.push_back((FieldElement(field_, b) * c).bits());
    return UniPoly(field_, std::move(bits));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scale(leading().inverse());
}

UniPoly UniPoly::derivative() const {
    std::vector<std::uint32_t> bits;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) bits.push_back(i % 2 ? coeffs_[i] : 0);
    return UniPoly(field_, std::move(bits));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    require_same_spec(field_, inner.field_, "compose");
    UniPoly acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner;
        acc = acc + UniPoly(field_, {*it});
    }
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& num, const UniPoly& den) {
    require_same_spec(num.field_, den.field_, "divrem");
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly rem = num;
    std::vector<std::uint32_t> quot(num.coeffs_.size(), 0);
    const FieldElement lead_inv = den.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        const int shift = rem.degree() - den.degree();
        const FieldElement factor = rem.leading() * lead_inv;
        quot[shift] = factor.bits();
        rem = rem + UniPoly::monomial(num.field_, shift, factor) * den;
    }
    return {UniPoly(num.field_, std::move(quot)), rem};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly UniPoly::embedded(const FieldSpec& target) const {
    std::vector<std::uint32_t> bits;
    bits.reserve(coeffs_.size());
    for (std::uint32_t c : coeffs_) bits.push_back(embed(FieldElement(field_, c), target).bits());
    return UniPoly(target, std::move(bits));
}

std::vector<std::pair<FieldElement, int>> roots(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    const FieldSpec field = f.field();
    std::vector<std::pair<FieldElement, int>> result;
    UniPoly work = f;
    for (std::uint64_t bits = 0; bits < field.order() && work.degree() > 0; ++bits) {
        const FieldElement e(field, static_cast<std::uint32_t>(bits));
        int mult = 0;
        while (work.degree() > 0 && work.eval(e).is_zero()) {
            const UniPoly linear(field, {e.bits(), 1});  // x + e
            auto [q, r] = UniPoly::divrem(work, linear);
            if (!r.is_zero()) throw std::logic_error("deflation left a remainder");
            work = std::move(q);
            ++mult;
        }
        if (mult > 0) result.emplace_back(e, mult);
    }
    return result;
}

bool is_separable(const UniPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_separable needs a nonconstant polynomial");
    return UniPoly::gcd(f, f.derivative()).degree() == 0;
}

std::vector<FieldElement> additive_solve(const FieldElement& l4, const FieldElement& l2,
                                         const FieldElement& tau, const FieldElement& c) {
    const FieldSpec field = l4.spec();
    require_same_spec(field, l2.spec(), "additive_solve");
    require_same_spec(field, tau.spec(), "additive_solve");
    require_same_spec(field, c.spec(), "additive_solve");
    if (l4.is_zero() && l2.is_zero() && tau.is_zero())
        throw std::invalid_argument("additive_solve: all three coefficients are zero");

    const unsigned k = field.degree();
    const auto image = [&](const FieldElement& b) {
        const FieldElement b2 = b.square();
        return l4 * b2.square() + l2 * b2 + tau * b;
    };

    // Row i of the system: bit i of l4*b^4 + l2*b^2 + tau*b over the basis
    // columns, augmented with bit i of c.
    std::vector<std::uint64_t> rows(k, 0);
    for (unsigned j = 0; j < k; ++j) {
        const std::uint32_t col = image(FieldElement(field, std::uint32_t{1} << j)).bits();
        for (unsigned i = 0; i < k; ++i)
            if ((col >> i) & 1) rows[i] |= std::uint64_t{1} << j;
    }
    for (unsigned i = 0; i < k; ++i)
        if ((c.bits() >> i) & 1) rows[i] |= std::uint64_t{1} << k;

    // Gaussian elimination over F2.
    std::vector<int> pivot_col(k, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < k && rank < k; ++col) {
        unsigned sel = rank;
        while (sel < k && !((rows[sel] >> col) & 1)) ++sel;
        if (sel == k) continue;
        std::swap(rows[rank], rows[sel]);
        for (unsigned i = 0; i < k; ++i)
            if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (unsigned i = rank; i < k; ++i)
        if ((rows[i] >> k) & 1) return {};  // inconsistent

    std::uint32_t particular = 0;
    for (unsigned i = 0; i < rank; ++i)
        if ((rows[i] >> k) & 1) particular |= std::uint32_t{1} << pivot_col[i];

    std::vector<std::uint32_t> kernel;
    std::vector<bool> is_pivot(k, false);
    for (unsigned i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    for (unsigned col = 0; col < k; ++col) {
        if (is_pivot[col]) continue;
        std::uint32_t v = std::uint32_t{1} << col;
        for (unsigned i = 0; i < rank; ++i)
            if ((rows[i] >> col) & 1) v |= std::uint32_t{1} << pivot_col[i];
        kernel.push_back(v);
    }

    std::vector<FieldElement> solutions;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << kernel.size()); ++subset) {
        std::uint32_t bits = particular;
        for (std::size_t i = 0; i < kernel.size(); ++i)
            if ((subset >> i) & 1) bits ^= kernel[i];
        solutions.emplace_back(field, bits);
    }
    std::sort(solutions.begin(), solutions.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.bits() < b.bits(); });
    solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
    for (const auto& s : solutions)
        if (!(image(s) == c)) throw std::logic_error("additive_solve produced a non-solution");
    return solutions;
}

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly::MultiPoly(FieldSpec field, std::vector<std::string> variables)
    : field_(field), variables_(std::move(variables)) {
    if (variables_.empty() || variables_.size() > max_variables)
        throw std::invalid_argument("variable list must have between 1 and 10 names");
}

MultiPoly MultiPoly::constant(FieldSpec field, std::vector<std::string> variables,
                              const FieldElement& c) {
    MultiPoly p(field, std::move(variables));
    p.add_term(std::vector<int>(p.variables_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(FieldSpec field, std::vector<std::string> variables,
                              std::size_t index) {
    MultiPoly p(field, std::move(variables));
    if (index >= p.variables_.size()) throw std::invalid_argument("variable index out of range");
    std::vector<int> exps(p.variables_.size(), 0);
    exps[index] = 1;
    p.add_term(exps, FieldElement::one(field));
    return p;
}

void MultiPoly::add_term(const std::vector<int>& exps, const FieldElement& c) {
    require_same_spec(field_, c.spec(), "add_term");
    if (exps.size() != variables_.size())
        throw std::invalid_argument("exponent vector length must match the variable count");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c.bits());
    } else {
        const std::uint32_t sum = it->second ^ c.bits();  // addition is xor
        if (sum == 0)
            terms_.erase(it);
        else
            it->second = sum;
    }
}

FieldElement MultiPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return {field_, it == terms_.end() ? 0 : it->second};
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    require_same_spec(field_, rhs.field_, "multipoly add");
    if (variables_ != rhs.variables_) throw std::invalid_argument("mismatched variable lists");
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, FieldElement(field_, c));
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    require_same_spec(field_, rhs.field_, "multipoly mul");
    if (variables_ != rhs.variables_) throw std::invalid_argument("mismatched variable lists");
    MultiPoly out(field_, variables_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, FieldElement(field_, ca) * FieldElement(field_, cb));
        }
    }
    return out;
}

MultiPoly MultiPoly::scale(const FieldElement& c) const {
    MultiPoly out(field_, variables_);
    for (const auto& [e, b] : terms_) out.add_term(e, FieldElement(field_, b) * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly acc = constant(field_, variables_, FieldElement::one(field_));
    for (unsigned i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= variables_.size()) throw std::invalid_argument("variable index out of range");
    MultiPoly out(field_, variables_);
    for (const auto& [e, c] : terms_) {
        if (e[var] % 2 == 0) continue;  // even exponents differentiate to zero in char 2
        std::vector<int> d = e;
        d[var] -= 1;
        out.add_term(d, FieldElement(field_, c));
    }
    return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
    if (var >= variables_.size()) throw std::invalid_argument("variable index out of range");
    require_same_spec(field_, value.field_, "substitute");
    if (variables_ != value.variables_) throw std::invalid_argument("mismatched variable lists");

    int max_exp = 0;
    for (const auto& [e, c] : terms_) max_exp = std::max(max_exp, e[var]);
    std::vector<MultiPoly> powers;
    powers.push_back(constant(field_, variables_, FieldElement::one(field_)));
    for (int i = 1; i <= max_exp; ++i) powers.push_back(powers.back() * value);

    MultiPoly out(field_, variables_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> rest = e;
        rest[var] = 0;
        MultiPoly term(field_, variables_);
        term.add_term(rest, FieldElement(field_, c));
        out = out + term * powers[e[var]];
    }
    return out;
}

namespace {

using Exps = std::vector<int>;

long total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0L); }

bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

const Exps& leading_exps(const MultiPoly& p) { return std::prev(p.terms().end())->first; }

MultiPoly times_monomial(const MultiPoly& p, const Exps& e, const FieldElement& c) {
    MultiPoly out(p.field(), p.variables());
    for (const auto& [pe, pc] : p.terms()) {
        Exps sum(pe.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = pe[i] + e[i];
        out.add_term(sum, FieldElement(p.field(), pc) * c);
    }
    return out;
}

MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis) {
    MultiPoly remainder(p.field(), p.variables());
    while (!p.is_zero()) {
        const Exps lead = leading_exps(p);
        const FieldElement lc = p.coeff(lead);
        bool reduced = false;
        for (const MultiPoly& g : basis) {
            const Exps& glead = leading_exps(g);
            if (!divides(glead, lead)) continue;
            Exps quot(lead.size());
            for (std::size_t i = 0; i < quot.size(); ++i) quot[i] = lead[i] - glead[i];
            p = p + times_monomial(g, quot, lc / g.coeff(glead));
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lead, lc);
            MultiPoly t(p.field(), p.variables());
            t.add_term(lead, lc);
            p = p + t;
        }
    }
    return remainder;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const Exps& lf = leading_exps(f);
    const Exps& lg = leading_exps(g);
    Exps lcm(lf.size());
    for (std::size_t i = 0; i < lcm.size(); ++i) lcm[i] = std::max(lf[i], lg[i]);
    Exps qf(lf.size()), qg(lg.size());
    for (std::size_t i = 0; i < lcm.size(); ++i) {
        qf[i] = lcm[i] - lf[i];
        qg[i] = lcm[i] - lg[i];
    }
    return times_monomial(f, qf, f.coeff(lf).inverse()) +
           times_monomial(g, qg, g.coeff(lg).inverse());
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens) {
    std::vector<MultiPoly> basis;
    for (const MultiPoly& g : gens)
        if (!g.is_zero()) basis.push_back(g.scale(g.coeff(leading_exps(g)).inverse()));

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        const Exps& li = leading_exps(basis[i]);
        const Exps& lj = leading_exps(basis[j]);
        bool coprime = true;
        for (std::size_t v = 0; v < li.size(); ++v)
            if (li[v] > 0 && lj[v] > 0) coprime = false;
        if (coprime) continue;  // S-polynomial reduces to zero
        MultiPoly r = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        r = r.scale(r.coeff(leading_exps(r)).inverse());
        basis.push_back(std::move(r));
        for (std::size_t t = 0; t + 1 < basis.size(); ++t) pairs.emplace_back(t, basis.size() - 1);
    }
    return basis;
}

}  // namespace

ColengthDetail ideal_colength_detail(const std::vector<MultiPoly>& gens) {
    ColengthDetail out;
    std::vector<MultiPoly> nonzero;
    for (const MultiPoly& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return out;  // infinite

    const std::size_t nvars = nonzero.front().variables().size();
    if (nvars > 3) throw std::invalid_argument("ideal_colength supports at most 3 variables");
    for (const MultiPoly& g : nonzero)
        if (g.variables() != nonzero.front().variables() ||
            !(g.field() == nonzero.front().field()))
            throw std::invalid_argument("generators disagree on field or variables");

    out.groebner_basis = buchberger(nonzero);

    std::vector<Exps> leads;
    for (const MultiPoly& g : out.groebner_basis) leads.push_back(leading_exps(g));

    // Unit in the ideal: the quotient is the zero ring.
    for (const Exps& l : leads) {
        if (total_degree(l) == 0) {
            out.finite = true;
            out.dimension = 0;
            return out;
        }
    }

    // Zero-dimensional iff every variable has a pure power among the leading
    // terms; the minimal pure powers bound the standard-monomial box.
    std::vector<int> bound(nvars, -1);
    for (const Exps& l : leads) {
        int var = -1;
        bool pure = true;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (l[v] == 0) continue;
            if (var != -1) pure = false;
            var = static_cast<int>(v);
        }
        if (pure && var != -1 && (bound[var] == -1 || l[var] < bound[var])) bound[var] = l[var];
    }
    for (int b : bound)
        if (b == -1) return out;  // infinite

    Exps e(nvars, 0);
    while (true) {
        bool standard = true;
        for (const Exps& l : leads)
            if (divides(l, e)) standard = false;
        if (standard) out.standard_monomials.push_back(e);
        std::size_t v = 0;
        while (v < nvars) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    out.finite = true;
    out.dimension = static_cast<long>(out.standard_monomials.size());
    return out;
}

std::optional<long> ideal_colength(const std::vector<MultiPoly>& gens) {
    const ColengthDetail d = ideal_colength_detail(gens);
    if (!d.finite) return std::nullopt;
    return d.dimension;
}

}  // namespace km2::gf2k
