#include "ramsey/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Dense polynomials over GF(p), little-endian coefficients.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by a monic divisor d (degree >= 1), in place.
void mod_by(Poly& f, const Poly& d, std::uint32_t p) {
    const std::size_t dd = d.size() - 1;
    while (f.size() > dd) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dd;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dd; ++i) {
                std::uint64_t cur = f[shift + i];
                cur = (cur + static_cast<std::uint64_t>(p) * p -
                       static_cast<std::uint64_t>(lead) * d[i]) % p;
                f[shift + i] = static_cast<std::uint32_t>(cur);
            }
        }
        f.pop_back();
        trim(f);
        if (f.size() <= dd) break;
    }
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    trim(out);
    return out;
}

bool divides(const Poly& divisor, Poly f, std::uint32_t p) {
    mod_by(f, divisor, p);
    return f.empty();
}

// Exhaustive trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    if (f[0] == 0) return false;  // root at 0
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            Poly divisor(d + 1, 0);
            divisor[d] = 1;
            std::uint64_t rest = m;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (divides(divisor, f, p)) return false;
        }
    }
    return true;
}

std::uint64_t checked_pow(std::uint32_t p, std::uint32_t k) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) return 0;
    }
    return q;
}

}  // namespace

struct FieldSpec::Data {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint16_t> modulus;  // k+1 coefficients, monic

    // Full operation tables for small fields; empty above the threshold.
    static constexpr std::uint32_t kTableLimit = 512;
    std::vector<FieldElem> add_table;  // q*q
    std::vector<FieldElem> mul_table;  // q*q
    std::vector<FieldElem> neg_table;  // q
    std::vector<FieldElem> inv_table;  // q, 0 where no inverse was found

    std::vector<std::uint32_t> digits(FieldElem a) const {
        std::vector<std::uint32_t> out(k, 0);
        std::uint32_t rest = a;
        for (std::uint32_t i = 0; i < k; ++i) {
            out[i] = rest % p;
            rest /= p;
        }
        return out;
    }

    FieldElem pack(const std::vector<std::uint32_t>& coeffs) const {
        std::uint64_t value = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) value = value * p + coeffs[i];
        return static_cast<FieldElem>(value);
    }

    FieldElem raw_add(FieldElem a, FieldElem b) const {
        auto da = digits(a), db = digits(b);
        for (std::uint32_t i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
        return pack(da);
    }

    FieldElem raw_neg(FieldElem a) const {
        auto da = digits(a);
        for (std::uint32_t i = 0; i < k; ++i) da[i] = (p - da[i]) % p;
        return pack(da);
    }

    FieldElem raw_mul(FieldElem a, FieldElem b) const {
        Poly pa = digits(a);
        Poly pb = digits(b);
        trim(pa);
        trim(pb);
        Poly prod = poly_mul(pa, pb, p);
        Poly mod(modulus.begin(), modulus.end());
        mod_by(prod, mod, p);
        prod.resize(k, 0);
        std::vector<std::uint32_t> coeffs(prod.begin(), prod.end());
        return pack(coeffs);
    }

    void build_tables() {
        if (q > kTableLimit) return;
        add_table.resize(static_cast<std::size_t>(q) * q);
        mul_table.resize(static_cast<std::size_t>(q) * q);
        neg_table.resize(q);
        inv_table.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a) {
            neg_table[a] = raw_neg(static_cast<FieldElem>(a));
            for (std::uint32_t b = 0; b < q; ++b) {
                const std::size_t at = static_cast<std::size_t>(a) * q + b;
                add_table[at] = raw_add(static_cast<FieldElem>(a), static_cast<FieldElem>(b));
                const FieldElem prod = raw_mul(static_cast<FieldElem>(a), static_cast<FieldElem>(b));
                mul_table[at] = prod;
                if (prod == 1) inv_table[a] = static_cast<FieldElem>(b);
            }
        }
    }
};

namespace {

std::shared_ptr<const FieldSpec::Data> make_data(std::uint32_t p, std::uint32_t k,
                                                 std::vector<std::uint16_t> modulus,
                                                 bool verify) {
    if (!is_prime(p)) throw SpecError("field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw SpecError("field degree must be >= 1");
    const std::uint64_t q = checked_pow(p, k);
    if (q == 0)
        throw SpecError("field order p^k exceeds the 2^16 cap (p=" + std::to_string(p) +
                        ", k=" + std::to_string(k) + ")");
    if (modulus.size() != k + 1) throw SpecError("modulus must have k+1 coefficients");
    if (modulus.back() != 1) throw SpecError("modulus must be monic");
    for (auto c : modulus)
        if (c >= p) throw SpecError("modulus coefficient not reduced mod p");
    if (verify) {
        Poly f(modulus.begin(), modulus.end());
        if (!is_irreducible(f, p))
            throw SpecError("modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    auto data = std::make_shared<FieldSpec::Data>();
    data->p = p;
    data->k = k;
    data->q = static_cast<std::uint32_t>(q);
    data->modulus = std::move(modulus);
    data->build_tables();
    return data;
}

// Candidates in lexicographic order of (c_0, ..., c_{k-1}).
std::vector<std::uint16_t> least_irreducible_modulus(std::uint32_t p, std::uint32_t k) {
    if (k == 1) return {0, 1};  // x itself
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
        Poly f(k + 1, 0);
        f[k] = 1;
        std::uint64_t rest = m;
        for (std::uint32_t j = k; j-- > 0;) {  // c_{k-1} varies fastest, c_0 slowest
            f[j] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (is_irreducible(f, p)) {
            std::vector<std::uint16_t> out(k + 1, 0);
            for (std::uint32_t i = 0; i <= k; ++i) out[i] = static_cast<std::uint16_t>(f[i]);
            return out;
        }
    }
    throw ConsistencyError("no irreducible polynomial found (impossible over a finite field)");
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t k)
    : data_(make_data(p, k, least_irreducible_modulus(p, k), true)) {}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint16_t> modulus)
    : data_(make_data(p, k, std::move(modulus), true)) {}

FieldSpec FieldSpec::unchecked(std::uint32_t p, std::uint32_t k,
                               std::vector<std::uint16_t> modulus) {
    return FieldSpec(make_data(p, k, std::move(modulus), false));
}

std::uint32_t FieldSpec::p() const { return data_->p; }
std::uint32_t FieldSpec::k() const { return data_->k; }
std::uint32_t FieldSpec::q() const { return data_->q; }
const std::vector<std::uint16_t>& FieldSpec::modulus() const { return data_->modulus; }

FieldElem FieldSpec::add(FieldElem a, FieldElem b) const {
    const auto& d = *data_;
    if (!d.add_table.empty()) return d.add_table[static_cast<std::size_t>(a) * d.q + b];
    return d.raw_add(a, b);
}

FieldElem FieldSpec::neg(FieldElem a) const {
    const auto& d = *data_;
    if (!d.neg_table.empty()) return d.neg_table[a];
    return d.raw_neg(a);
}

FieldElem FieldSpec::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldSpec::mul(FieldElem a, FieldElem b) const {
    const auto& d = *data_;
    if (!d.mul_table.empty()) return d.mul_table[static_cast<std::size_t>(a) * d.q + b];
    return d.raw_mul(a, b);
}

FieldElem FieldSpec::inv(FieldElem a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    const auto& d = *data_;
    if (!d.inv_table.empty()) return d.inv_table[a];
    return pow(a, d.q - 2);
}

FieldElem FieldSpec::pow(FieldElem a, std::uint64_t e) const {
    FieldElem result = 1;
    FieldElem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<FieldElem> FieldSpec::all_elements() const {
    std::vector<FieldElem> out(data_->q);
    for (std::uint32_t v = 0; v < data_->q; ++v) out[v] = static_cast<FieldElem>(v);
    return out;
}

std::vector<std::uint16_t> FieldSpec::coefficients(FieldElem a) const {
    auto digits = data_->digits(a);
    return std::vector<std::uint16_t>(digits.begin(), digits.end());
}

FieldElem FieldSpec::from_coefficients(const std::vector<std::uint16_t>& coeffs) const {
    if (coeffs.size() != data_->k) throw SpecError("element needs exactly k coefficients");
    std::vector<std::uint32_t> digits;
    digits.reserve(coeffs.size());
    for (auto c : coeffs) {
        if (c >= data_->p) throw SpecError("element coefficient not reduced mod p");
        digits.push_back(c);
    }
    return data_->pack(digits);
}

bool FieldSpec::operator==(const FieldSpec& other) const {
    return data_->p == other.data_->p && data_->k == other.data_->k &&
           data_->modulus == other.data_->modulus;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decompose(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        std::uint32_t k = 0;
        std::uint64_t rest = n;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (rest != 1) return std::nullopt;
        return std::make_pair(static_cast<std::uint32_t>(p), k);
    }
    // n itself is prime
    return std::make_pair(static_cast<std::uint32_t>(n), 1u);
}

std::optional<std::uint64_t> least_prime_power_at_least(std::uint64_t n) {
    for (std::uint64_t q = std::max<std::uint64_t>(n, 2); q <= kMaxFieldOrder; ++q)
        if (prime_power_decompose(q)) return q;
    return std::nullopt;
}

std::vector<FieldElem> inject_alphabet(std::uint64_t label_count, const FieldSpec& field) {
    if (label_count > field.q())
        throw SpecError("alphabet of size " + std::to_string(label_count) +
                        " does not inject into GF(" + std::to_string(field.q()) + ")");
    std::vector<FieldElem> out(static_cast<std::size_t>(label_count));
    for (std::uint64_t i = 0; i < label_count; ++i) out[i] = static_cast<FieldElem>(i);
    return out;
}

}  // namespace ramsey
