#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ramsey {

/// Element of GF(p^k) in packed representation: sum of c_i * p^i over the
/// coefficients c_0..c_{k-1} of the polynomial form. 0 and 1 are the additive
/// and multiplicative identities for every field.
using FieldElem = std::uint16_t;

constexpr std::uint64_t kMaxFieldOrder = 1ull << 16;

/// GF(p^k) for a prime p and p^k <= 2^16, defined by a monic irreducible
/// modulus over GF(p). Cheap to copy; arithmetic tables are shared and
/// immutable, so instances may be used concurrently.
class FieldSpec {
public:
    /// Deterministic modulus: the lexicographically least monic irreducible
    /// of degree k, comparing coefficient sequences (c_0, ..., c_{k-1}).
    FieldSpec(std::uint32_t p, std::uint32_t k);

    /// Explicit modulus (k+1 coefficients, ascending degree, monic), verified
    /// irreducible by exhaustive trial division.
    FieldSpec(std::uint32_t p, std::uint32_t k, std::vector<std::uint16_t> modulus);

    /// Skips the irreducibility check. Exists so tests can build a corrupted
    /// field and watch the axiom suite reject it.
    static FieldSpec unchecked(std::uint32_t p, std::uint32_t k,
                               std::vector<std::uint16_t> modulus);

    std::uint32_t p() const;
    std::uint32_t k() const;
    std::uint32_t q() const;
    const std::vector<std::uint16_t>& modulus() const;

    FieldElem zero() const { return 0; }
    FieldElem one() const { return 1; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;  // throws std::domain_error on 0
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    /// All q elements: packed values 0, 1, ..., q-1. First is 0, second is 1.
    std::vector<FieldElem> all_elements() const;

    /// Coefficient vector (c_0..c_{k-1}) of an element.
    std::vector<std::uint16_t> coefficients(FieldElem a) const;
    FieldElem from_coefficients(const std::vector<std::uint16_t>& coeffs) const;

    bool operator==(const FieldSpec& other) const;

    struct Data;  // implementation detail, defined in field.cpp

private:
    explicit FieldSpec(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

bool is_prime(std::uint64_t n);

/// (p, k) with n = p^k and k >= 1, when n is a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decompose(std::uint64_t n);

/// Least prime power q >= n (n >= 1); nullopt if it would exceed 2^16.
std::optional<std::uint64_t> least_prime_power_at_least(std::uint64_t n);

/// The deterministic injection of `label_count` opaque labels into a field:
/// label i maps to the i-th element of all_elements(). Rejects
/// label_count > q.
std::vector<FieldElem> inject_alphabet(std::uint64_t label_count, const FieldSpec& field);

}  // namespace ramsey
