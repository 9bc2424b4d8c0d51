#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "friezelab/errors.hpp"

namespace friezelab::gf {

class Field;

/// An element of a finite field, as a value type. Carries a pointer to its
/// field so that accidental mixed-field arithmetic is detected instead of
/// silently producing garbage.
class Fe {
public:
    Fe() = default;
    Fe(const Field* f, std::uint16_t code) : f_(f), code_(code) {}

    [[nodiscard]] std::uint16_t code() const { return code_; }
    [[nodiscard]] const Field& field() const;
    [[nodiscard]] bool is_zero() const { return code_ == 0; }
    [[nodiscard]] bool is_one() const;

    [[nodiscard]] Fe inv() const;
    [[nodiscard]] Fe pow(long long e) const;

    friend Fe operator+(Fe a, Fe b);
    friend Fe operator-(Fe a, Fe b);
    friend Fe operator*(Fe a, Fe b);
    friend Fe operator/(Fe a, Fe b);
    friend Fe operator-(Fe a);
    Fe& operator+=(Fe b) { return *this = *this + b; }
    Fe& operator-=(Fe b) { return *this = *this - b; }
    Fe& operator*=(Fe b) { return *this = *this * b; }
    Fe& operator/=(Fe b) { return *this = *this / b; }

    friend bool operator==(Fe a, Fe b);
    friend bool operator!=(Fe a, Fe b) { return !(a == b); }
    /// Orders by (field pointer, code); only meaningful for container use.
    friend bool operator<(Fe a, Fe b) {
        return a.f_ != b.f_ ? a.f_ < b.f_ : a.code_ < b.code_;
    }

private:
    const Field* f_ = nullptr;
    std::uint16_t code_ = 0;
};

/// A finite field GF(q) = GF(p^e) with dense operation tables.
///
/// Elements are identified by a code in [0, q). Codes follow the canonical
/// element order: coefficient vectors (c_0, ..., c_{e-1}) of the residue
/// polynomial, constant term first, compared lexicographically. Zero is
/// always code 0. For prime fields the code is just the residue.
///
/// The modulus for e > 1 is the lexicographically smallest monic irreducible
/// polynomial of degree e under the same coefficient comparison; for e = 1 it
/// is x. Instances are cached and immortal: two calls to make_field with the
/// same q return the same object, so element field pointers stay comparable.
class Field {
public:
    [[nodiscard]] long q() const { return q_; }
    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] int e() const { return e_; }
    /// Non-leading coefficients of the modulus, constant term first.
    [[nodiscard]] const std::vector<int>& modulus() const { return modulus_; }

    [[nodiscard]] Fe zero() const { return {this, 0}; }
    [[nodiscard]] Fe one() const { return {this, one_}; }
    [[nodiscard]] Fe elem(long code) const;
    /// Builds an element from polynomial coefficients (constant term first,
    /// any length up to e, entries reduced mod p).
    [[nodiscard]] Fe from_coeffs(const std::vector<long>& c) const;
    [[nodiscard]] std::vector<int> coeffs(Fe a) const;

    /// Packed integer form used by the text formats: sum of c_j * p^j.
    /// Coincides with the residue for prime fields.
    [[nodiscard]] long io_value(Fe a) const;
    [[nodiscard]] Fe from_io(long v) const;

    // Raw-code arithmetic for hot loops. No field checks.
    [[nodiscard]] std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
        return add_[static_cast<std::size_t>(a) * q_ + b];
    }
    [[nodiscard]] std::uint16_t sub(std::uint16_t a, std::uint16_t b) const {
        return add_[static_cast<std::size_t>(a) * q_ + neg_[b]];
    }
    [[nodiscard]] std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        return mul_[static_cast<std::size_t>(a) * q_ + b];
    }
    [[nodiscard]] std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    [[nodiscard]] std::uint16_t inv(std::uint16_t a) const;
    [[nodiscard]] std::uint16_t pow(std::uint16_t a, long long e) const;
    [[nodiscard]] const std::uint16_t* add_table() const { return add_.data(); }
    [[nodiscard]] const std::uint16_t* mul_table() const { return mul_.data(); }
    [[nodiscard]] const std::uint16_t* neg_table() const { return neg_.data(); }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    friend const Field& make_field(long q);
    explicit Field(long q);

    long q_;
    int p_;
    int e_;
    std::uint16_t one_;
    std::vector<int> modulus_;
    std::vector<std::uint16_t> add_, mul_;   // q*q each
    std::vector<std::uint16_t> neg_, inv_;   // q each; inv_[0] unused
};

/// Returns the cached field with q elements.
/// Throws invalid_parameter if q is not a prime power and
/// unsupported_parameters if q exceeds the dense-table limit (1024).
const Field& make_field(long q);

/// All q elements in canonical order (zero first).
[[nodiscard]] std::vector<Fe> all_elements(const Field& f);

/// Smallest t-th root of a in canonical element order, if one exists.
/// Existence is decided by a^((q-1)/gcd(t, q-1)) == 1. Throws
/// invalid_parameter for a = 0 or t < 1.
[[nodiscard]] std::optional<Fe> nth_root(Fe a, long long t);

}  // namespace friezelab::gf
