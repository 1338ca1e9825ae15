#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "staudt/errors.hpp"

namespace staudt {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Ground field tag: the rationals (p == 0) or a prime field F_p.
// Elements of different ground fields never mix; every binary operation checks.
struct GroundField {
    std::uint64_t p = 0;

    static GroundField rationals() { return GroundField{0}; }
    static GroundField prime(std::uint64_t p);

    bool is_rational() const { return p == 0; }
    std::uint64_t characteristic() const { return p; }
    std::string describe() const;

    friend bool operator==(const GroundField& a, const GroundField& b) { return a.p == b.p; }
    friend bool operator!=(const GroundField& a, const GroundField& b) { return a.p != b.p; }
};

GroundField parse_field(const std::string& text);

// Exact scalar: an arbitrary-precision rational in lowest terms, or a residue mod p.
class FieldElem {
public:
    FieldElem() : field_{0}, value_(Rational(0)) {}

    static FieldElem from_rational(Rational r) { return FieldElem(GroundField::rationals(), std::move(r)); }
    static FieldElem from_int(const GroundField& f, long long n);
    static FieldElem residue(const GroundField& f, std::uint64_t v);
    static FieldElem zero(const GroundField& f) { return from_int(f, 0); }
    static FieldElem one(const GroundField& f) { return from_int(f, 1); }

    const GroundField& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    // Accessors throw on sort mismatch rather than returning junk.
    const Rational& rat() const;
    std::uint64_t res() const;

    FieldElem operator-() const;
    FieldElem inverse() const; // domain_error on zero

    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    // Total order usable as a container key; within one field it is the value
    // order (rationals by value, residues by representative).
    static bool value_less(const FieldElem& a, const FieldElem& b);

    std::string str() const;

private:
    FieldElem(GroundField f, Rational r) : field_(f), value_(std::move(r)) {}
    FieldElem(GroundField f, std::uint64_t v) : field_(f), value_(v) {}

    void check_same_field(const FieldElem& o) const;

    GroundField field_;
    std::variant<Rational, std::uint64_t> value_;
};

struct FieldElemValueLess {
    bool operator()(const FieldElem& a, const FieldElem& b) const { return FieldElem::value_less(a, b); }
};

// Canonical enumeration of the field: 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, ... over Q
// (height ascending, then denominator, then |numerator|, positive first);
// 0, 1, ..., p-1 over F_p (exhausted afterwards).
class FieldEnumerator {
public:
    explicit FieldEnumerator(GroundField f);

    std::optional<FieldElem> next();
    void reset();

private:
    GroundField field_;
    std::uint64_t index_ = 0;
    // Q state: pending values at the current height, already ordered.
    std::uint64_t height_ = 0;
    std::vector<Rational> pending_;
    std::size_t pending_pos_ = 0;
    void refill();
};

// idx-th element of the canonical enumeration (throws once F_p is exhausted).
FieldElem canonical_element(const GroundField& f, std::uint64_t idx);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

} // namespace staudt
