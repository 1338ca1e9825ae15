#include "staudt/field.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace staudt {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

GroundField GroundField::prime(std::uint64_t p) {
    if (p > (std::uint64_t(1) << 31))
        throw domain_error("prime field characteristic too large (limit 2^31)");
    if (!is_prime_u64(p))
        throw domain_error("characteristic " + std::to_string(p) + " is not prime");
    return GroundField{p};
}

std::string GroundField::describe() const {
    return is_rational() ? std::string("rationals") : "fp:" + std::to_string(p);
}

GroundField parse_field(const std::string& text) {
    if (text == "rationals" || text == "Q" || text == "q")
        return GroundField::rationals();
    if (text.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(text.substr(3));
        } catch (const std::exception&) {
            throw domain_error("malformed field descriptor: " + text);
        }
        return GroundField::prime(p);
    }
    throw domain_error("unknown field descriptor: " + text + " (expected 'rationals' or 'fp:<p>')");
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p), p prime, a != 0 mod p
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw domain_error("division by zero residue");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

} // namespace

FieldElem FieldElem::from_int(const GroundField& f, long long n) {
    if (f.is_rational()) return FieldElem(f, Rational(n));
    long long m = n % static_cast<long long>(f.p);
    if (m < 0) m += static_cast<long long>(f.p);
    return FieldElem(f, static_cast<std::uint64_t>(m));
}

FieldElem FieldElem::residue(const GroundField& f, std::uint64_t v) {
    if (f.is_rational())
        throw domain_error("residue constructor used with rational ground field");
    return FieldElem(f, v % f.p);
}

bool FieldElem::is_zero() const {
    if (field_.is_rational()) return std::get<Rational>(value_) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool FieldElem::is_one() const {
    if (field_.is_rational()) return std::get<Rational>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

const Rational& FieldElem::rat() const {
    if (!field_.is_rational())
        throw domain_error("rational value requested from residue element");
    return std::get<Rational>(value_);
}

std::uint64_t FieldElem::res() const {
    if (field_.is_rational())
        throw domain_error("residue value requested from rational element");
    return std::get<std::uint64_t>(value_);
}

void FieldElem::check_same_field(const FieldElem& o) const {
    if (field_ != o.field_)
        throw domain_error("arithmetic between elements of different ground fields (" +
                           field_.describe() + " vs " + o.field_.describe() + ")");
}

FieldElem FieldElem::operator-() const {
    if (field_.is_rational()) return FieldElem(field_, -std::get<Rational>(value_));
    std::uint64_t v = std::get<std::uint64_t>(value_);
    return FieldElem(field_, v == 0 ? 0 : field_.p - v);
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    if (field_.is_rational()) return FieldElem(field_, Rational(1) / std::get<Rational>(value_));
    return FieldElem(field_, mod_inverse(std::get<std::uint64_t>(value_), field_.p));
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_same_field(o);
    if (field_.is_rational()) {
        std::get<Rational>(value_) += std::get<Rational>(o.value_);
    } else {
        std::uint64_t v = std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(o.value_);
        if (v >= field_.p) v -= field_.p;
        value_ = v;
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    check_same_field(o);
    if (field_.is_rational()) {
        std::get<Rational>(value_) -= std::get<Rational>(o.value_);
    } else {
        std::uint64_t a = std::get<std::uint64_t>(value_);
        std::uint64_t b = std::get<std::uint64_t>(o.value_);
        value_ = a >= b ? a - b : a + field_.p - b;
    }
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    check_same_field(o);
    if (field_.is_rational()) {
        std::get<Rational>(value_) *= std::get<Rational>(o.value_);
    } else {
        value_ = mul_mod(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(o.value_), field_.p);
    }
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.field_ != b.field_) return false;
    return a.value_ == b.value_;
}

bool FieldElem::value_less(const FieldElem& a, const FieldElem& b) {
    if (a.field_ != b.field_) return a.field_.p < b.field_.p;
    if (a.field_.is_rational())
        return std::get<Rational>(a.value_) < std::get<Rational>(b.value_);
    return std::get<std::uint64_t>(a.value_) < std::get<std::uint64_t>(b.value_);
}

std::string FieldElem::str() const {
    if (field_.is_rational()) return rat().str();
    return std::to_string(res());
}

FieldEnumerator::FieldEnumerator(GroundField f) : field_(f) {}

void FieldEnumerator::reset() {
    index_ = 0;
    height_ = 0;
    pending_.clear();
    pending_pos_ = 0;
}

void FieldEnumerator::refill() {
    // all reduced n/d with max(|n|, d) == height_, ordered by (d, |n|, sign)
    pending_.clear();
    pending_pos_ = 0;
    ++height_;
    if (height_ == 1) {
        pending_.push_back(Rational(0));
        pending_.push_back(Rational(1));
        pending_.push_back(Rational(-1));
        return;
    }
    const std::uint64_t h = height_;
    for (std::uint64_t d = 1; d <= h; ++d) {
        std::uint64_t lo = (d == h) ? 1 : h; // |n| range keeping max(|n|,d)==h
        std::uint64_t hi = (d == h) ? h - 1 : h;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            if (boost::multiprecision::gcd(Integer(n), Integer(d)) != 1) continue;
            Rational q{Integer(n), Integer(d)};
            pending_.push_back(q);
            pending_.push_back(-q);
        }
    }
}

std::optional<FieldElem> FieldEnumerator::next() {
    if (!field_.is_rational()) {
        if (index_ >= field_.p) return std::nullopt;
        return FieldElem::residue(field_, index_++);
    }
    while (pending_pos_ >= pending_.size()) refill();
    return FieldElem::from_rational(pending_[pending_pos_++]);
}

FieldElem canonical_element(const GroundField& f, std::uint64_t idx) {
    FieldEnumerator e(f);
    std::optional<FieldElem> v;
    for (std::uint64_t i = 0; i <= idx; ++i) {
        v = e.next();
        if (!v) throw domain_error("canonical enumeration of " + f.describe() + " exhausted");
    }
    return *v;
}

} // namespace staudt
