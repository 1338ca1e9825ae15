#include "staudt/unifactor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace staudt {

namespace uni {

QPoly trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const QPoly& p) { return p.empty(); }

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

QPoly scale(const QPoly& a, const Rational& c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw domain_error("univariate division by zero");
    QPoly rem = a;
    if (rem.size() < b.size()) return {{}, trim(std::move(rem))};
    QPoly q(rem.size() - b.size() + 1, Rational(0));
    const Rational& lc = b.back();
    for (std::size_t k = rem.size(); k >= b.size(); --k) {
        std::size_t i = k - 1;
        if (rem[i] == 0) continue;
        Rational c = rem[i] / lc;
        q[i - (b.size() - 1)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[i - (b.size() - 1) + j] -= c * b[j];
    }
    return {trim(std::move(q)), trim(std::move(rem))};
}

bool divides(const QPoly& d, const QPoly& a) {
    if (is_zero(a)) return true;
    if (is_zero(d)) return false;
    return is_zero(divmod(a, d).second);
}

QPoly monic(const QPoly& a) {
    if (a.empty()) throw domain_error("monic form of the zero polynomial");
    return scale(a, Rational(1) / a.back());
}

QPoly gcd(QPoly a, QPoly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return monic(a);
}

QPoly derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1, Rational(0));
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long long>(i);
    return trim(std::move(r));
}

Rational eval(const QPoly& a, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = a.size(); i > 0; --i) acc = acc * x + a[i - 1];
    return acc;
}

QPoly pow(const QPoly& a, std::uint32_t n) {
    QPoly r{Rational(1)};
    for (std::uint32_t i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

std::string str(const QPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = a.size(); k > 0; --k) {
        std::size_t i = k - 1;
        if (a[i] == 0) continue;
        std::string cs = a[i].str();
        bool neg = cs[0] == '-';
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        if (i == 0) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

} // namespace uni

namespace {

using Z = Integer;
using ZPoly = std::vector<Z>;

ZPoly ztrim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Z(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return ztrim(std::move(r));
}

ZPoly zmod_reduce(ZPoly a, const Z& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    return ztrim(std::move(a));
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Z& m) {
    return zmod_reduce(zmul(a, b), m);
}

ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const Z& m) {
    ZPoly r(std::max(a.size(), b.size()), Z(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zmod_reduce(std::move(r), m);
}

ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const Z& m) {
    ZPoly r(std::max(a.size(), b.size()), Z(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zmod_reduce(std::move(r), m);
}

// division by a monic divisor with coefficients mod m
std::pair<ZPoly, ZPoly> zdivmod_monic_mod(const ZPoly& a, const ZPoly& b, const Z& m) {
    if (b.empty() || b.back() != 1) throw domain_error("internal: modular division needs a monic divisor");
    ZPoly rem = zmod_reduce(a, m);
    if (rem.size() < b.size()) return {{}, rem};
    ZPoly q(rem.size() - b.size() + 1, Z(0));
    for (std::size_t shift = q.size(); shift-- > 0;) {
        Z c = rem[shift + b.size() - 1];
        if (c == 0) continue;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            rem[shift + j] = (rem[shift + j] - c * b[j]) % m;
            if (rem[shift + j] < 0) rem[shift + j] += m;
        }
    }
    return {ztrim(std::move(q)), ztrim(std::move(rem))};
}

// ---- dense polynomials over F_p (word-size p) ----

struct FpPoly {
    std::uint64_t p;
    std::vector<std::uint64_t> c; // trimmed

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
};

FpPoly fp_trim(FpPoly a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
    return a;
}

std::uint64_t fpm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    if (a.c.empty() || b.c.empty()) return {a.p, {}};
    std::vector<std::uint64_t> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = (r[i + j] + fpm(a.c[i], b.c[j], a.p)) % a.p;
    return fp_trim({a.p, std::move(r)});
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint64_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = (r[i] + a.p - b.c[i]) % a.p;
    return fp_trim({a.p, std::move(r)});
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    if (b.c.empty()) throw domain_error("internal: F_p division by zero");
    FpPoly rem = a;
    if (rem.c.size() < b.c.size()) return {{a.p, {}}, rem};
    std::vector<std::uint64_t> q(rem.c.size() - b.c.size() + 1, 0);
    std::uint64_t inv = mod_inverse(b.c.back(), a.p);
    for (std::size_t k = rem.c.size(); k >= b.c.size(); --k) {
        std::size_t i = k - 1;
        if (i >= rem.c.size() || rem.c[i] == 0) continue;
        std::uint64_t cq = fpm(rem.c[i], inv, a.p);
        q[i - (b.c.size() - 1)] = cq;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            std::size_t idx = i - (b.c.size() - 1) + j;
            rem.c[idx] = (rem.c[idx] + a.p - fpm(cq, b.c[j], a.p)) % a.p;
        }
    }
    return {fp_trim({a.p, std::move(q)}), fp_trim(std::move(rem))};
}

FpPoly fp_monic(const FpPoly& a) {
    if (a.c.empty()) return a;
    std::uint64_t inv = mod_inverse(a.c.back(), a.p);
    FpPoly r = a;
    for (auto& x : r.c) x = fpm(x, inv, a.p);
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.c.empty()) {
        FpPoly r = fp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a);
}

FpPoly fp_derivative(const FpPoly& a) {
    if (a.c.size() <= 1) return {a.p, {}};
    std::vector<std::uint64_t> r(a.c.size() - 1, 0);
    for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = fpm(a.c[i], i % a.p, a.p);
    return fp_trim({a.p, std::move(r)});
}

FpPoly fp_powmod_x(std::uint64_t e, const FpPoly& f) {
    // x^e mod f
    FpPoly base{f.p, {0, 1}};
    FpPoly acc{f.p, {1}};
    while (e > 0) {
        if (e & 1) acc = fp_divmod(fp_mul(acc, base), f).second;
        base = fp_divmod(fp_mul(base, base), f).second;
        e >>= 1;
    }
    return acc;
}

// extended Euclid: s*a + t*b = gcd (monic)
void fp_ext_gcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{a.p, {1}}, s1{a.p, {}};
    FpPoly t0{a.p, {}}, t1{a.p, {1}};
    while (!r1.c.empty()) {
        auto [q, r] = fp_divmod(r0, r1);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.c.empty()) throw domain_error("internal: ext gcd of zero polynomials");
    std::uint64_t inv = mod_inverse(r0.c.back(), a.p);
    auto scale_fp = [&](FpPoly& x) { for (auto& v : x.c) v = fpm(v, inv, a.p); };
    scale_fp(r0); scale_fp(s0); scale_fp(t0);
    g = r0; s = s0; t = t0;
}

// kernel basis of (Q - I) over F_p (small dense Gaussian elimination)
std::vector<std::vector<std::uint64_t>> fp_null_space(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    const std::size_t n = m.size();
    std::vector<std::size_t> pivot_of_col(n, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = mod_inverse(m[r][c], p);
        for (std::size_t j = 0; j < n; ++j) m[r][j] = fpm(m[r][j], inv, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            std::uint64_t f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] = (m[i][j] + p - fpm(f, m[r][j], p)) % p;
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] != SIZE_MAX) continue;
        std::vector<std::uint64_t> v(n, 0);
        v[c] = 1;
        for (std::size_t cc = 0; cc < n; ++cc)
            if (pivot_of_col[cc] != SIZE_MAX) v[cc] = (p - m[pivot_of_col[cc]][c]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<FpPoly> berlekamp(const FpPoly& f) {
    const std::size_t n = static_cast<std::size_t>(f.deg());
    if (n == 1) return {f};
    std::vector<std::vector<std::uint64_t>> Q(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        FpPoly xi = fp_powmod_x(static_cast<std::uint64_t>(i) * f.p, f);
        for (std::size_t j = 0; j < xi.c.size(); ++j) Q[j][i] = xi.c[j];
    }
    for (std::size_t i = 0; i < n; ++i) Q[i][i] = (Q[i][i] + f.p - 1) % f.p;
    auto kernel = fp_null_space(std::move(Q), f.p);
    const std::size_t r = kernel.size(); // number of irreducible factors
    std::vector<FpPoly> factors{f};
    if (r <= 1) return factors;
    for (const auto& kv : kernel) {
        if (factors.size() >= r) break;
        FpPoly v = fp_trim({f.p, kv});
        if (v.deg() < 1) continue; // constant vector splits nothing
        std::vector<FpPoly> next;
        for (const auto& u : factors) {
            if (u.deg() == 1) {
                next.push_back(u);
                continue;
            }
            FpPoly rest = u;
            for (std::uint64_t s = 0; s < f.p && rest.deg() > 1; ++s) {
                FpPoly shifted = v; // v - s
                shifted.c[0] = (shifted.c[0] + f.p - s) % f.p;
                shifted = fp_trim(std::move(shifted));
                FpPoly g = fp_gcd(rest, shifted);
                if (g.deg() >= 1 && g.deg() < rest.deg()) {
                    next.push_back(g);
                    rest = fp_monic(fp_divmod(rest, g).first);
                }
            }
            if (rest.deg() >= 1) next.push_back(rest);
        }
        factors = std::move(next);
    }
    return factors;
}

// ---- Hensel lifting (all factors monic) ----

struct PairLiftState {
    ZPoly g, h, s, t;
    Z modulus;
};

// one quadratic step: modulus -> modulus^2, f == g*h preserved, both monic
void hensel_step(const ZPoly& f, PairLiftState& st) {
    Z m2 = st.modulus * st.modulus;
    ZPoly e = zsub_mod(zmod_reduce(f, m2), zmul_mod(st.g, st.h, m2), m2);
    auto [q, r] = zdivmod_monic_mod(zmul_mod(st.s, e, m2), st.h, m2);
    ZPoly gstar = zadd_mod(zadd_mod(st.g, zmul_mod(st.t, e, m2), m2), zmul_mod(q, st.g, m2), m2);
    ZPoly hstar = zadd_mod(st.h, r, m2);
    ZPoly one{Z(1)};
    ZPoly b = zsub_mod(zadd_mod(zmul_mod(st.s, gstar, m2), zmul_mod(st.t, hstar, m2), m2), one, m2);
    auto [c, d] = zdivmod_monic_mod(zmul_mod(st.s, b, m2), hstar, m2);
    ZPoly sstar = zsub_mod(st.s, d, m2);
    ZPoly tstar = zsub_mod(zsub_mod(st.t, zmul_mod(st.t, b, m2), m2), zmul_mod(c, gstar, m2), m2);
    st.g = std::move(gstar);
    st.h = std::move(hstar);
    st.s = std::move(sstar);
    st.t = std::move(tstar);
    st.modulus = m2;
}

ZPoly fp_to_z(const FpPoly& a) {
    ZPoly r;
    r.reserve(a.c.size());
    for (auto v : a.c) r.push_back(Z(v));
    return r;
}

// lift the factor list of node (monic mod target_mod, node == prod(parts) mod p) recursively
void lift_tree(const ZPoly& node, std::vector<FpPoly> parts, std::uint64_t p, const Z& target,
               std::vector<ZPoly>& out) {
    if (parts.size() == 1) {
        out.push_back(zmod_reduce(node, target));
        return;
    }
    std::size_t half = parts.size() / 2;
    std::vector<FpPoly> left(parts.begin(), parts.begin() + half);
    std::vector<FpPoly> right(parts.begin() + half, parts.end());
    FpPoly g0{p, {1}}, h0{p, {1}};
    for (const auto& f : left) g0 = fp_mul(g0, f);
    for (const auto& f : right) h0 = fp_mul(h0, f);
    FpPoly gg, ss, tt;
    fp_ext_gcd(g0, h0, gg, ss, tt);
    if (gg.deg() != 0) throw domain_error("internal: Hensel factors not coprime");
    PairLiftState st{fp_to_z(g0), fp_to_z(h0), fp_to_z(ss), fp_to_z(tt), Z(p)};
    while (st.modulus < target) hensel_step(zmod_reduce(node, st.modulus * st.modulus), st);
    lift_tree(st.g, std::move(left), p, target, out);
    lift_tree(st.h, std::move(right), p, target, out);
}

Z symmetric(const Z& a, const Z& m) {
    Z r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly symmetric_poly(const ZPoly& a, const Z& m) {
    ZPoly r = a;
    for (auto& c : r) c = symmetric(c, m);
    return ztrim(std::move(r));
}

// quotient and remainder over Z for a monic divisor
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& d) {
    ZPoly rem = a;
    if (rem.size() < d.size()) return {{}, ztrim(std::move(rem))};
    ZPoly q(rem.size() - d.size() + 1, Z(0));
    for (std::size_t shift = q.size(); shift-- > 0;) {
        Z c = rem[shift + d.size() - 1];
        if (c == 0) continue;
        q[shift] = c;
        for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= c * d[j];
    }
    return {ztrim(std::move(q)), ztrim(std::move(rem))};
}

bool zdivides_monic(const ZPoly& d, const ZPoly& a) {
    if (d.size() > a.size()) return false;
    return zdivmod_monic(a, d).second.empty();
}

ZPoly zdiv_exact_monic(const ZPoly& a, const ZPoly& d) {
    auto [q, r] = zdivmod_monic(a, d);
    if (!r.empty()) throw domain_error("internal: exact division failed");
    return q;
}

// Zassenhaus on a monic squarefree integer polynomial; returns monic integer factors.
std::vector<ZPoly> factor_monic_squarefree_z(ZPoly f) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return {f};

    static const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                           43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                                           101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    FpPoly fbar{0, {}};
    std::uint64_t p = 0;
    for (auto cand : primes) {
        FpPoly g{cand, {}};
        g.c.resize(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            Z c = f[i] % cand;
            if (c < 0) c += cand;
            g.c[i] = c.convert_to<std::uint64_t>();
        }
        g = fp_trim(std::move(g));
        if (g.deg() != static_cast<int>(n)) continue; // cannot happen (monic) but keep the guard
        FpPoly d = fp_gcd(g, fp_derivative(g));
        if (d.deg() == 0) {
            fbar = std::move(g);
            p = cand;
            break;
        }
    }
    if (p == 0) throw domain_error("no squarefree reduction prime found (input not squarefree?)");

    auto modular = berlekamp(fp_monic(fbar));
    if (modular.size() == 1) return {f};

    // coefficient bound: generous Landau-Mignotte style
    Z height = 0;
    for (const auto& c : f) height = std::max(height, Z(abs(c)));
    Z bound = (Z(1) << static_cast<unsigned>(n)) * Z(n + 1) * height;
    Z target(p);
    while (target < 2 * bound + 1) target *= target;

    std::vector<ZPoly> lifted;
    lift_tree(zmod_reduce(f, target), modular, p, target, lifted);

    std::vector<ZPoly> out;
    std::vector<std::size_t> pool(lifted.size());
    std::iota(pool.begin(), pool.end(), 0);
    ZPoly rest = f;

    auto try_size = [&](std::size_t size) -> bool {
        std::vector<std::size_t> idx(size);
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) -> bool {
            if (k == size) {
                ZPoly cand{Z(1)};
                for (std::size_t j = 0; j < size; ++j) cand = zmul_mod(cand, lifted[pool[idx[j]]], target);
                cand = symmetric_poly(cand, target);
                if (cand.empty() || cand.back() != 1) return false;
                if (!zdivides_monic(cand, rest)) return false;
                out.push_back(cand);
                rest = zdiv_exact_monic(rest, cand);
                std::vector<std::size_t> remaining;
                for (std::size_t j2 = 0, k2 = 0; j2 < pool.size(); ++j2) {
                    if (k2 < size && idx[k2] == j2) { ++k2; continue; }
                    remaining.push_back(pool[j2]);
                }
                pool = std::move(remaining);
                return true;
            }
            for (std::size_t i = start; i + (size - k) <= pool.size(); ++i) {
                idx[k] = i;
                if (rec(i + 1, k + 1)) return true;
            }
            return false;
        };
        return rec(0, 0);
    };

    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        if (try_size(size)) continue; // same size again after a hit
        ++size;
    }
    if (rest.size() > 1) out.push_back(rest);
    return out;
}

std::pair<ZPoly, Rational> clear_denominators(const QPoly& f) {
    Z lcm_den(1);
    for (const auto& c : f) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    ZPoly z;
    z.reserve(f.size());
    for (const auto& c : f) z.push_back(numerator(c) * (lcm_den / denominator(c)));
    Z content(0);
    for (const auto& c : z) content = boost::multiprecision::gcd(content, c);
    if (content == 0) return {{}, Rational(0)};
    if (z.back() < 0) content = -content;
    for (auto& c : z) c /= content;
    return {std::move(z), Rational(content, lcm_den)};
}

// monic rational factors of a squarefree monic rational polynomial
std::vector<QPoly> factor_squarefree_monic_q(const QPoly& f) {
    const int n = uni::deg(f);
    if (n == 1) return {f};
    auto [zf, unit] = clear_denominators(f);
    (void)unit;
    const Z lead = zf.back();
    // monic transform: fhat(x) = lead^(n-1) * f(x/lead), integer and monic
    ZPoly fhat(zf.size());
    fhat[static_cast<std::size_t>(n)] = 1;
    Z powl(1);
    for (int i = n - 1; i >= 0; --i) {
        fhat[static_cast<std::size_t>(i)] = zf[static_cast<std::size_t>(i)] * powl;
        powl *= lead;
    }
    auto zfactors = factor_monic_squarefree_z(fhat);
    std::vector<QPoly> out;
    for (const auto& g : zfactors) {
        // back-substitute x = lead * t, then normalize monic over Q
        QPoly q(g.size());
        Rational powr(1);
        for (std::size_t i = 0; i < g.size(); ++i) {
            q[i] = Rational(g[i]) * powr;
            powr *= lead;
        }
        out.push_back(uni::monic(uni::trim(std::move(q))));
    }
    return out;
}

} // namespace

QPoly squarefree_part(const QPoly& f) {
    QPoly t = uni::trim(f);
    if (uni::is_zero(t)) throw domain_error("squarefree part of the zero polynomial");
    if (uni::deg(t) == 0) return {Rational(1)};
    QPoly g = uni::gcd(t, uni::derivative(t));
    return uni::monic(uni::divmod(t, g).first);
}

QFactorization factor_rational_poly(const QPoly& input) {
    QPoly f = uni::trim(input);
    if (uni::is_zero(f)) throw domain_error("factorization of the zero polynomial");
    QFactorization result;
    result.unit = f.back();
    if (uni::deg(f) == 0) return result;
    f = uni::monic(f);

    // Yun squarefree decomposition
    std::vector<std::pair<QPoly, std::uint32_t>> squarefree_parts;
    {
        QPoly fd = uni::derivative(f);
        QPoly g = uni::gcd(f, fd);
        QPoly w = uni::divmod(f, g).first;
        std::uint32_t i = 1;
        while (uni::deg(w) > 0) {
            QPoly y = uni::gcd(w, g);
            QPoly z = uni::divmod(w, y).first;
            if (uni::deg(z) > 0) squarefree_parts.emplace_back(uni::monic(z), i);
            w = std::move(y);
            g = uni::divmod(g, w).first;
            ++i;
        }
    }

    for (const auto& [part, mult] : squarefree_parts) {
        for (auto& irr : factor_squarefree_monic_q(part))
            result.factors.push_back(QFactor{std::move(irr), mult});
    }
    std::sort(result.factors.begin(), result.factors.end(), [](const QFactor& a, const QFactor& b) {
        if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
        for (std::size_t i = a.poly.size(); i > 0; --i) {
            if (a.poly[i - 1] != b.poly[i - 1]) return a.poly[i - 1] < b.poly[i - 1];
        }
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

std::vector<std::pair<Rational, std::uint32_t>> rational_roots(const QPoly& f) {
    std::vector<std::pair<Rational, std::uint32_t>> roots;
    for (const auto& fac : factor_rational_poly(f).factors) {
        if (uni::deg(fac.poly) == 1) roots.emplace_back(-fac.poly[0], fac.multiplicity);
    }
    return roots;
}

} // namespace staudt
