#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qrv/error.hpp"

namespace qrv {

// Deterministic Miller-Rabin, complete for 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) -> uint64_t {
        return (uint64_t)((unsigned __int128)a * b % m);
    };
    auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) -> uint64_t {
        uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Prime field F_p, p < 2^62.  Elements are least nonnegative residues; the
// field object carries the modulus so matrices stay plain uint64 arrays.
class Fp {
  public:
    using Elem = uint64_t;
    static constexpr uint64_t max_modulus = uint64_t{1} << 62;

    explicit Fp(uint64_t p) : p_(p) {
        require(p >= 2 && p < max_modulus, "modulus out of range (need 2 <= p < 2^62)");
        require(is_prime_u64(p), "modulus " + std::to_string(p) + " is not prime");
    }

    uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const {
        uint64_t s = a + b;  // no overflow: a, b < 2^62
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (uint64_t)((unsigned __int128)a * b % p_); }

    Elem pow(Elem a, uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        require(a != 0, "division by zero in F_p");
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0) r += (long long)p_;
        return (Elem)r;
    }

    Elem from_mpz(const mpz_class& z) const {
        mpz_class m;
        mpz_mod_ui(m.get_mpz_t(), z.get_mpz_t(), p_);
        return m.get_ui();
    }

    // Image of a rational under reduction mod p; rejects primes dividing the
    // denominator.
    Elem from_mpq(const mpq_class& q) const {
        Elem den = from_mpz(q.get_den());
        require(den != 0, "prime divides a coefficient denominator");
        return mul(from_mpz(q.get_num()), inv(den));
    }

    bool equal(Elem a, Elem b) const { return a == b; }

  private:
    uint64_t p_;
};

// The rationals.  mpq_class keeps canonical form (lowest terms, positive
// denominator) through arithmetic; only raw num/den construction needs an
// explicit canonicalize.
class Rat {
  public:
    using Elem = mpq_class;

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        require(sgn(a) != 0, "division by zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem from_int(long long v) const { return mpq_class((long)v); }

    static Elem make(long long num, long long den) {
        require(den != 0, "rational with zero denominator");
        mpq_class q(mpq_class((long)num) / mpq_class((long)den));
        return q;
    }

    bool equal(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }

  private:
    const Elem& inv_guard(const Elem& b) const {
        require(sgn(b) != 0, "division by zero");
        return b;
    }
};

// Runtime tag for serialized data: "Q" or "Fp:<prime>".
struct FieldSpec {
    bool rational = true;
    uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{true, 0}; }
    static FieldSpec modular(uint64_t p) {
        Fp check(p);  // validates
        return FieldSpec{false, p};
    }

    static FieldSpec parse(const std::string& s) {
        if (s == "Q") return rationals();
        if (s.rfind("Fp:", 0) == 0) {
            const std::string digits = s.substr(3);
            require(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
                    "bad field tag: " + s);
            return modular(std::stoull(digits));
        }
        fail("bad field tag: " + s + " (expected \"Q\" or \"Fp:<prime>\")");
    }

    std::string to_string() const { return rational ? "Q" : "Fp:" + std::to_string(p); }
};

}  // namespace qrv
