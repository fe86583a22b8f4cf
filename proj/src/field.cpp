#include "flcc/field.hpp"

namespace flcc {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool PrimeField::is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin for 64-bit with the standard witness set.
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t PrimeField::find_primitive(std::uint64_t q) {
    if (!is_prime(q) || q < 3) throw std::invalid_argument("find_primitive: q must be an odd prime");
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool ok = true;
        for (std::uint64_t p : factors) {
            if (powmod(g, (q - 1) / p, q) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("find_primitive: no generator found");  // unreachable for prime q
}

PrimeField::PrimeField(std::uint64_t q) : q_(q), gamma_(0) {
    if (!is_prime(q)) throw std::invalid_argument("PrimeField: modulus is not prime");
    if (q >= (1ull << 63)) throw std::invalid_argument("PrimeField: modulus out of range");
    gamma_ = q == 2 ? 1 : find_primitive(q);
}

PrimeField::PrimeField(std::uint64_t q, std::uint64_t gamma) : q_(q), gamma_(gamma % q) {
    if (!is_prime(q)) throw std::invalid_argument("PrimeField: modulus is not prime");
    if (q >= (1ull << 63)) throw std::invalid_argument("PrimeField: modulus out of range");
    if (gamma_ == 0) throw std::invalid_argument("PrimeField: gamma must be nonzero");
    for (std::uint64_t p : prime_factors(q - 1)) {
        if (powmod(gamma_, (q - 1) / p, q) == 1)
            throw std::invalid_argument("PrimeField: gamma is not primitive");
    }
}

Fe PrimeField::pow(Fe base, std::uint64_t e) const { return powmod(base, e, q_); }

Fe PrimeField::inv(Fe a) const {
    if (a == 0) throw std::domain_error("PrimeField: inversion of zero");
    return powmod(a, q_ - 2, q_);
}

Fe PrimeField::from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(q_);
    if (m < 0) m += static_cast<std::int64_t>(q_);
    return static_cast<Fe>(m);
}

}  // namespace flcc
