#ifndef BLOWUP_FP_HPP
#define BLOWUP_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace blowup {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        if (n % q == 0) return n == q;
    for (std::uint64_t q = 37; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

// Arithmetic mod a word-sized prime; residues normalized in [0, p).
struct PrimeField {
    std::uint32_t p = 32003;

    explicit PrimeField(std::uint32_t prime = 32003) : p(prime) {
        if (!is_prime_u32(p)) throw error("PrimeField: modulus is not prime");
        if (p >= (1u << 31)) throw error("PrimeField: modulus too large");
    }

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw error("PrimeField: inverse of zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt; nt = tmp;
            tmp = r - q * nr;
            r = nr; nr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<std::uint32_t>(t);
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
        return mul(a, inv(b));
    }

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

} // namespace blowup

#endif
