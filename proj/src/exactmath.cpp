#include "mixstir/exactmath.hpp"

#include <mutex>
#include <numeric>

namespace mixstir {

Nat factorial(std::size_t n) {
    Nat r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Nat binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Nat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Nat multinomial(std::size_t n, std::span<const std::size_t> parts) {
    const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    if (total != n) {
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(total) +
                                    ", expected " + std::to_string(n));
    }
    // product of binomials over the running prefix sums
    Nat r = 1;
    std::size_t prefix = 0;
    for (std::size_t p : parts) {
        prefix += p;
        r *= binomial(prefix, p);
    }
    return r;
}

Nat falling(std::size_t x, std::size_t k) {
    if (k > x) return 0;
    Nat r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(x - i);
    return r;
}

Nat rising(std::size_t x, std::size_t k) {
    Nat r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(x + i);
    return r;
}

Nat checked_sub(const Nat& a, const Nat& b) {
    if (a < b) throw std::domain_error("checked_sub: negative result");
    return a - b;
}

Nat exact_div(const Nat& a, const Nat& b, const char* what) {
    if (b == 0) throw IdentityViolation(std::string(what) + ": division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw IdentityViolation(std::string(what) + ": " + a.get_str() + " not divisible by " +
                                b.get_str());
    }
    Nat q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rat ratio(const Nat& num, const Nat& den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Nat to_nat(const Rat& value, const char* what) {
    Rat q = value;
    q.canonicalize();
    if (q.get_den() != 1) {
        throw IdentityViolation(std::string(what) + ": non-integral value " + q.get_str());
    }
    return q.get_num();
}

std::string to_string(const Nat& v) { return v.get_str(); }
std::string to_string(const Rat& v) {
    Rat q = v;
    q.canonicalize();
    return q.get_str();
}

Triangle::Triangle(TriangleKind kind) : kind_(kind) { rows_.push_back({Nat(1)}); }

std::size_t Triangle::rows() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
}

void Triangle::grow_locked(std::size_t n) const {
    while (rows_.size() <= n) {
        const std::size_t m = rows_.size();
        const auto& prev = rows_.back();
        std::vector<Nat> row(m + 1);
        for (std::size_t k = 1; k <= m; ++k) {
            Nat stay = k < m ? prev[k] : Nat(0);
            switch (kind_) {
                case TriangleKind::Stirling1: stay *= static_cast<unsigned long>(m - 1); break;
                case TriangleKind::Stirling2: stay *= static_cast<unsigned long>(k); break;
                case TriangleKind::Lah: stay *= static_cast<unsigned long>(m - 1 + k); break;
            }
            row[k] = prev[k - 1] + stay;
        }
        rows_.push_back(std::move(row));
    }
}

Nat Triangle::operator()(std::size_t n, std::size_t k) const {
    if (k > n) return 0;
    {
        std::shared_lock lock(mutex_);
        if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    grow_locked(n);
    return rows_[n][k];
}

const Triangle& stirling1_triangle() {
    static const Triangle t(TriangleKind::Stirling1);
    return t;
}

const Triangle& stirling2_triangle() {
    static const Triangle t(TriangleKind::Stirling2);
    return t;
}

const Triangle& lah_triangle() {
    static const Triangle t(TriangleKind::Lah);
    return t;
}

Nat stirling1(std::size_t n, std::size_t k) { return stirling1_triangle()(n, k); }
Nat stirling2(std::size_t n, std::size_t k) { return stirling2_triangle()(n, k); }
Nat lah(std::size_t n, std::size_t k) { return lah_triangle()(n, k); }

}  // namespace mixstir
