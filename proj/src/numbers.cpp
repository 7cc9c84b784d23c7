#include "apd/numbers.hpp"

#include <mutex>
#include <vector>

#include "apd/errors.hpp"

namespace apd {

namespace {

// Triangular table of S1(n,k), grown on demand under a lock.
// Row n+1 comes from row n via S1(n+1,k) = S1(n,k-1) - n*S1(n,k).
std::mutex stirling_mutex;
std::vector<std::vector<Rational>> stirling_rows = {{Rational(1)}};

} // namespace

Rational stirling1(long n, long k) {
    if (n < 0 || k < 0) throw BadIndex("stirling1 indices must be nonnegative");
    if (k > n) return Rational(0);
    std::lock_guard<std::mutex> lock(stirling_mutex);
    while (static_cast<long>(stirling_rows.size()) <= n) {
        const auto& prev = stirling_rows.back();
        const long m = static_cast<long>(stirling_rows.size()) - 1;
        std::vector<Rational> row(prev.size() + 1, Rational(0));
        for (long j = 0; j <= m + 1; ++j) {
            Rational v(0);
            if (j >= 1) v += prev[static_cast<std::size_t>(j - 1)];
            if (j <= m) v -= Rational(m) * prev[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] = std::move(v);
        }
        stirling_rows.push_back(std::move(row));
    }
    return stirling_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational falling_factorial(const Rational& x0, unsigned long n) {
    Rational p(1);
    for (unsigned long i = 0; i < n; ++i) p *= x0 - Rational(static_cast<long>(i));
    return p;
}

XPoly falling_factorial_poly(unsigned long n) {
    XPoly p{Rational(1)};
    for (unsigned long i = 0; i < n; ++i)
        p = p * (XPoly::x() - XPoly(Rational(static_cast<long>(i))));
    return p;
}

Rational daehee_number(unsigned long n) {
    Rational v = factorial(n) / Rational(static_cast<long>(n) + 1);
    return n % 2 == 0 ? v : -v;
}

Rational cauchy_number(unsigned long n) {
    Rational acc(0);
    for (unsigned long m = 0; m <= n; ++m)
        acc += stirling1(static_cast<long>(n), static_cast<long>(m)) / Rational(static_cast<long>(m) + 1);
    return acc;
}

Rational bernstein_basis(unsigned long k, unsigned long n, const Rational& x0) {
    if (k > n) return Rational(0);
    return binomial(n, k) * x0.pow(static_cast<long>(k)) *
           (Rational(1) - x0).pow(static_cast<long>(n - k));
}

std::pair<Rational, Rational> chu_vandermonde_sides(const Rational& x0, const Rational& y0, unsigned long n) {
    const Rational lhs = binomial(x0 + y0, n);
    Rational sum(0);
    for (unsigned long k = 0; k <= n; ++k)
        sum += binomial(n, k) * falling_factorial(x0, k) * falling_factorial(y0, n - k);
    return {lhs, sum / factorial(n)};
}

} // namespace apd
