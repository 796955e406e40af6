#include "czeta/special.hpp"

#include <mutex>
#include <vector>

namespace czeta {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

std::mutex bernoulli_mutex;
std::mutex euler_mutex;

// Extend the table of B_n/n! by inverting the series (e^t - 1)/t, whose
// coefficients are 1/(k+1)!. Factorials are carried as exact rationals.
void extend_bernoulli(std::vector<Rational>& scaled, unsigned n) {
    static std::vector<Rational> inv_factorial{1};
    auto inv_fact = [&](unsigned m) -> const Rational& {
        while (inv_factorial.size() <= m) {
            unsigned k = static_cast<unsigned>(inv_factorial.size());
            inv_factorial.push_back(inv_factorial.back() / k);
        }
        return inv_factorial[m];
    };
    if (scaled.empty()) scaled.push_back(1);
    while (scaled.size() <= n) {
        unsigned m = static_cast<unsigned>(scaled.size());
        Rational acc = 0;
        for (unsigned k = 0; k < m; ++k)
            acc += scaled[k] * inv_fact(m - k + 1);
        scaled.push_back(-acc);
    }
}

} // namespace

Rational bernoulli_number(unsigned n) {
    static std::vector<Rational> scaled; // B_k / k!
    std::scoped_lock lock(bernoulli_mutex);
    extend_bernoulli(scaled, n);
    Rational fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    return scaled[n] * fact;
}

Rational euler_number(unsigned n) {
    if (n % 2 == 1) return 0;
    // E_{2k}/(2k)! from inverting cosh: sum over even splits of
    // E_j/j! * 1/(m-j)! telescopes to zero for every even m >= 2.
    static std::vector<Rational> scaled{1}; // E_{2k} / (2k)!
    std::scoped_lock lock(euler_mutex);
    static std::vector<Rational> inv_factorial{1};
    auto inv_fact = [&](unsigned m) -> const Rational& {
        while (inv_factorial.size() <= m) {
            unsigned k = static_cast<unsigned>(inv_factorial.size());
            inv_factorial.push_back(inv_factorial.back() / k);
        }
        return inv_factorial[m];
    };
    unsigned half = n / 2;
    while (scaled.size() <= half) {
        unsigned m = static_cast<unsigned>(scaled.size());
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j)
            acc += scaled[j] * inv_fact(2 * (m - j));
        scaled.push_back(-acc);
    }
    Rational fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    return scaled[half] * fact;
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
    Rational acc = 0;
    Rational xpow = 1; // x^{n-k}, built from the top down
    // Accumulate C(n,k) B_k x^{n-k} from k = n downward so the x power can
    // be built multiplicatively.
    for (int k = static_cast<int>(n); k >= 0; --k) {
        acc += Rational(binomial(n, static_cast<unsigned>(k))) *
               bernoulli_number(static_cast<unsigned>(k)) * xpow;
        xpow *= x;
    }
    return acc;
}

} // namespace czeta
