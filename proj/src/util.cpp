#include "quadgap/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace quadgap {

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QUADGAP_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

void parallel_for(i64 n, const std::function<void(i64, i64)>& body) {
    if (n <= 0) return;
    unsigned workers = worker_count();
    if (workers <= 1 || n < 1024) {
        body(0, n);
        return;
    }
    i64 chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        i64 lo = static_cast<i64>(w) * chunk;
        i64 hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

double Li(double x) {
    if (x <= 2.0) return 0.0;
    // Composite Simpson on u = log t, t = e^u: integrand e^u/u.
    double a = std::log(2.0), b = std::log(x);
    int n = 4096;
    double h = (b - a) / n;
    KahanSum s;
    auto f = [](double u) { return std::exp(u) / u; };
    s.add(f(a));
    s.add(f(b));
    for (int i = 1; i < n; ++i) s.add((i % 2 ? 4.0 : 2.0) * f(a + i * h));
    return s.value() * h / 3.0;
}

std::optional<double> iterated_log(double x, int k) {
    double v = x;
    for (int i = 0; i < k; ++i) {
        if (v <= 1.0) return std::nullopt;  // next log would be <= 0
        v = std::log(v);
    }
    if (v <= 0.0) return std::nullopt;
    return v;
}

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sufficient deterministic base set for all 64-bit n.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime_int(const Int& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<i64> primes_leq(i64 n) {
    std::vector<i64> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
    for (i64 i = 2; i * i <= n; ++i) {
        if (!comp[i])
            for (i64 j = i * i; j <= n; j += i) comp[j] = true;
    }
    for (i64 i = 2; i <= n; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

bool is_squarefree(i64 n) {
    n = std::llabs(n);
    if (n == 0) return false;
    for (i64 q = 2; q * q <= n; ++q) {
        if (n % (q * q) == 0) return false;
    }
    return true;
}

}  // namespace quadgap
