#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadgap/int_types.hpp"

namespace quadgap {

// Raised when an operation would exceed its documented resource budget.
// The CLI maps this to exit code 3; nothing is ever silently truncated.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Worker cap: min(hardware, QUADGAP_THREADS if set). Always >= 1.
unsigned worker_count();

// Static-partition parallel map over [0, n). Deterministic: chunk results are
// merged in index order regardless of thread count.
void parallel_for(i64 n, const std::function<void(i64 begin, i64 end)>& body);

// Kahan-compensated accumulator.
struct KahanSum {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// Li(x) = \int_2^x dt/log t.
double Li(double x);

// Iterated logarithms; nullopt when the next log is not positive.
std::optional<double> iterated_log(double x, int k);

// Deterministic primality for 64-bit inputs (Miller-Rabin, fixed base set);
// probabilistic (mpz_probab_prime_p) beyond.
bool is_prime_u64(u64 n);
bool is_prime_int(const Int& n);

// Rational primes in [2, n].
std::vector<i64> primes_leq(i64 n);

// Squarefree test for small |n|.
bool is_squarefree(i64 n);

}  // namespace quadgap
