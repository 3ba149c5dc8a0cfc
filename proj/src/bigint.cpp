#include "prolong/bigint.hpp"

#include <atomic>

namespace prolong {

namespace {
std::atomic<std::uint64_t> g_bit_cap{std::uint64_t{1} << 24};
}

namespace bitcap {
std::uint64_t get() { return g_bit_cap.load(std::memory_order_relaxed); }
void set(std::uint64_t bits) { g_bit_cap.store(bits, std::memory_order_relaxed); }
}  // namespace bitcap

std::uint64_t bit_length(const BigCount& x) {
    if (sgn(x) == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

void check_cap(const BigCount& x, const char* context) {
    if (bit_length(x) > bitcap::get())
        throw ValueExceedsLimit(context);
}

BigCount pow2_checked(const BigCount& exp, const char* context) {
    if (sgn(exp) < 0) throw std::invalid_argument("pow2_checked: negative exponent");
    if (!exp.fits_ulong_p() || exp.get_ui() >= bitcap::get())
        throw ValueExceedsLimit(context);
    BigCount r = 1;
    r <<= exp.get_ui();
    return r;
}

BigCount pow_checked(const BigCount& base, const BigCount& exp, const char* context) {
    if (base < 2) throw std::invalid_argument("pow_checked: base < 2");
    if (sgn(exp) < 0) throw std::invalid_argument("pow_checked: negative exponent");
    if (sgn(exp) == 0) return 1;
    // bits(base^exp) >= exp*(bits(base)-1) + 1
    BigCount min_bits = exp * (bit_length(base) - 1);
    if (!min_bits.fits_ulong_p() || min_bits.get_ui() >= bitcap::get())
        throw ValueExceedsLimit(context);
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    check_cap(r, context);
    return r;
}

BigCount binomial(const BigCount& n, const BigCount& k) {
    if (sgn(n) < 0 || sgn(k) < 0) throw std::invalid_argument("binomial: negative input");
    if (k > n) return 0;
    BigCount kk = k;
    if (n.fits_ulong_p()) {
        BigCount other = n - k;
        if (other < kk) kk = other;
        BigCount r;
        mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), kk.get_ui());
        check_cap(r, "binomial(n, k)");
        return r;
    }
    // Huge n: only small k is representable. bits >= k*(bits(n) - bits(k)).
    if (!kk.fits_ulong_p()) throw ValueExceedsLimit("binomial(n, k): k too large");
    std::uint64_t ku = kk.get_ui();
    if (ku > 0) {
        BigCount est = BigCount(ku) * (bit_length(n) - bit_length(kk));
        if (!est.fits_ulong_p() || est.get_ui() > bitcap::get())
            throw ValueExceedsLimit("binomial(n, k)");
    }
    BigCount r = 1;
    for (std::uint64_t i = 1; i <= ku; ++i) {
        r *= n - static_cast<unsigned long>(ku - i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    check_cap(r, "binomial(n, k)");
    return r;
}

std::uint64_t to_u64(const BigCount& x, const char* context) {
    if (sgn(x) < 0) throw std::invalid_argument("to_u64: negative");
    if (!x.fits_ulong_p()) throw ValueExceedsLimit(context);
    return x.get_ui();
}

}  // namespace prolong
