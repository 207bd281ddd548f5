#pragma once

#include <gmpxx.h>

#include <string>

namespace ihall {

// Exact arithmetic base types. All coefficient work in the engine is exact;
// there is no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Int ipow(const Int& base, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Int ipow(long base, long e) { return ipow(Int(base), e); }

// base^e for e of either sign.
inline Rat ratPow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    return ratPow(1 / base, -e);
}

inline std::string ratStr(const Rat& r) { return r.get_str(); }

}  // namespace ihall
