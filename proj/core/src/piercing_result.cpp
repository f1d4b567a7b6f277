#include "piercing/piercing_result.hpp"

namespace piercing {

BigInt pow3(std::size_t exponent) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 3, exponent);
    return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace piercing
