#include "gregory/series.hpp"

namespace gregory {

TruncatedSeries<Rational> log_series(std::size_t order) {
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        const long sign = n % 2 == 0 ? 1 : -1;
        c.emplace_back(sign, static_cast<long>(n + 1));
    }
    return TruncatedSeries<Rational>(std::move(c));
}

TruncatedSeries<RationalFunction> qlog_series(std::size_t order) {
    std::vector<RationalFunction> c;
    c.reserve(order + 1);
    // [n+1]_q = 1 + q + ... + q^n
    std::vector<Rational> ones;
    for (std::size_t n = 0; n <= order; ++n) {
        ones.emplace_back(1);
        const long sign = n % 2 == 0 ? 1 : -1;
        c.emplace_back(Polynomial::constant(sign), Polynomial(ones));
    }
    return TruncatedSeries<RationalFunction>(std::move(c));
}

}  // namespace gregory
