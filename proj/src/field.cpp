#include "orbitlr/field.hpp"

#include <tuple>
#include <utility>

#include "orbitlr/error.hpp"

namespace orbitlr {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a supported prime");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0)
        throw Error(ErrorKind::InvalidArgument, "inverse of zero in " + name());
    // extended Euclid on (a, p)
    std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t quotient = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - quotient * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - quotient * t1);
    }
    return from_int(t0);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
    if (a == 0)
        throw Error(ErrorKind::InvalidArgument, "inverse of zero in Q");
    return value_type(1) / a;
}

}  // namespace orbitlr
