#include "tokengraphs/rational.hpp"

namespace tokengraphs {

std::string to_string(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::int64_t floor_of(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den; // truncates toward zero
    if (num < 0 && q * den != num)
        q -= 1;
    return q.convert_to<std::int64_t>();
}

} // namespace tokengraphs
