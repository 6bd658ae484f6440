#ifndef GINF_BIGINT_HPP
#define GINF_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace ginf {

/// Arbitrary-precision integer used by every exact computation.
using BigInt = boost::multiprecision::cpp_int;

} // namespace ginf

#endif // GINF_BIGINT_HPP
