#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace meandric {

/// Exact non-negative count. All public counting APIs use this type; no
/// floating point appears anywhere in the library.
using BigCount = boost::multiprecision::cpp_int;

/// Catalan number C_n, memoized, via the convolution recursion
/// C_{j+1} = sum_{l=0}^{j} C_{j-l} C_l.
BigCount catalan(int n);

/// Motzkin number Mot(n), memoized, via
/// m_n = m_{n-1} + sum_{p=0}^{n-2} m_p m_{n-2-p}, m_0 = m_1 = 1.
BigCount motzkin(int n);

/// Closed-form counts of meandric systems of order n with k components for
/// k = n, n-1, n-2:
///
///   M_n^(n)   = C_n
///   M_n^(n-1) = n (C_{n+1} - 2 C_n)
///   M_n^(n-2) = n (C_{n+3} + (3n-35)/6 C_{n+2} - (6n-25)/3 C_{n+1} + 2(n-1) C_n)
///
/// Intermediate terms are exact rationals; integrality of each component is
/// asserted, never rounded. The third component exists only for n >= 3.
struct MeandricTopCounts {
    BigCount top;                         // M_n^(n)
    BigCount top_minus_one;               // M_n^(n-1)
    std::optional<BigCount> top_minus_two; // M_n^(n-2), n >= 3 only
};

MeandricTopCounts meandric_top_counts(int n);

}  // namespace meandric
