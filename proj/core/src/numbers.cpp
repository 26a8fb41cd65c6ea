#include "meandric/numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace meandric {

namespace {

std::mutex memo_mutex;

using Rational = boost::multiprecision::cpp_rational;

BigCount as_integer(const Rational& q) {
    if (boost::multiprecision::denominator(q) != 1)
        throw std::logic_error("meandric_top_counts: non-integral result");
    return boost::multiprecision::numerator(q);
}

}  // namespace

BigCount catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: negative order");
    static std::vector<BigCount> table = {1};
    std::scoped_lock lock(memo_mutex);
    while (static_cast<int>(table.size()) <= n) {
        const std::size_t j = table.size() - 1;
        BigCount next = 0;
        for (std::size_t l = 0; l <= j; ++l) next += table[j - l] * table[l];
        table.push_back(next);
    }
    return table[n];
}

BigCount motzkin(int n) {
    if (n < 0) throw std::invalid_argument("motzkin: negative order");
    static std::vector<BigCount> table = {1, 1};
    std::scoped_lock lock(memo_mutex);
    while (static_cast<int>(table.size()) <= n) {
        const std::size_t m = table.size();
        BigCount next = table[m - 1];
        for (std::size_t p = 0; p + 2 <= m; ++p) next += table[p] * table[m - 2 - p];
        table.push_back(next);
    }
    return table[n];
}

MeandricTopCounts meandric_top_counts(int n) {
    if (n < 1) throw std::invalid_argument("meandric_top_counts: order must be positive");
    MeandricTopCounts result;
    result.top = catalan(n);
    result.top_minus_one = BigCount(n) * (catalan(n + 1) - 2 * catalan(n));
    if (n >= 3) {
        Rational sum = Rational(catalan(n + 3));
        sum += Rational(3 * n - 35, 6) * Rational(catalan(n + 2));
        sum -= Rational(6 * n - 25, 3) * Rational(catalan(n + 1));
        sum += Rational(2 * (n - 1)) * Rational(catalan(n));
        result.top_minus_two = as_integer(Rational(n) * sum);
    }
    return result;
}

}  // namespace meandric
