#include "goodman/complexity.hpp"

#include <algorithm>
#include <numeric>

namespace goodman {

Natural primary_complexity_double_sum(int n) {
    detail::require_positive_n(n, "primary_complexity_double_sum");
    Rational total{0};
    for (int k = 1; k <= n; ++k) {
        for (int r = 0; r <= k; ++r) {
            Rational term(integer_pow<Natural>(Natural(k - r), n) * Natural(2 * k - 1),
                          factorial<Natural>(k - r) * factorial<Natural>(r));
            term.canonicalize();
            if (r % 2 == 0)
                total += term;
            else
                total -= term;
        }
    }
    total.canonicalize();
    if (total.get_den() != 1)
        throw std::logic_error("primary_complexity_double_sum: non-integer result for n = " +
                               std::to_string(n));
    return total.get_num();
}

std::vector<std::string> form_patterns(int n) {
    detail::require_positive_n(n, "form_patterns");
    if (n > 6)
        throw std::domain_error("form_patterns: no letter convention beyond n = 6 (got n = " +
                                std::to_string(n) + ")");
    static constexpr char letters[] = {'x', 'y', 'z', 'w', 'v', 'u'};
    std::vector<std::string> patterns;
    for_each_set_partition(n, [&](const std::vector<int>& labels, int block_count) {
        std::vector<int> size(static_cast<std::size_t>(block_count), 0);
        std::vector<int> first(static_cast<std::size_t>(block_count), n);
        for (int i = 0; i < n; ++i) {
            int b = labels[static_cast<std::size_t>(i)];
            ++size[static_cast<std::size_t>(b)];
            first[static_cast<std::size_t>(b)] = std::min(first[static_cast<std::size_t>(b)], i);
        }
        // Blocks ranked by decreasing size, ties by first occurrence; the
        // rank picks the letter.
        std::vector<int> order(static_cast<std::size_t>(block_count));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            auto ua = static_cast<std::size_t>(a);
            auto ub = static_cast<std::size_t>(b);
            if (size[ua] != size[ub]) return size[ua] > size[ub];
            return first[ua] < first[ub];
        });
        std::vector<char> letter_of(static_cast<std::size_t>(block_count));
        for (int rank = 0; rank < block_count; ++rank)
            letter_of[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] =
                letters[rank];
        std::string pattern;
        pattern.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pattern.push_back(letter_of[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])]);
        patterns.push_back(std::move(pattern));
    });
    return patterns;
}

}  // namespace goodman
