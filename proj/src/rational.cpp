#include "detrelay/rational.hpp"

#include <charconv>
#include <numeric>

namespace detrelay {

bool is_integral(const Rat& r) { return r.denominator() == 1; }

long long common_denominator(const std::vector<Rat>& rs) {
    long long q = 1;
    for (const Rat& r : rs) q = std::lcm(q, r.denominator());
    return q;
}

std::string format_rat(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        s += '/';
        s += std::to_string(r.denominator());
    }
    return s;
}

std::string format_rats(const std::vector<Rat>& rs) {
    std::string s;
    for (size_t i = 0; i < rs.size(); ++i) {
        if (i) s += ' ';
        s += format_rat(rs[i]);
    }
    return s;
}

std::optional<Rat> parse_rat(std::string_view s) {
    auto parse_ll = [](std::string_view t, long long& out) {
        const char* first = t.data();
        const char* last = t.data() + t.size();
        auto [ptr, ec] = std::from_chars(first, last, out);
        return ec == std::errc() && ptr == last;
    };
    size_t slash = s.find('/');
    long long num = 0, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_ll(s, num)) return std::nullopt;
    } else {
        if (!parse_ll(s.substr(0, slash), num)) return std::nullopt;
        if (!parse_ll(s.substr(slash + 1), den)) return std::nullopt;
        if (den <= 0) return std::nullopt;
    }
    return Rat(num, den);
}

}  // namespace detrelay
