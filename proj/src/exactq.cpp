#include "alcove/exactq.hpp"

#include <cctype>
#include <sstream>

namespace alcove {

std::string to_string(const Rational& q)
{
    const Integer num = mp::numerator(q);
    const Integer den = mp::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    if (text.empty())
        throw ParseError("empty number in '" + std::string(whole) + "'");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw ParseError("malformed number '" + std::string(whole) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view raw)
{
    const std::string_view text = trim(raw);
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Integer num = parse_integer(trim(text.substr(0, slash)), raw);
        const Integer den = parse_integer(trim(text.substr(slash + 1)), raw);
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(raw) + "'");
        return Rational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        const std::string_view tail = text.substr(dot + 1);
        bool negative = false;
        if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
            negative = head[0] == '-';
            head.remove_prefix(1);
        }
        if (head.empty() && tail.empty())
            throw ParseError("malformed number '" + std::string(raw) + "'");
        if (!tail.empty() && (tail[0] == '-' || tail[0] == '+'))
            throw ParseError("malformed number '" + std::string(raw) + "'");
        Integer whole = head.empty() ? Integer(0) : parse_integer(head, raw);
        Integer frac = tail.empty() ? Integer(0) : parse_integer(tail, raw);
        Integer scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i)
            scale *= 10;
        Rational value = Rational(whole) + Rational(frac, scale);
        return negative ? Rational(-value) : value;
    }
    return Rational(parse_integer(text, raw));
}

std::strong_ordering lex_compare(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("lex_compare: dimensions differ");
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) < b(i))
            return std::strong_ordering::less;
        if (b(i) < a(i))
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

RationalVector make_vector(std::initializer_list<Rational> entries)
{
    RationalVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const auto& e : entries)
        v(i++) = e;
    return v;
}

RationalVector to_vector(const std::vector<Rational>& entries)
{
    RationalVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = entries[i];
    return v;
}

std::vector<Rational> to_std(const RationalVector& v)
{
    return {v.data(), v.data() + v.size()};
}

Integer common_denominator(const RationalVector& v)
{
    Integer l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        l = mp::lcm(l, Integer(mp::denominator(v(i))));
    return l;
}

Integer gcd_of(const IntegerVector& v)
{
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0)
            g = mp::gcd(g, Integer(mp::abs(v(i))));
    }
    return g;
}

IntegerVector primitive_integer(const RationalVector& v)
{
    const Integer l = common_denominator(v);
    IntegerVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = mp::numerator(v(i)) * (l / mp::denominator(v(i)));
    const Integer g = gcd_of(out);
    if (g > 1) {
        for (Eigen::Index i = 0; i < out.size(); ++i)
            out(i) /= g;
    }
    return out;
}

std::string format_vector(const RationalVector& v)
{
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i)
            os << ", ";
        os << to_string(v(i));
    }
    os << ')';
    return os.str();
}

} // namespace alcove
