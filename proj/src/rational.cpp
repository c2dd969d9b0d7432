#include "mpj/rational.hpp"

#include "mpj/errors.hpp"

#include <cctype>

namespace mpj {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    Integer d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Integer n(std::string(num), 10);
    if (!text.empty() && text.front() == '-')
        n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

} // namespace mpj
