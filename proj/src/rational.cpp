#include "flowroots/rational.hpp"

#include "flowroots/errors.hpp"

#include <cctype>
#include <regex>

namespace flowroots {

mpq_class parse_rational(const std::string& text) {
    // trim surrounding whitespace
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    const std::string s = text.substr(b, e - b);
    if (s.empty()) throw ParseError("empty number");

    static const std::regex frac_re(R"(^([+-]?\d+)/([+-]?\d+)$)");
    static const std::regex dec_re(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");

    // always parse digit strings in base 10 (the gmp default of base 0
    // would read a leading zero as octal)
    auto integer = [](std::string t) {
        bool neg = false;
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
            neg = t[0] == '-';
            t.erase(t.begin());
        }
        mpz_class v(t, 10);
        return neg ? mpz_class(-v) : v;
    };

    std::smatch m;
    if (std::regex_match(s, m, frac_re)) {
        mpz_class num = integer(m[1].str());
        mpz_class den = integer(m[2].str());
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    if (std::regex_match(s, m, dec_re)) {
        const std::string ipart = m[2].str();
        const std::string fpart = m[3].str();
        if (ipart.empty() && fpart.empty())
            throw ParseError("malformed number '" + s + "'");
        mpz_class digits(ipart + fpart, 10);
        long exp10 = -static_cast<long>(fpart.size());
        if (m[4].matched) exp10 += std::stol(m[4].str());
        mpq_class q(digits);
        mpz_class pow;
        mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        if (exp10 >= 0)
            q *= mpq_class(pow);
        else
            q /= mpq_class(pow);
        q.canonicalize();
        if (m[1].str() == "-") q = -q;
        return q;
    }
    throw ParseError("malformed number '" + s + "'");
}

std::string rational_string(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    return c.get_str();
}

std::string decimal_string(const mpq_class& v, int digits) {
    mpq_class c = v;
    c.canonicalize();
    const bool neg = c < 0;
    mpz_class num = abs(c.get_num());
    mpz_class den = c.get_den();
    mpz_class ip, rem;
    mpz_tdiv_qr(ip.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string out = ip.get_str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            mpz_class digit;
            mpz_tdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
            out += static_cast<char>('0' + digit.get_si());
        }
    }
    if (neg && (ip != 0 || out.find_first_of("123456789") != std::string::npos))
        out.insert(out.begin(), '-');
    return out;
}

int digits_for_tolerance(const mpq_class& tol) {
    if (tol <= 0) return 64;
    mpq_class step(1, 10);
    int d = 1;
    while (step > tol && d < 64) {
        step /= 10;
        ++d;
    }
    return d;
}

} // namespace flowroots
