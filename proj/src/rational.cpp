#include "kstab/rational.hpp"

#include <algorithm>
#include <cctype>

namespace kstab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational frac(long p, long q) {
    if (q == 0) throw DomainError("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw GeometryError("dimension mismatch in dot product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw GeometryError("dimension mismatch in vector sum");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw GeometryError("dimension mismatch in vector difference");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Vec zero_vec(int dim) { return Vec(static_cast<std::size_t>(dim), Rational(0)); }

Vec unit_vec(int dim, int axis) {
    Vec v = zero_vec(dim);
    v.at(static_cast<std::size_t>(axis)) = 1;
    return v;
}

Vec to_vec(const IntVec& v) {
    Vec r;
    r.reserve(v.size());
    for (auto x : v) r.emplace_back(static_cast<long>(x));
    return r;
}

Vec to_vec(std::initializer_list<long> coords) {
    Vec r;
    for (auto x : coords) r.emplace_back(x);
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool is_integral(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

Integer common_denominator(const Vec& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Vec primitive_integer(const Vec& v) {
    if (is_zero(v)) throw GeometryError("primitive_integer of the zero vector");
    Integer l = common_denominator(v);
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer k = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
        ints.push_back(k);
    }
    Vec r;
    r.reserve(v.size());
    for (const auto& k : ints) r.emplace_back(Integer(k / g));
    return r;
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace kstab
