#include "wheelsym/cycfield.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "wheelsym/error.hpp"

namespace wheelsym {

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact quotient of integer polynomials by a monic divisor; the remainder
// must vanish.
ZPoly divide_monic_exact(ZPoly num, const ZPoly& den)
{
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size())
        throw Fault("cyclotomic division: dividend shorter than divisor");
    ZPoly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const mpz_class c = num[i];
        if (c == 0)
            continue;
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0)
            throw Fault("cyclotomic division left a nonzero remainder");
    return quot;
}

ZPoly multiply(const ZPoly& a, const ZPoly& b)
{
    ZPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// (quotient, remainder) over Q; den must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den)
{
    trim(num);
    if (num.size() < den.size())
        return {QPoly{}, num};
    const std::size_t dn = den.size() - 1;
    QPoly quot(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        if (num[i] == 0)
            continue;
        mpq_class c = num[i] / den.back();
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    trim(num);
    trim(quot);
    return {quot, num};
}

QPoly mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly sub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

std::mutex field_cache_mutex;
std::map<unsigned, FieldRef>& field_cache()
{
    static std::map<unsigned, FieldRef> cache;
    return cache;
}

} // namespace

unsigned euler_totient(unsigned m)
{
    unsigned count = 0;
    for (unsigned j = 1; j <= m; ++j)
        if (std::gcd(j, m) == 1)
            ++count;
    return count;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned conductor)
{
    if (conductor == 0)
        throw DomainError("cyclotomic conductor must be positive");
    ZPoly num(conductor + 1, 0);
    num[0] = -1;
    num[conductor] = 1;
    ZPoly den{1};
    for (unsigned d = 1; d < conductor; ++d)
        if (conductor % d == 0)
            den = multiply(den, cyclotomic_polynomial(d));
    return divide_monic_exact(std::move(num), den);
}

CycField::CycField(unsigned conductor)
    : conductor_(conductor), phi_(cyclotomic_polynomial(conductor))
{
}

void CycField::reduce(std::vector<mpq_class>& poly) const
{
    const std::size_t d = static_cast<std::size_t>(degree());
    for (std::size_t i = poly.size(); i-- > d;) {
        if (poly[i] == 0)
            continue;
        const mpq_class c = poly[i];
        for (std::size_t j = 0; j <= d; ++j)
            poly[i - d + j] -= c * phi_[j];
    }
    poly.resize(d);
}

FieldRef make_field(unsigned conductor)
{
    if (conductor == 0)
        throw DomainError("cyclotomic conductor must be positive");
    std::lock_guard<std::mutex> lock(field_cache_mutex);
    auto& cache = field_cache();
    auto it = cache.find(conductor);
    if (it == cache.end())
        it = cache.emplace(conductor, std::make_shared<const CycField>(conductor)).first;
    return it->second;
}

CycNum::CycNum(FieldRef field) : field_(std::move(field))
{
    if (!field_)
        throw DomainError("CycNum requires a field");
    coords_.resize(static_cast<std::size_t>(field_->degree()));
}

CycNum::CycNum(FieldRef field, std::vector<mpq_class> coords)
    : field_(std::move(field)), coords_(std::move(coords))
{
    if (!field_)
        throw DomainError("CycNum requires a field");
    for (auto& c : coords_)
        c.canonicalize();
    if (coords_.size() != static_cast<std::size_t>(field_->degree()))
        field_->reduce(coords_);
}

CycNum CycNum::rational(FieldRef field, const mpq_class& value)
{
    CycNum out(std::move(field));
    out.coords_[0] = value;
    return out;
}

CycNum CycNum::root_of_unity(FieldRef field, long exponent)
{
    const long m = static_cast<long>(field->conductor());
    long e = exponent % m;
    if (e < 0)
        e += m;
    std::vector<mpq_class> poly(std::max<std::size_t>(static_cast<std::size_t>(e) + 1,
                                                      static_cast<std::size_t>(field->degree())));
    poly[static_cast<std::size_t>(e)] = 1;
    field->reduce(poly);
    return CycNum(std::move(field), std::move(poly));
}

bool CycNum::is_zero() const
{
    for (const auto& c : coords_)
        if (c != 0)
            return false;
    return true;
}

bool CycNum::is_one() const
{
    if (coords_[0] != 1)
        return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0)
            return false;
    return true;
}

bool CycNum::is_rational() const
{
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0)
            return false;
    return true;
}

bool CycNum::is_integral() const
{
    for (const auto& c : coords_)
        if (c.get_den() != 1)
            return false;
    return true;
}

mpz_class CycNum::denominator_lcm() const
{
    mpz_class l = 1;
    for (const auto& c : coords_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

void CycNum::check_same_field(const CycNum& rhs) const
{
    if (field_ != rhs.field_ && field_->conductor() != rhs.field_->conductor())
        throw DomainError("cyclotomic field mismatch: M=" + std::to_string(field_->conductor()) +
                          " vs M=" + std::to_string(rhs.field_->conductor()));
}

CycNum& CycNum::operator+=(const CycNum& rhs)
{
    check_same_field(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += rhs.coords_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs)
{
    check_same_field(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= rhs.coords_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs)
{
    *this = *this * rhs;
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& rhs)
{
    *this = *this * rhs.inverse();
    return *this;
}

CycNum& CycNum::operator*=(const mpq_class& rhs)
{
    for (auto& c : coords_)
        c *= rhs;
    return *this;
}

CycNum operator*(const CycNum& lhs, const CycNum& rhs)
{
    lhs.check_same_field(rhs);
    const std::size_t d = lhs.coords_.size();
    if (d == 1)
        return CycNum(lhs.field_, {lhs.coords_[0] * rhs.coords_[0]});
    if (rhs.is_rational())
        return lhs * rhs.coords_[0];
    if (lhs.is_rational())
        return rhs * lhs.coords_[0];
    std::vector<mpq_class> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (lhs.coords_[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            if (rhs.coords_[j] != 0)
                prod[i + j] += lhs.coords_[i] * rhs.coords_[j];
    }
    lhs.field_->reduce(prod);
    CycNum out(lhs.field_);
    out.coords_ = std::move(prod);
    return out;
}

CycNum CycNum::operator-() const
{
    CycNum out(*this);
    for (auto& c : out.coords_)
        c = -c;
    return out;
}

bool operator==(const CycNum& lhs, const CycNum& rhs)
{
    return lhs.field_->conductor() == rhs.field_->conductor() && lhs.coords_ == rhs.coords_;
}

CycNum CycNum::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    if (is_rational())
        return rational(field_, 1 / coords_[0]);

    QPoly r0(field_->phi().begin(), field_->phi().end());
    QPoly r1 = coords_;
    trim(r1);
    QPoly s0, s1{1};
    // invariant: s_i * x == r_i (mod Phi)
    while (r1.size() > 1) {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly next = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    if (r1.empty())
        throw Fault("extended Euclid: element shares a factor with Phi_M");
    const mpq_class scale = 1 / r1[0];
    for (auto& c : s1)
        c *= scale;
    if (s1.size() < coords_.size())
        s1.resize(coords_.size());
    return CycNum(field_, std::move(s1));
}

CycNum CycNum::pow(long exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    CycNum result = rational(field_, 1);
    CycNum base = *this;
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

std::string CycNum::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const mpq_class& c = coords_[i];
        if (c == 0)
            continue;
        mpq_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "z";
        if (i > 1)
            os << "^" << i;
    }
    return first ? "0" : os.str();
}

CycNum embed(const CycNum& x, const FieldRef& target)
{
    const unsigned from = x.field()->conductor();
    const unsigned to = target->conductor();
    if (to % from != 0)
        throw DomainError("cannot embed Q(z_" + std::to_string(from) + ") into Q(z_" +
                          std::to_string(to) + ")");
    if (from == to)
        return CycNum(target, x.coords());
    const long step = static_cast<long>(to / from);
    CycNum out(target);
    for (std::size_t j = 0; j < x.coords().size(); ++j)
        if (x.coords()[j] != 0)
            out += CycNum::root_of_unity(target, static_cast<long>(j) * step) * x.coords()[j];
    return out;
}

nlohmann::json to_json(const CycNum& x)
{
    nlohmann::json num = nlohmann::json::array();
    nlohmann::json den = nlohmann::json::array();
    for (const auto& c : x.coords()) {
        num.push_back(c.get_num().get_str());
        den.push_back(c.get_den().get_str());
    }
    return {{"M", x.field()->conductor()}, {"num", num}, {"den", den}};
}

CycNum cycnum_from_json(const nlohmann::json& j, const FieldRef& field)
{
    const auto& num = j.at("num");
    const auto& den = j.at("den");
    if (!num.is_array() || !den.is_array() || num.size() != den.size())
        throw DomainError("CycNum json: num/den must be arrays of equal length");
    std::vector<mpq_class> coords;
    coords.reserve(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
        mpq_class c(mpz_class(num[i].get<std::string>()), mpz_class(den[i].get<std::string>()));
        if (c.get_den() == 0)
            throw DomainError("CycNum json: zero denominator");
        c.canonicalize();
        coords.push_back(std::move(c));
    }
    const FieldRef source = make_field(j.at("M").get<unsigned>());
    if (coords.size() != static_cast<std::size_t>(source->degree()))
        throw DomainError("CycNum json: coordinate count does not match field degree");
    return embed(CycNum(source, std::move(coords)), field);
}

CycNum cycnum_from_json(const nlohmann::json& j)
{
    return cycnum_from_json(j, make_field(j.at("M").get<unsigned>()));
}

CycNum parse_scalar(const std::string& text, const FieldRef& field)
{
    std::string s = text;
    bool negative = false;
    if (!s.empty() && s[0] == '-' && s.find('z') != std::string::npos) {
        negative = true;
        s.erase(0, 1);
    }
    if (!s.empty() && s[0] == 'z') {
        long e = 1;
        if (s.size() > 1) {
            if (s.size() < 3 || s[1] != '^')
                throw DomainError("bad scalar '" + text + "'");
            try {
                e = std::stol(s.substr(2));
            } catch (const std::exception&) {
                throw DomainError("bad scalar '" + text + "'");
            }
        }
        CycNum out = CycNum::root_of_unity(field, e);
        return negative ? -out : out;
    }
    mpq_class value;
    if (value.set_str(s, 10) != 0 || value.get_den() == 0)
        throw DomainError("bad scalar '" + text + "'");
    value.canonicalize();
    return CycNum::rational(field, value);
}

} // namespace wheelsym
