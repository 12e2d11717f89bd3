#include "wheelsym/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wheelsym/error.hpp"

namespace wheelsym {

namespace {

int total(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

// Powers base^0..base^max_e, computed once per variable.
std::vector<CycNum> power_table(const CycNum& base, int max_e)
{
    std::vector<CycNum> out;
    out.reserve(static_cast<std::size_t>(max_e) + 1);
    out.push_back(CycNum::rational(base.field(), 1));
    for (int e = 1; e <= max_e; ++e)
        out.push_back(out.back() * base);
    return out;
}

std::vector<int> max_exponents(const MPoly& f)
{
    std::vector<int> mx(static_cast<std::size_t>(f.nvars()), 0);
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            mx[i] = std::max(mx[i], e[i]);
    return mx;
}

unsigned long factorial(int n)
{
    unsigned long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<unsigned long>(i);
    return f;
}

std::size_t orbit_size(const Partition& lambda)
{
    unsigned long size = factorial(lambda.length());
    for (int i = 0; i < lambda.length();) {
        int j = i;
        while (j < lambda.length() && lambda[j] == lambda[i])
            ++j;
        size /= factorial(j - i);
        i = j;
    }
    return size;
}

} // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const
{
    const int da = total(a);
    const int db = total(b);
    if (da != db)
        return da < db;
    return a < b;
}

MPoly::MPoly(int nvars, FieldRef field) : nvars_(nvars), field_(std::move(field))
{
    if (nvars < 0)
        throw DomainError("variable count must be nonnegative");
    if (!field_)
        throw DomainError("MPoly requires a field");
}

MPoly MPoly::constant(int nvars, const CycNum& c)
{
    MPoly out(nvars, c.field());
    out.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return out;
}

MPoly MPoly::variable(int nvars, int i, FieldRef field)
{
    if (i < 0 || i >= nvars)
        throw DomainError("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[i] = 1;
    MPoly out(nvars, field);
    out.add_term(e, CycNum::rational(field, 1));
    return out;
}

MPoly MPoly::monomial(Exponents exps, const CycNum& c)
{
    MPoly out(static_cast<int>(exps.size()), c.field());
    out.add_term(exps, c);
    return out;
}

int MPoly::degree() const
{
    return terms_.empty() ? -1 : total(terms_.rbegin()->first);
}

bool MPoly::is_homogeneous() const
{
    return terms_.empty() || total(terms_.begin()->first) == total(terms_.rbegin()->first);
}

CycNum MPoly::coefficient(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? CycNum(field_) : it->second;
}

void MPoly::add_term(const Exponents& exps, const CycNum& c)
{
    if (static_cast<int>(exps.size()) != nvars_)
        throw DomainError("exponent vector length does not match variable count");
    for (int e : exps)
        if (e < 0)
            throw DomainError("negative exponent");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

void MPoly::check_compatible(const MPoly& rhs) const
{
    if (nvars_ != rhs.nvars_)
        throw DomainError("polynomials have different variable counts");
    if (field_->conductor() != rhs.field_->conductor())
        throw DomainError("polynomials live over different fields");
}

MPoly& MPoly::operator+=(const MPoly& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const CycNum& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs)
{
    lhs.check_compatible(rhs);
    MPoly out(lhs.nvars_, lhs.field_);
    Exponents e(static_cast<std::size_t>(lhs.nvars_));
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::operator-() const
{
    MPoly out(*this);
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly result = constant(nvars_, CycNum::rational(field_, 1));
    for (unsigned i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

bool operator==(const MPoly& lhs, const MPoly& rhs)
{
    if (lhs.nvars_ != rhs.nvars_ || lhs.terms_.size() != rhs.terms_.size())
        return false;
    auto a = lhs.terms_.begin();
    auto b = rhs.terms_.begin();
    for (; a != lhs.terms_.end(); ++a, ++b)
        if (a->first != b->first || !(a->second == b->second))
            return false;
    return true;
}

MPoly MPoly::substitute(std::span<const MPoly> images) const
{
    if (static_cast<int>(images.size()) != nvars_)
        throw DomainError("substitution needs one image per variable");
    if (images.empty())
        return *this;
    const int target_vars = images[0].nvars();
    for (const auto& img : images)
        if (img.nvars() != target_vars)
            throw DomainError("substitution images must share a variable count");

    const auto mx = max_exponents(*this);
    std::vector<std::vector<MPoly>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        powers[i].push_back(constant(target_vars, CycNum::rational(field_, 1)));
        for (int e = 1; e <= mx[i]; ++e)
            powers[i].push_back(powers[i].back() * images[i]);
    }
    MPoly out(target_vars, field_);
    for (const auto& [e, c] : terms_) {
        MPoly term = constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = term * powers[i][e[i]];
        out += term;
    }
    return out;
}

CycNum MPoly::evaluate(std::span<const CycNum> point) const
{
    if (static_cast<int>(point.size()) != nvars_)
        throw DomainError("evaluation point has wrong dimension");
    const auto mx = max_exponents(*this);
    std::vector<std::vector<CycNum>> powers;
    powers.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i)
        powers.push_back(power_table(point[i], mx[i]));
    CycNum sum(field_);
    for (const auto& [e, c] : terms_) {
        CycNum term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term *= powers[i][e[i]];
        sum += term;
    }
    return sum;
}

MPoly MPoly::scale_variables(std::span<const CycNum> factors) const
{
    if (static_cast<int>(factors.size()) != nvars_)
        throw DomainError("need one scale factor per variable");
    const auto mx = max_exponents(*this);
    std::vector<std::vector<CycNum>> powers;
    for (std::size_t i = 0; i < factors.size(); ++i)
        powers.push_back(power_table(factors[i], mx[i]));
    MPoly out(nvars_, field_);
    for (const auto& [e, c] : terms_) {
        CycNum v = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                v *= powers[i][e[i]];
        out.add_term(e, v);
    }
    return out;
}

MPoly MPoly::permuted(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != nvars_)
        throw DomainError("permutation has wrong size");
    MPoly out(nvars_, field_);
    Exponents img(static_cast<std::size_t>(nvars_));
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            img[perm[i]] = e[i];
        out.terms_.emplace(img, c);
    }
    return out;
}

MPoly MPoly::swapped(int i, int j) const
{
    std::vector<int> perm(static_cast<std::size_t>(nvars_));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[j]);
    return permuted(perm);
}

MPoly MPoly::frobenius(int m) const
{
    if (m < 1)
        throw DomainError("Frobenius exponent must be positive");
    MPoly out(nvars_, field_);
    for (const auto& [e, c] : terms_) {
        Exponents img = e;
        for (auto& x : img)
            x *= m;
        out.terms_.emplace(std::move(img), c);
    }
    return out;
}

MPoly MPoly::embedded(const FieldRef& target) const
{
    MPoly out(nvars_, target);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, embed(c, target));
    return out;
}

bool MPoly::is_symmetric() const
{
    for (int i = 0; i + 1 < nvars_; ++i)
        if (!(swapped(i, i + 1) == *this))
            return false;
    return true;
}

std::string MPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0)
                continue;
            os << "*x" << (i + 1);
            if (it->first[i] > 1)
                os << "^" << it->first[i];
        }
    }
    return os.str();
}

MPoly antisymmetrize(const MPoly& f)
{
    const int n = f.nvars();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    MPoly out(n, f.field());
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        MPoly image = f.permuted(perm);
        if (inversions % 2)
            out -= image;
        else
            out += image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MPoly exact_divide(const MPoly& f, const MPoly& g)
{
    if (g.is_zero())
        throw DivisionByZero();
    if (f.nvars() != g.nvars())
        throw DomainError("exact_divide: variable counts differ");
    const auto& [lead_e, lead_c] = *g.terms().rbegin();
    const CycNum lead_inv = lead_c.inverse();
    MPoly rem = f;
    MPoly quot(f.nvars(), f.field());
    Exponents shift(static_cast<std::size_t>(f.nvars()));
    while (!rem.is_zero()) {
        const auto& [e, c] = *rem.terms().rbegin();
        for (std::size_t i = 0; i < shift.size(); ++i) {
            shift[i] = e[i] - lead_e[i];
            if (shift[i] < 0)
                throw NotDivisible("exact_divide: leading term " + MPoly::monomial(e, c).to_string() +
                                   " is not divisible by " + MPoly::monomial(lead_e, lead_c).to_string());
        }
        const CycNum factor = c * lead_inv;
        quot.add_term(shift, factor);
        MPoly step(f.nvars(), f.field());
        Exponents prod(shift.size());
        for (const auto& [ge, gc] : g.terms()) {
            for (std::size_t i = 0; i < prod.size(); ++i)
                prod[i] = ge[i] + shift[i];
            step.add_term(prod, gc * factor);
        }
        rem -= step;
    }
    return quot;
}

namespace {

MPoly linear_difference(int nvars, int i, int j, const FieldRef& field)
{
    return MPoly::variable(nvars, i, field) - MPoly::variable(nvars, j, field);
}

} // namespace

MPoly vandermonde(int nvars, FieldRef field)
{
    MPoly out = MPoly::constant(nvars, CycNum::rational(field, 1));
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
            out = out * linear_difference(nvars, i, j, field);
    return out;
}

MPoly divide_by_vandermonde(const MPoly& f)
{
    MPoly out = f;
    const int n = f.nvars();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out = exact_divide(out, linear_difference(n, i, j, f.field()));
    return out;
}

nlohmann::json to_json(const MPoly& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({{"exps", e}, {"coeff", to_json(c)}});
    return {{"n", f.nvars()}, {"M", f.field()->conductor()}, {"terms", terms}};
}

MPoly mpoly_from_json(const nlohmann::json& j)
{
    try {
        const int n = j.at("n").get<int>();
        const FieldRef field = make_field(j.at("M").get<unsigned>());
        MPoly out(n, field);
        for (const auto& t : j.at("terms")) {
            auto e = t.at("exps").get<Exponents>();
            if (static_cast<int>(e.size()) != n)
                throw DomainError("polynomial json: exponent vector of wrong length");
            out.add_term(e, cycnum_from_json(t.at("coeff"), field));
        }
        return out;
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("polynomial json: ") + ex.what());
    }
}

SymPoly::SymPoly(MPoly f) : poly_(std::move(f))
{
    // Every term must carry the coefficient of its sorted representative, and
    // the orbit sizes must account for every stored term.
    std::size_t covered = 0;
    for (const auto& [e, c] : poly_.terms()) {
        if (!std::is_sorted(e.begin(), e.end(), std::greater<>()))
            continue;
        Partition lambda(e);
        covered += orbit_size(lambda);
        m_.emplace(std::move(lambda), c);
    }
    bool symmetric = covered == poly_.size();
    if (symmetric) {
        for (const auto& [e, c] : poly_.terms()) {
            auto it = m_.find(Partition::from_unsorted(e));
            if (it == m_.end() || !(it->second == c)) {
                symmetric = false;
                break;
            }
        }
    }
    if (!symmetric)
        throw DomainError("polynomial is not symmetric");
}

SymPoly SymPoly::from_m_basis(int nvars, const FieldRef& field, const MExpansion& coeffs)
{
    MPoly f(nvars, field);
    for (const auto& [lambda, c] : coeffs) {
        if (lambda.length() != nvars)
            throw DomainError("m-basis partition " + lambda.key() + " has wrong length");
        f += monomial_sym(lambda, field).poly() * c;
    }
    return SymPoly(std::move(f));
}

SymPoly SymPoly::zero(int nvars, const FieldRef& field)
{
    return SymPoly(MPoly(nvars, field));
}

SymPoly SymPoly::constant(int nvars, const CycNum& c)
{
    return SymPoly(MPoly::constant(nvars, c));
}

CycNum SymPoly::m_coefficient(const Partition& lambda) const
{
    auto it = m_.find(lambda);
    return it == m_.end() ? CycNum(field()) : it->second;
}

Partition SymPoly::highest_partition() const
{
    if (m_.empty())
        throw DomainError("zero polynomial has no highest partition");
    return m_.rbegin()->first;
}

SymPoly monomial_sym(const Partition& lambda, const FieldRef& field)
{
    std::vector<int> e = lambda.parts();
    std::sort(e.begin(), e.end());
    MPoly f(lambda.length(), field);
    const CycNum one = CycNum::rational(field, 1);
    do {
        f.add_term(e, one);
    } while (std::next_permutation(e.begin(), e.end()));
    return SymPoly(std::move(f));
}

MExpansion to_m_basis(const MPoly& f)
{
    // Lex order on exponent vectors, so the leading term of a symmetric
    // polynomial is x^lambda with lambda sorted.
    std::map<Exponents, CycNum> rest(f.terms().begin(), f.terms().end());
    MExpansion out;
    while (!rest.empty()) {
        const auto [e, c] = *rest.rbegin();
        if (!std::is_sorted(e.begin(), e.end(), std::greater<>()))
            throw DomainError("polynomial is not symmetric");
        Partition lambda(e);
        const SymPoly orbit = monomial_sym(lambda, f.field());
        for (const auto& [me, one] : orbit.poly().terms()) {
            auto it = rest.find(me);
            if (it == rest.end())
                throw DomainError("polynomial is not symmetric");
            it->second -= c;
            if (it->second.is_zero())
                rest.erase(it);
        }
        out.emplace(std::move(lambda), c);
    }
    return out;
}

nlohmann::json m_expansion_to_json(const MExpansion& m)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [lambda, c] : m)
        out[lambda.key()] = to_json(c);
    return out;
}

} // namespace wheelsym
