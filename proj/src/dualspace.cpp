#include "wheelsym/dualspace.hpp"

#include <functional>

#include "wheelsym/error.hpp"
#include "wheelsym/linalg.hpp"

namespace wheelsym {

EElement::EElement(int factors, FieldRef field) : factors_(factors), field_(std::move(field))
{
    if (factors < 0)
        throw DomainError("factor count must be nonnegative");
}

EElement EElement::basis(const Partition& lambda, const FieldRef& field)
{
    EElement out(lambda.length(), field);
    out.add_term(lambda, CycNum::rational(field, 1));
    return out;
}

CycNum EElement::coefficient(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? CycNum(field_) : it->second;
}

void EElement::add_term(const Partition& lambda, const CycNum& c)
{
    if (lambda.length() != factors_)
        throw DomainError("e-monomial " + lambda.key() + " does not have " + std::to_string(factors_) +
                          " factors");
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(lambda, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

EElement& EElement::operator+=(const EElement& rhs)
{
    for (const auto& [lambda, c] : rhs.terms_)
        add_term(lambda, c);
    return *this;
}

EElement& EElement::operator-=(const EElement& rhs)
{
    for (const auto& [lambda, c] : rhs.terms_)
        add_term(lambda, -c);
    return *this;
}

EElement operator*(EElement a, const CycNum& c)
{
    if (c.is_zero()) {
        a.terms_.clear();
        return a;
    }
    for (auto& [lambda, v] : a.terms_)
        v *= c;
    return a;
}

EElement operator*(const EElement& a, const EElement& b)
{
    EElement out(a.factors_ + b.factors_, a.field_);
    for (const auto& [la, ca] : a.terms_)
        for (const auto& [lb, cb] : b.terms_)
            out.add_term(la.join(lb), ca * cb);
    return out;
}

bool operator==(const EElement& a, const EElement& b)
{
    if (a.factors_ != b.factors_ || a.terms_.size() != b.terms_.size())
        return false;
    auto x = a.terms_.begin();
    auto y = b.terms_.begin();
    for (; x != a.terms_.end(); ++x, ++y)
        if (x->first != y->first || !(x->second == y->second))
            return false;
    return true;
}

CycNum pairing(const EElement& e, const SymPoly& f)
{
    CycNum sum(f.field());
    if (e.factors() != f.nvars())
        return sum;
    for (const auto& [lambda, c] : e.terms())
        sum += c * f.m_coefficient(lambda);
    return sum;
}

EElement epsilon(int i, int k, const CycNum& t)
{
    if (i < 0 || k < 1)
        throw DomainError("epsilon needs i >= 0 and k >= 1");
    const int total = i * (k + 1);
    EElement out(k + 1, t.field());
    std::vector<int> comp(static_cast<std::size_t>(k) + 1, 0);
    // compositions (a_0..a_k) of total, weighted by t^{sum j a_j}
    std::function<void(int, int, long)> walk = [&](int pos, int left, long twist) {
        if (pos == k) {
            comp[pos] = left;
            out.add_term(Partition::from_unsorted(comp), t.pow(twist + static_cast<long>(k) * left));
            return;
        }
        for (int a = 0; a <= left; ++a) {
            comp[pos] = a;
            walk(pos + 1, left - a, twist + static_cast<long>(pos) * a);
        }
    };
    walk(0, total, 0);
    return out;
}

EElement straighten(const EElement& e, int k, const CycNum& t)
{
    std::map<Partition, CycNum> terms = e.terms();
    std::map<int, EElement> relations;
    auto accumulate = [&](const Partition& nu, const CycNum& c) {
        auto [pos, fresh] = terms.try_emplace(nu, c);
        if (!fresh) {
            pos->second += c;
            if (pos->second.is_zero())
                terms.erase(pos);
        }
    };

    auto it = terms.begin();
    while (it != terms.end()) {
        const Partition lambda = it->first;
        const CycNum c = it->second;
        if (lambda.multiplicity(0) > k) {
            // e_0^{k+1} = epsilon_0 lies in J
            it = terms.erase(it);
            continue;
        }
        int value = -1;
        for (int i = 0; i < lambda.length();) {
            int j = i;
            while (j < lambda.length() && lambda[j] == lambda[i])
                ++j;
            if (j - i > k) {
                value = lambda[i];
                break;
            }
            i = j;
        }
        if (value < 0) {
            ++it;
            continue;
        }

        auto rel = relations.find(value);
        if (rel == relations.end())
            rel = relations.emplace(value, epsilon(value, k, t)).first;
        const Partition block(std::vector<int>(static_cast<std::size_t>(k) + 1, value));
        const Partition rest = lambda.without(value, k + 1);
        const CycNum lead = rel->second.coefficient(block);
        if (lead.is_zero())
            throw Fault("epsilon_" + std::to_string(value) + " has no e_i^{k+1} term");
        const CycNum factor = -c / lead;

        terms.erase(it);
        for (const auto& [mu, cm] : rel->second.terms()) {
            if (mu == block)
                continue;
            const Partition nu = mu.join(rest);
            if (!(nu > lambda))
                throw Fault("straightening rewrite " + lambda.key() + " -> " + nu.key() +
                            " is not lexicographically increasing");
            accumulate(nu, factor * cm);
        }
        it = terms.upper_bound(lambda);
    }

    EElement out(e.factors(), e.field());
    for (const auto& [lambda, c] : terms)
        out.add_term(lambda, c);
    return out;
}

std::size_t complement_dimension(int k, const CycNum& t, int n, int d)
{
    if (n < k + 1)
        throw DomainError("complement_dimension needs n >= k+1");
    const FieldRef& field = t.field();
    const auto columns = partitions_of(d, n);
    std::map<Partition, std::size_t> index;
    for (std::size_t j = 0; j < columns.size(); ++j)
        index.emplace(columns[j], j);

    Matrix rows;
    for (int i = 0; (k + 1) * i <= d; ++i) {
        const EElement eps = epsilon(i, k, t);
        for (const auto& mu : partitions_of(d - (k + 1) * i, n - k - 1)) {
            const EElement prod = eps * EElement::basis(mu, field);
            Row row(columns.size(), CycNum(field));
            for (const auto& [lambda, c] : prod.terms())
                row[index.at(lambda)] = c;
            rows.push_back(std::move(row));
        }
    }
    return rank_fraction_free(std::move(rows), columns.size());
}

nlohmann::json to_json(const EElement& e)
{
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [lambda, c] : e.terms())
        terms[lambda.key()] = to_json(c);
    return {{"M", e.field()->conductor()}, {"factors", e.factors()}, {"terms", terms}};
}

} // namespace wheelsym
