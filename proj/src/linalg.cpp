#include "wheelsym/linalg.hpp"

#include "wheelsym/error.hpp"

namespace wheelsym {

std::size_t rank_fraction_free(Matrix m, std::size_t ncols)
{
    if (m.empty() || ncols == 0)
        return 0;
    const FieldRef field = m[0][0].field();
    for (auto& row : m) {
        if (row.size() != ncols)
            throw DomainError("matrix row has wrong length");
        mpz_class scale = 1;
        for (const auto& x : row)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.denominator_lcm().get_mpz_t());
        if (scale != 1)
            for (auto& x : row)
                x *= mpq_class(scale);
    }

    CycNum prev = CycNum::rational(field, 1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        const CycNum prev_inv = prev.inverse();
        const CycNum& pivot = m[r][col];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const CycNum lead = m[i][col];
            for (std::size_t j = col + 1; j < ncols; ++j) {
                CycNum v = (pivot * m[i][j] - lead * m[r][j]) * prev_inv;
                if (!v.is_integral())
                    throw Fault("fraction-free elimination produced a non-integral entry");
                m[i][j] = std::move(v);
            }
            m[i][col] = CycNum(field);
        }
        prev = pivot;
        ++r;
    }
    return r;
}

RowEchelon row_reduce(Matrix m, std::size_t ncols)
{
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        const CycNum inv = m[r][col].inverse();
        for (std::size_t j = col; j < ncols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col].is_zero())
                continue;
            const CycNum factor = m[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                m[i][j] -= factor * m[r][j];
        }
        out.pivots.push_back(col);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::vector<Row> nullspace(const Matrix& m, std::size_t ncols, const FieldRef& field)
{
    const RowEchelon ech = row_reduce(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : ech.pivots)
        is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        Row v(ncols, CycNum(field));
        v[free] = CycNum::rational(field, 1);
        for (std::size_t i = 0; i < ech.rows.size(); ++i)
            v[ech.pivots[i]] = -ech.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Row> solve_square(Matrix a, Row b)
{
    const std::size_t n = a.size();
    if (b.size() != n)
        throw DomainError("solve_square: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw DomainError("solve_square: matrix is not square");
        a[i].push_back(b[i]);
    }
    const RowEchelon ech = row_reduce(std::move(a), n + 1);
    if (ech.pivots.size() != n || (n > 0 && ech.pivots.back() != n - 1))
        return std::nullopt;
    Row x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        x.push_back(ech.rows[i][n]);
    return x;
}

} // namespace wheelsym
