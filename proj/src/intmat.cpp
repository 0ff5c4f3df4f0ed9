#include "ge2/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace ge2 {

std::string rat_str(Rat const &r)
{
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1)
        os << "/" << den(r);
    return os.str();
}

Rat rat_parse(std::string const &s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0)
            throw parse_error("zero denominator in rational '" + s + "'");
        return Rat(n, d);
    } catch (std::exception const &) {
        throw parse_error("bad rational literal '" + s + "'");
    }
}

namespace {

// Reduce rows so that exactly one row >= `start` has a nonzero entry in
// column `col`, and that row sits at index `start`.  Classic gcd pivoting.
bool pivot_column(IMat &a, size_t start, size_t col)
{
    while (true) {
        size_t best = a.size();
        for (size_t i = start; i < a.size(); ++i)
            if (a[i][col] != 0 &&
                (best == a.size() || abs(a[i][col]) < abs(a[best][col])))
                best = i;
        if (best == a.size())
            return false;
        std::swap(a[start], a[best]);
        bool others = false;
        for (size_t i = start + 1; i < a.size(); ++i) {
            if (a[i][col] == 0)
                continue;
            Int q = a[i][col] / a[start][col];
            if (q != 0)
                for (size_t j = 0; j < a[i].size(); ++j)
                    a[i][j] -= q * a[start][j];
            if (a[i][col] != 0)
                others = true;
        }
        if (!others)
            return true;
    }
}

} // namespace

IMat hnf(IMat a)
{
    if (a.empty())
        return {};
    size_t n = a[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < a.size(); ++col) {
        if (!pivot_column(a, r, col))
            continue;
        if (a[r][col] < 0)
            for (auto &x : a[r])
                x = -x;
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(a[i][col], a[r][col]);
            if (q != 0)
                for (size_t j = 0; j < n; ++j)
                    a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

int imat_rank(IMat a) { return static_cast<int>(hnf(std::move(a)).size()); }

IVec hnf_reduce(IMat const &h, IVec v)
{
    for (auto const &row : h) {
        size_t pc = 0;
        while (pc < row.size() && row[pc] == 0)
            ++pc;
        if (pc == row.size())
            continue;
        Int q = floor_div(v[pc], row[pc]);
        if (q != 0)
            for (size_t j = 0; j < v.size(); ++j)
                v[j] -= q * row[j];
    }
    return v;
}

std::vector<Int> snf_invariants(IMat a)
{
    a = hnf(std::move(a)); // prune to rank many rows first
    if (a.empty())
        return {};
    size_t rows = a.size(), cols = a[0].size();
    size_t r = std::min(rows, cols);
    std::vector<Int> d;
    size_t t = 0;
    while (t < r) {
        // move the smallest nonzero entry of the trailing block to (t,t)
        size_t pi = rows, pj = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break; // block is zero
        std::swap(a[t], a[pi]);
        for (size_t i = 0; i < rows; ++i)
            std::swap(a[i][t], a[i][pj]);
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            Int q = a[i][t] / a[t][t];
            if (q != 0)
                for (size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
            if (a[i][t] != 0)
                clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            Int q = a[t][j] / a[t][t];
            if (q != 0)
                for (size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
            if (a[t][j] != 0)
                clean = false;
        }
        if (!clean)
            continue; // remainders left; pick a new (smaller) pivot
        // pivot must divide the rest of the block
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    // fold row i into row t and retry
                    for (size_t k = t; k < cols; ++k)
                        a[t][k] += a[i][k];
                    divides = false;
                }
        if (!divides)
            continue;
        d.push_back(abs(a[t][t]));
        ++t;
    }
    return d;
}

bool hnf_contains(IMat const &h, IVec const &v)
{
    return hnf_solve(h, v).has_value();
}

std::optional<IVec> hnf_solve(IMat const &h, IVec const &v)
{
    IVec rem = v, coef(h.size(), 0);
    size_t n = rem.size();
    size_t row = 0;
    for (size_t col = 0; col < n; ++col) {
        size_t prow = n; // row whose pivot is at this column, if any
        if (row < h.size()) {
            size_t pc = 0;
            while (pc < n && h[row][pc] == 0)
                ++pc;
            if (pc == col)
                prow = row;
        }
        if (prow == n) {
            if (rem[col] != 0)
                return std::nullopt;
            continue;
        }
        if (rem[col] % h[row][col] != 0)
            return std::nullopt;
        Int q = rem[col] / h[row][col];
        coef[row] = q;
        if (q != 0)
            for (size_t j = col; j < n; ++j)
                rem[j] -= q * h[row][j];
        ++row;
    }
    for (auto const &x : rem)
        if (x != 0)
            return std::nullopt;
    return coef;
}

std::string AbInvariants::str() const
{
    std::ostringstream os;
    if (torsion.empty() && free_rank == 0)
        return "0";
    bool first = true;
    for (auto const &d : torsion) {
        if (!first)
            os << " x ";
        os << "C" << d;
        first = false;
    }
    for (int i = 0; i < free_rank; ++i) {
        if (!first)
            os << " x ";
        os << "Z";
        first = false;
    }
    return os.str();
}

AbInvariants ab_quotient(int n, IMat const &sub)
{
    AbInvariants inv;
    auto d = snf_invariants(sub);
    inv.free_rank = n - static_cast<int>(d.size());
    for (auto const &x : d)
        if (x > 1)
            inv.torsion.push_back(x);
    return inv;
}

} // namespace ge2
