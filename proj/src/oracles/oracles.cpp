#include "framelab/oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace framelab::oracle {

std::size_t rational_rank(const IntMatrix &a) {
    if (a.empty())
        return 0;
    std::vector<std::vector<mpq_class>> m;
    for (const auto &row : a)
        m.emplace_back(row.begin(), row.end());
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0)
                continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

mpz_class leibniz_det(const IntMatrix &a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        mpz_class term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i)
            term *= a[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

mpz_class maximal_minor_gcd(const IntMatrix &a) {
    const std::size_t r = a.size();
    if (r == 0)
        return 1;
    const std::size_t k = a.front().size();
    if (k < r)
        return 0;
    // choose r of k columns via a selection mask
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
    mpz_class g = 0;
    do {
        IntMatrix minor(r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (pick[j])
                    minor[i].push_back(a[i][j]);
        mpz_class d = leibniz_det(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return g;
}

bool cokernel_vanishes_over_zhalf(const IntMatrix &a) {
    if (a.empty())
        return true;
    if (rational_rank(a) < a.size())
        return false;
    mpz_class g = maximal_minor_gcd(a);
    while (g % 2 == 0)
        g /= 2;
    return g == 1;
}

namespace {

mpz_class power(long q, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
    return r;
}

} // namespace

mpz_class line_count(long q, long n) { return (power(q, n) - 1) / (q - 1); }

mpz_class gl_order(long q, long n) {
    mpz_class r = 1;
    for (long i = 0; i < n; ++i)
        r *= power(q, n) - power(q, i);
    return r;
}

mpz_class frame_count(long q, long n) {
    mpz_class denom = power(q - 1, n);
    for (long i = 2; i <= n; ++i)
        denom *= i;
    return gl_order(q, n) / denom;
}

mpz_class steinberg_rank(long q, long n) { return power(q, n * (n - 1) / 2); }

mpz_class gaussian_binomial(long q, long n, long k) {
    if (k < 0 || k > n)
        return 0;
    mpz_class num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= power(q, n - i) - 1;
        den *= power(q, i + 1) - 1;
    }
    return num / den;
}

namespace {

// Leibniz again, in machine integers: the search calls this millions of times.
long det_small(const std::vector<std::vector<long>> &rows) {
    const std::size_t n = rows.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long total = 0;
    do {
        long term = 1;
        for (std::size_t i = 0; i < n; ++i)
            term *= rows[i][perm[i]];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    term = -term;
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

bool search(std::vector<std::vector<long>> &rows, std::size_t n, long bound) {
    if (rows.size() == n) {
        const long d = det_small(rows);
        return d == 1 || d == -1;
    }
    std::vector<long> v(n, -bound);
    while (true) {
        rows.push_back(v);
        const bool found = search(rows, n, bound);
        rows.pop_back();
        if (found)
            return true;
        std::size_t i = 0;
        while (i < n && v[i] == bound)
            v[i++] = -bound;
        if (i == n)
            return false;
        ++v[i];
    }
}

} // namespace

bool completes_to_basis(const std::vector<std::vector<long>> &vs, std::size_t n, long bound) {
    if (vs.size() > n)
        return false;
    std::vector<std::vector<long>> rows = vs;
    return search(rows, n, bound);
}

BruteAbelianization brute_abelianization_gl2(long p) {
    using M = std::array<long, 4>;
    auto mul = [p](const M &x, const M &y) {
        return M{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                 (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
    };
    std::vector<M> group;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d)
                    if (((a * d - b * c) % p + p) % p != 0)
                        group.push_back({a, b, c, d});
    auto inv = [&](const M &x) {
        for (const M &y : group)
            if (mul(x, y) == M{1, 0, 0, 1})
                return y;
        return x;
    };
    std::set<M> comm;
    for (const M &x : group)
        for (const M &y : group)
            comm.insert(mul(mul(x, y), mul(inv(x), inv(y))));
    // close under products
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<M> cur(comm.begin(), comm.end());
        for (const M &x : cur)
            for (const M &y : cur)
                grew |= comm.insert(mul(x, y)).second;
    }
    return {group.size(), comm.size()};
}

} // namespace framelab::oracle
