#pragma once

// Reference computations that share no code with the engine: plain rational
// elimination, Leibniz minors, closed-form counts and a brute-force
// commutator quotient. Only for small inputs.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace framelab::oracle {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Rank over Q by Gaussian elimination on mpq_class entries.
std::size_t rational_rank(const IntMatrix &a);

/// Determinant by the Leibniz sum over permutations.
mpz_class leibniz_det(const IntMatrix &a);

/// gcd of all r x r minors of an r x k matrix (k >= r); 0 if none is nonzero.
mpz_class maximal_minor_gcd(const IntMatrix &a);

/// Z^rows / (column span of a) tensor Z[1/2] vanishes: full rational rank and
/// the gcd of maximal minors is a power of two.
bool cokernel_vanishes_over_zhalf(const IntMatrix &a);

/// Number of lines in F_q^n.
mpz_class line_count(long q, long n);

/// |GL_n(F_q)|.
mpz_class gl_order(long q, long n);

/// Frames of F_q^n, i.e. top simplices of the partial-frame complex.
mpz_class frame_count(long q, long n);

/// Rank of the top homology of the Tits building of F_q^n.
mpz_class steinberg_rank(long q, long n);

/// Number of k-dimensional subspaces of F_q^n.
mpz_class gaussian_binomial(long q, long n, long k);

/// Integer vectors in Z^n extend to a basis, decided by searching for
/// completing vectors with entries in [-bound, bound] (determinant +-1).
bool completes_to_basis(const std::vector<std::vector<long>> &vs, std::size_t n, long bound);

struct BruteAbelianization {
    std::size_t group_order = 0;
    std::size_t commutator_order = 0;
};

/// GL_2(F_p) listed by brute force, commutator subgroup by closure.
BruteAbelianization brute_abelianization_gl2(long p);

} // namespace framelab::oracle
