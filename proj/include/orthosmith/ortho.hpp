#ifndef ORTHOSMITH_ORTHO_HPP
#define ORTHOSMITH_ORTHO_HPP

#include <vector>

#include "orthosmith/matrix.hpp"

namespace orthosmith {

// A rational orthogonal matrix packaged with its level ell (the least
// positive integer with ell*Q integral) and the integer matrix G = ell*Q.
struct RationalOrthogonalMatrix {
    Matrix<Rational> Q;
    Integer level;
    Matrix<Integer> G;
};

// Integer quaternion (a, b, c, d) parametrizing a 3x3 special orthogonal
// rational matrix.  Primitive means gcd(a, b, c, d) = 1; the sign convention
// (first nonzero coordinate positive) picks one of {v, -v}.
struct Quaternion4 {
    Integer a, b, c, d;

    friend bool operator==(const Quaternion4& x, const Quaternion4& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

// Least positive integer ell with ell*Q integral: the lcm of the entry
// denominators (entries are stored in lowest terms).
Integer matrix_level(const Matrix<Rational>& q);

// Validates orthogonality exactly and derives level and G.
RationalOrthogonalMatrix rational_orthogonal(Matrix<Rational> q);

// All (a, b) with a^2 + b^2 = m and gcd(a, b) = 1, signs and order included.
std::vector<std::pair<Integer, Integer>> primitive_reps_two_squares(const Integer& m);

// All primitive (a, b, c, d) with a^2 + b^2 + c^2 + d^2 = m, all signs.
std::vector<Quaternion4> primitive_reps_four_squares(const Integer& m);

// Closed-form count of the primitive four-square representations:
// c4(m) * m * prod_{odd p | m} (1 + 1/p), with c4 = 8 / 12 / 4 according to
// m odd / 2 || m / 4 || m.  Undefined when 8 | m.
Integer count_r4p(const Integer& m);

// The 3x3 special orthogonal matrix attached to a nonzero quaternion, with
// denominator s = a^2+b^2+c^2+d^2 and level s/g where g = gcd(s, entries).
RationalOrthogonalMatrix euler_rodrigues(const Quaternion4& q);

// Every rational orthogonal 2x2 matrix of level exactly ell: a rotation and
// a reflection per primitive representation of ell^2 as two squares.
std::vector<RationalOrthogonalMatrix> enumerate_O2(const Integer& ell);

// Every rational orthogonal 3x3 matrix of level exactly ell.  Sweeps
// primitive quaternions with square-sum in {ell, 2*ell, 4*ell} (only levels
// of that shape can be ell), keeps the sign-normalized half, maps through
// euler_rodrigues, and appends the negation of each determinant-one matrix.
std::vector<RationalOrthogonalMatrix> enumerate_O3(const Integer& ell);

} // namespace orthosmith

#endif
