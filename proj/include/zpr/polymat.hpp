/*
   Copyright 2026 The zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <vector>

#include "poly.hpp"

namespace zpr {

/// Dense k x n matrix of polynomials over a shared Z_{p^r}.
class PolyMatrix {
   public:
    PolyMatrix(const RingSpec& ring, int rows, int cols);

    static PolyMatrix identity(const RingSpec& ring, int n);

    const RingSpec& ring() const noexcept { return ring_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    const Poly& at(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, Poly p);

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix transpose() const;
    PolyMatrix submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;
    std::vector<Poly> row(int i) const;

    /// Largest entry degree; -1 for the zero matrix.
    int max_degree() const noexcept;
    bool is_zero() const noexcept;

    static PolyMatrix stack_vertical(const PolyMatrix& top, const PolyMatrix& bottom);
    static PolyMatrix concat_horizontal(const PolyMatrix& left, const PolyMatrix& right);

   private:
    std::size_t index(int i, int j) const;

    RingSpec ring_;
    int rows_;
    int cols_;
    std::vector<Poly> entries_;
};

PolyMatrix project_p(const PolyMatrix& a);
PolyMatrix lift_digits(const PolyMatrix& a, const RingSpec& target);

/// Exact determinant by cofactor expansion with memoization on column
/// subsets. Enforced to square matrices of size at most 8.
Poly determinant(const PolyMatrix& a);

/// True iff det(a) is a unit of Z_{p^r}[d]; equivalently the projected
/// determinant is a nonzero constant. Both routes are evaluated and must
/// agree.
bool is_unimodular(const PolyMatrix& a);

struct MinorTerm {
    std::vector<int> row_ids;
    std::vector<int> col_ids;
    Poly value;
};

/// All m x m minors, each with its row/column index sets, enumerated in
/// lexicographic order over (row set, column set). For m = rows this is the
/// family of full-size minors indexed by column sets alone.
std::vector<MinorTerm> full_size_minors(const PolyMatrix& a, int m);

/// Smith normal form over the field Z_p: U*A*V = S with S diagonal, monic
/// invariant factors in a divisibility chain, and U, V unimodular. The
/// inverses are accumulated from the same elementary operations.
struct SmithDecomposition {
    PolyMatrix U;
    PolyMatrix S;
    PolyMatrix V;
    PolyMatrix U_inv;
    PolyMatrix V_inv;
    int rank;
};

SmithDecomposition smith_form(const PolyMatrix& a);

/// Inverse of a square matrix congruent to the identity mod p, computed as
/// the finite geometric series sum_{i<r} (I - M)^i.
PolyMatrix geometric_inverse(const PolyMatrix& m);

/// Polynomial right inverse over Z_{p^r}[d] when one exists: the projected
/// matrix is reduced to [I 0] over Z_p, the field inverse is lifted, and the
/// defect I - A*B is absorbed by a geometric series. The returned matrix is
/// verified by multiplication; absence means the projection is not left
/// prime.
std::optional<PolyMatrix> right_inverse(const PolyMatrix& a);

/// Constructive reduction of a left zero-prime matrix to [I 0]:
/// row_transform * A * col_transform = [I 0] with both transforms unimodular.
/// col_transform_inv is assembled from the same factored pieces.
struct IdentityZeroReduction {
    PolyMatrix row_transform;
    PolyMatrix col_transform;
    PolyMatrix col_transform_inv;
};

IdentityZeroReduction reduce_to_identity_zero(const PolyMatrix& a);

/// A complement B such that stacking A on top of B is unimodular. Requires A
/// left zero-prime.
PolyMatrix unimodular_completion(const PolyMatrix& a);

}  // namespace zpr
