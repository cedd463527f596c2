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

#include "zpr/polymat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace zpr {

PolyMatrix::PolyMatrix(const RingSpec& ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw DimensionMismatch("matrix dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Poly(ring));
}

PolyMatrix PolyMatrix::identity(const RingSpec& ring, int n) {
    PolyMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Poly::constant(ring, 1));
    return m;
}

std::size_t PolyMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw DimensionMismatch("matrix index out of range");
    }
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
}

void PolyMatrix::set(int i, int j, Poly p) {
    ring_.check_same(p.ring());
    entries_[index(i, j)] = std::move(p);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    ring_.check_same(o.ring_);
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    PolyMatrix out(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < o.cols_; ++j) {
            Poly acc(ring_);
            for (int t = 0; t < cols_; ++t) acc = acc + at(i, t) * o.at(t, j);
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    ring_.check_same(o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    PolyMatrix out(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) + o.at(i, j));
    }
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    ring_.check_same(o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape mismatch");
    PolyMatrix out(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) - o.at(i, j));
    }
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    ring_.check_same(o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != o.entries_[i]) return false;
    }
    return true;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    }
    return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& row_ids,
                                 const std::vector<int>& col_ids) const {
    PolyMatrix out(ring_, static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (std::size_t i = 0; i < row_ids.size(); ++i) {
        for (std::size_t j = 0; j < col_ids.size(); ++j) {
            out.set(static_cast<int>(i), static_cast<int>(j), at(row_ids[i], col_ids[j]));
        }
    }
    return out;
}

std::vector<Poly> PolyMatrix::row(int i) const {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

int PolyMatrix::max_degree() const noexcept {
    int d = -1;
    for (const Poly& p : entries_) d = std::max(d, p.degree());
    return d;
}

bool PolyMatrix::is_zero() const noexcept {
    for (const Poly& p : entries_) {
        if (!p.is_zero()) return false;
    }
    return true;
}

PolyMatrix PolyMatrix::stack_vertical(const PolyMatrix& top, const PolyMatrix& bottom) {
    top.ring().check_same(bottom.ring());
    if (top.cols() != bottom.cols()) throw DimensionMismatch("vertical stack width mismatch");
    PolyMatrix out(top.ring(), top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i) {
        for (int j = 0; j < top.cols(); ++j) out.set(i, j, top.at(i, j));
    }
    for (int i = 0; i < bottom.rows(); ++i) {
        for (int j = 0; j < bottom.cols(); ++j) out.set(top.rows() + i, j, bottom.at(i, j));
    }
    return out;
}

PolyMatrix PolyMatrix::concat_horizontal(const PolyMatrix& left, const PolyMatrix& right) {
    left.ring().check_same(right.ring());
    if (left.rows() != right.rows()) throw DimensionMismatch("horizontal concat height mismatch");
    PolyMatrix out(left.ring(), left.rows(), left.cols() + right.cols());
    for (int i = 0; i < left.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j) out.set(i, j, left.at(i, j));
        for (int j = 0; j < right.cols(); ++j) out.set(i, left.cols() + j, right.at(i, j));
    }
    return out;
}

PolyMatrix project_p(const PolyMatrix& a) {
    PolyMatrix out(a.ring().residue_field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, project_p(a.at(i, j)));
    }
    return out;
}

PolyMatrix lift_digits(const PolyMatrix& a, const RingSpec& target) {
    PolyMatrix out(target, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, lift_digits(a.at(i, j), target));
    }
    return out;
}

Poly determinant(const PolyMatrix& a) {
    if (a.rows() != a.cols()) throw NotSquare("determinant of a non-square matrix");
    int n = a.rows();
    if (n > 8) throw SizeTooLarge("cofactor determinant limited to 8x8");
    // memo[mask] = det of the submatrix formed by rows 0..popcount(mask)-1 and
    // the column set encoded in mask.
    std::vector<std::optional<Poly>> memo(std::size_t(1) << n);
    memo[0] = Poly::constant(a.ring(), 1);
    auto rec = [&](auto&& self, unsigned mask) -> const Poly& {
        auto& slot = memo[mask];
        if (slot) return *slot;
        int m = __builtin_popcount(mask);
        int row = m - 1;
        Poly acc(a.ring());
        int seen = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const Poly& cof = self(self, mask & ~(1u << j));
            Poly term = a.at(row, j) * cof;
            // expansion along the last covered row: sign (-1)^{(m-1)+pos}
            acc = ((row + seen) % 2 == 0) ? acc + term : acc - term;
            ++seen;
        }
        slot = std::move(acc);
        return *slot;
    };
    return rec(rec, (1u << n) - 1);
}

bool is_unimodular(const PolyMatrix& a) {
    if (a.rows() != a.cols()) throw NotSquare("unimodularity of a non-square matrix");
    Poly via_det = project_p(determinant(a));
    Poly via_proj = determinant(project_p(a));
    bool primary = via_det.degree() == 0;
    bool cross = via_proj.degree() == 0;
    if (primary != cross) {
        throw std::logic_error("unimodularity cross-check disagreement");
    }
    return primary;
}

namespace {

std::vector<std::vector<int>> combinations(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int i = m - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

}  // namespace

std::vector<MinorTerm> full_size_minors(const PolyMatrix& a, int m) {
    if (m < 1 || m > std::min(a.rows(), a.cols())) {
        throw SizeTooLarge("minor size out of range");
    }
    if (m > 8) throw SizeTooLarge("minor size limited to 8");
    std::vector<MinorTerm> out;
    for (const auto& rows : combinations(a.rows(), m)) {
        for (const auto& cols : combinations(a.cols(), m)) {
            out.push_back({rows, cols, determinant(a.submatrix(rows, cols))});
        }
    }
    return out;
}

namespace {

// Elementary-operation bookkeeping for the Smith reduction: every operation
// applied to S is mirrored on U or V, and the inverse operation is folded
// into U_inv or V_inv so the inverses never go through generic inversion.
struct SmithWorkspace {
    PolyMatrix S, U, Uinv, V, Vinv;

    explicit SmithWorkspace(const PolyMatrix& a)
        : S(a),
          U(PolyMatrix::identity(a.ring(), a.rows())),
          Uinv(PolyMatrix::identity(a.ring(), a.rows())),
          V(PolyMatrix::identity(a.ring(), a.cols())),
          Vinv(PolyMatrix::identity(a.ring(), a.cols())) {}

    void swap_rows(PolyMatrix& m, int i, int j) {
        for (int c = 0; c < m.cols(); ++c) {
            Poly tmp = m.at(i, c);
            m.set(i, c, m.at(j, c));
            m.set(j, c, tmp);
        }
    }
    void swap_cols(PolyMatrix& m, int i, int j) {
        for (int r = 0; r < m.rows(); ++r) {
            Poly tmp = m.at(r, i);
            m.set(r, i, m.at(r, j));
            m.set(r, j, tmp);
        }
    }

    void srow_swap(int i, int j) {
        if (i == j) return;
        swap_rows(S, i, j);
        swap_rows(U, i, j);
        swap_cols(Uinv, i, j);
    }
    void scol_swap(int i, int j) {
        if (i == j) return;
        swap_cols(S, i, j);
        swap_cols(V, i, j);
        swap_rows(Vinv, i, j);
    }
    // R_i <- R_i - q * R_j
    void srow_addmul(int i, int j, const Poly& q) {
        for (int c = 0; c < S.cols(); ++c) S.set(i, c, S.at(i, c) - q * S.at(j, c));
        for (int c = 0; c < U.cols(); ++c) U.set(i, c, U.at(i, c) - q * U.at(j, c));
        for (int r = 0; r < Uinv.rows(); ++r) Uinv.set(r, j, Uinv.at(r, j) + q * Uinv.at(r, i));
    }
    // C_j <- C_j - q * C_i
    void scol_addmul(int j, int i, const Poly& q) {
        for (int r = 0; r < S.rows(); ++r) S.set(r, j, S.at(r, j) - q * S.at(r, i));
        for (int r = 0; r < V.rows(); ++r) V.set(r, j, V.at(r, j) - q * V.at(r, i));
        for (int c = 0; c < Vinv.cols(); ++c) Vinv.set(i, c, Vinv.at(i, c) + q * Vinv.at(j, c));
    }
    // R_i <- c * R_i with c a unit constant
    void srow_scale(int i, std::int64_t c) {
        Poly cp = Poly::constant(S.ring(), c);
        Poly cinv = Poly::constant(S.ring(), S.ring().inv_unit_value(c));
        for (int col = 0; col < S.cols(); ++col) S.set(i, col, S.at(i, col) * cp);
        for (int col = 0; col < U.cols(); ++col) U.set(i, col, U.at(i, col) * cp);
        for (int r = 0; r < Uinv.rows(); ++r) Uinv.set(r, i, Uinv.at(r, i) * cinv);
    }
};

}  // namespace

SmithDecomposition smith_form(const PolyMatrix& a) {
    if (!a.ring().is_field()) throw FieldRequired("smith_form expects a matrix over Z_p");
    SmithWorkspace w(a);
    int k = a.rows(), n = a.cols();
    int steps = std::min(k, n);
    int rank = 0;
    for (int t = 0; t < steps; ++t) {
        while (true) {
            // lowest-degree nonzero pivot, ties by smallest (row, col)
            int pr = -1, pc = -1, pd = -1;
            for (int i = t; i < k; ++i) {
                for (int j = t; j < n; ++j) {
                    const Poly& e = w.S.at(i, j);
                    if (e.is_zero()) continue;
                    if (pd < 0 || e.degree() < pd) {
                        pd = e.degree();
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pd < 0) break;  // submatrix is zero
            w.srow_swap(t, pr);
            w.scol_swap(t, pc);
            bool dirty = false;
            for (int i = t + 1; i < k; ++i) {
                if (w.S.at(i, t).is_zero()) continue;
                auto [q, rem] = divmod_field(w.S.at(i, t), w.S.at(t, t));
                w.srow_addmul(i, t, q);
                if (!rem.is_zero()) dirty = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (w.S.at(t, j).is_zero()) continue;
                auto [q, rem] = divmod_field(w.S.at(t, j), w.S.at(t, t));
                w.scol_addmul(j, t, q);
                if (!rem.is_zero()) dirty = true;
            }
            if (dirty) continue;
            // pivot row/col are clear; enforce divisibility of the interior
            bool fixed = false;
            for (int i = t + 1; i < k && !fixed; ++i) {
                for (int j = t + 1; j < n && !fixed; ++j) {
                    if (w.S.at(i, j).is_zero()) continue;
                    if (!divmod_field(w.S.at(i, j), w.S.at(t, t)).second.is_zero()) {
                        w.srow_addmul(t, i, -Poly::constant(a.ring(), 1));
                        fixed = true;
                    }
                }
            }
            if (!fixed) break;
        }
        if (w.S.at(t, t).is_zero()) break;
        w.srow_scale(t, a.ring().inv_unit_value(w.S.at(t, t).leading_coeff()));
        ++rank;
    }
    return SmithDecomposition{w.U, w.S, w.V, w.Uinv, w.Vinv, rank};
}

PolyMatrix geometric_inverse(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("geometric inverse of a non-square matrix");
    const RingSpec& ring = m.ring();
    PolyMatrix eye = PolyMatrix::identity(ring, m.rows());
    if (project_p(m) != project_p(eye)) {
        throw Error("geometric inverse requires a matrix congruent to I mod p");
    }
    PolyMatrix defect = eye - m;  // every coefficient divisible by p
    PolyMatrix acc = eye;
    PolyMatrix power = eye;
    for (int i = 1; i < ring.r(); ++i) {
        power = power * defect;
        acc = acc + power;
    }
    if (m * acc != eye) throw std::logic_error("geometric inverse verification failed");
    return acc;
}

namespace {

// Whether the projection reduces to [I 0]: full rank with constant invariant
// factors.
bool projection_left_prime(const SmithDecomposition& sm, int k) {
    if (sm.rank < k) return false;
    for (int i = 0; i < k; ++i) {
        if (sm.S.at(i, i).degree() != 0) return false;
    }
    return true;
}

}  // namespace

std::optional<PolyMatrix> right_inverse(const PolyMatrix& a) {
    if (a.rows() > a.cols()) throw DimensionMismatch("right inverse requires k <= n");
    const RingSpec& ring = a.ring();
    int k = a.rows(), n = a.cols();
    PolyMatrix ap = project_p(a);
    SmithDecomposition sm = smith_form(ap);
    if (!projection_left_prime(sm, k)) return std::nullopt;
    // field-level right inverse: B_p = V * [U; 0]
    PolyMatrix stacked(ap.ring(), n, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) stacked.set(i, j, sm.U.at(i, j));
    }
    PolyMatrix bp = sm.V * stacked;
    PolyMatrix b = lift_digits(bp, ring);
    PolyMatrix eye = PolyMatrix::identity(ring, k);
    PolyMatrix defect = eye - a * b;  // zero mod p
    PolyMatrix series = eye;
    PolyMatrix power = eye;
    for (int i = 1; i < ring.r(); ++i) {
        power = power * defect;
        series = series + power;
    }
    PolyMatrix result = b * series;
    if (a * result != eye) throw std::logic_error("right inverse verification failed");
    return result;
}

IdentityZeroReduction reduce_to_identity_zero(const PolyMatrix& a) {
    if (a.rows() > a.cols()) throw DimensionMismatch("reduction requires k <= n");
    const RingSpec& ring = a.ring();
    int k = a.rows(), n = a.cols();
    PolyMatrix ap = project_p(a);
    SmithDecomposition sm = smith_form(ap);
    if (!projection_left_prime(sm, k)) {
        throw NotLeftZeroPrime("matrix is not left zero-prime");
    }
    PolyMatrix u = lift_digits(sm.U, ring);
    PolyMatrix v = lift_digits(sm.V, ring);
    PolyMatrix m = u * a * v;  // [X1 X2] with X1 = I mod p
    std::vector<int> all_rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) all_rows[static_cast<std::size_t>(i)] = i;
    std::vector<int> left_ids, right_ids;
    for (int j = 0; j < k; ++j) left_ids.push_back(j);
    for (int j = k; j < n; ++j) right_ids.push_back(j);
    PolyMatrix x1 = m.submatrix(all_rows, left_ids);
    PolyMatrix x1_inv = geometric_inverse(x1);
    PolyMatrix row_transform = x1_inv * u;

    PolyMatrix col_transform = v;
    PolyMatrix corr = PolyMatrix::identity(ring, n);
    PolyMatrix corr_inv = PolyMatrix::identity(ring, n);
    if (n > k) {
        PolyMatrix x2 = m.submatrix(all_rows, right_ids);
        PolyMatrix z = x1_inv * x2;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < n - k; ++j) {
                corr.set(i, k + j, -z.at(i, j));
                corr_inv.set(i, k + j, z.at(i, j));
            }
        }
        col_transform = v * corr;
    }

    // V^{-1} through the recorded field inverse and a geometric correction.
    PolyMatrix v_inv_field = lift_digits(sm.V_inv, ring);
    PolyMatrix v_inv = v_inv_field * geometric_inverse(v * v_inv_field);
    PolyMatrix col_transform_inv = corr_inv * v_inv;

    // verify everything before returning
    PolyMatrix target(ring, k, n);
    for (int i = 0; i < k; ++i) target.set(i, i, Poly::constant(ring, 1));
    if (row_transform * a * col_transform != target) {
        throw std::logic_error("identity-zero reduction verification failed");
    }
    if (col_transform * col_transform_inv != PolyMatrix::identity(ring, n)) {
        throw std::logic_error("column transform inverse verification failed");
    }
    if (!is_unimodular(row_transform) || !is_unimodular(col_transform)) {
        throw std::logic_error("identity-zero transforms are not unimodular");
    }
    return IdentityZeroReduction{row_transform, col_transform, col_transform_inv};
}

PolyMatrix unimodular_completion(const PolyMatrix& a) {
    int k = a.rows(), n = a.cols();
    if (k >= n) throw DimensionMismatch("completion requires k < n");
    IdentityZeroReduction red = reduce_to_identity_zero(a);
    PolyMatrix b(a.ring(), n - k, n);
    for (int i = 0; i < n - k; ++i) {
        for (int j = 0; j < n; ++j) b.set(i, j, red.col_transform_inv.at(k + i, j));
    }
    if (!is_unimodular(PolyMatrix::stack_vertical(a, b))) {
        throw std::logic_error("unimodular completion verification failed");
    }
    return b;
}

}  // namespace zpr
