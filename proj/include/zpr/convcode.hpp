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
#include <span>
#include <vector>

#include "polymat.hpp"
#include "primeness.hpp"

namespace zpr {

/// A validated convolutional code encoder over Z_{p^r}. Admission requires
/// the projection of the k x n generator to have full row rank over Z_p(d),
/// which makes the rows a basis of a free rank-k module. Noncatastrophicity,
/// the b-degree, and (when available) the parity check and a right inverse of
/// the generator are computed eagerly; instances are immutable afterwards.
class ConvCode {
   public:
    explicit ConvCode(PolyMatrix generator);

    const PolyMatrix& generator() const noexcept { return g_; }
    const RingSpec& ring() const noexcept { return g_.ring(); }
    int k() const noexcept { return g_.rows(); }
    int n() const noexcept { return g_.cols(); }

    bool noncatastrophic() const noexcept { return noncatastrophic_; }
    int b_degree() const noexcept { return b_degree_; }

    /// Full-column-rank H with w in the code iff w * H = 0. Throws
    /// Catastrophic when no kernel representation exists.
    const PolyMatrix& parity_check() const;

    /// Verified right inverse of the generator; only noncatastrophic codes
    /// have one.
    const PolyMatrix& generator_right_inverse() const;

   private:
    PolyMatrix g_;
    bool noncatastrophic_ = false;
    int b_degree_ = 0;
    std::optional<PolyMatrix> parity_;
    std::optional<PolyMatrix> right_inverse_;
};

struct Codeword {
    std::vector<Poly> word;
    std::optional<std::vector<Poly>> source;
};

/// w = u * G; the order of the codeword always equals the order of the
/// message.
Codeword encode(const ConvCode& code, std::span<const Poly> u);

/// Solves x * G = target for a polynomial row vector x with entry degrees up
/// to max(deg target, 0) + k * max entry degree of G.
std::optional<std::vector<Poly>> row_module_combination(const PolyMatrix& g,
                                                        std::span<const Poly> target);

/// Whether two encoders generate the same code: each row of one lies in the
/// row module of the other. When both inclusions hold the combining matrix is
/// assembled and checked to be unimodular.
bool equivalent(const ConvCode& a, const ConvCode& b);

/// w * H = 0 as a polynomial identity. Requires a parity check.
bool kernel_membership(const ConvCode& code, std::span<const Poly> w);

/// Witness of catastrophic behaviour for a rate-1/n encoder: an input series
/// of unbounded support whose truncated codeword has support confined to the
/// generator degree.
struct CatastrophicDemo {
    Poly projection_gcd;
    TruncatedSeries input;
    std::vector<TruncatedSeries> output;
    int input_weight;
    int output_weight;
    int output_max_degree;
};

CatastrophicDemo catastrophic_demo(const ConvCode& code, int horizon);

}  // namespace zpr
