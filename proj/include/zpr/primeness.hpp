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

#include "polymat.hpp"

namespace zpr {

enum class LfpOutcome {
    implied_by_lzp,
    factor_found,
    no_factor_up_to_bound,
};

/// Result of the bounded left-factor search. factor_found carries the
/// certificate pair (factor, cofactor) with factor * cofactor equal to the
/// analyzed matrix; no_factor_up_to_bound is explicitly inconclusive.
struct LfpVerdict {
    LfpOutcome outcome;
    int degree_bound = 0;
    std::optional<PolyMatrix> factor;
    std::optional<PolyMatrix> cofactor;
};

/// Aggregated primeness facts with machine-checkable certificates. When
/// is_lzp holds, the certificate is a verified polynomial right inverse and
/// factor-primeness follows; otherwise the left-factor search verdict is
/// attached. field_gcd is the monic gcd of the full-size minors of the
/// projection (the zero polynomial when the projection loses full row rank).
struct PrimenessReport {
    bool is_lzp;
    std::optional<PolyMatrix> lzp_certificate;
    Poly field_gcd;
    LfpVerdict lfp;
};

/// Left primeness over the field Z_p: the gcd of all full-size minors is a
/// nonzero constant. Requires full row rank (RankDeficient otherwise).
bool is_left_prime_field(const PolyMatrix& a);

/// Left zero-primeness over Z_{p^r}: decided on the projection; on success a
/// right-inverse certificate is computed and verified.
bool is_lzp(const PolyMatrix& a);

/// Exhaustive search for a non-unimodular square left factor with entry
/// degrees up to degree_bound, in lexicographic order over coefficient
/// tuples. Short-circuits to implied_by_lzp for left zero-prime inputs.
/// Guard: (p^r)^(k^2 (bound+1)) <= 10^7, SearchTooLarge otherwise.
LfpVerdict lfp_search(const PolyMatrix& a, int degree_bound);
LfpVerdict lfp_search_serial(const PolyMatrix& a, int degree_bound);

/// The enumeration core without the zero-prime short-circuit; exposed so the
/// search can be exercised on matrices already known to be prime.
LfpVerdict lfp_enumerate(const PolyMatrix& a, int degree_bound, bool parallel);

/// Full report: zero-primeness with certificate, projection gcd, and the
/// factor-search verdict. Unlike is_lzp this also accepts matrices whose
/// projection loses rank (they are simply not zero-prime).
PrimenessReport analyze(const PolyMatrix& a, int degree_bound = 2);

}  // namespace zpr
