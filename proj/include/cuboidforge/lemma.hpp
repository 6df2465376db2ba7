// Mechanical audit of the case analysis behind the no-perfect-cuboid
// lemmas: classify parameter quadruples into the cases the argument
// enumerates, scan for quadruples the cases do not reach, and check the
// degenerate substitution families.
#pragma once

#include <cuboidforge/params.hpp>

#include <map>
#include <vector>

namespace cuboidforge {

// Outcomes for a quadruple (m, n, p, q) with m^2+n^2 = k1^2 r1 and
// p^2+q^2 = k2^2 r2 (square-free r1, r2):
//   NotApplicable  r1 != r2, the hypotheses are unmet.
//   CaseI          mp+nq == r k1 k2 (equivalently mq-np == 0).
//   CaseII         |mq-np| == r k1 k2; forces mp+nq == 0, impossible for
//                  positive naturals, so this case is vacuous.
//   CaseIIIDegenerate  m^2+n^2 == p^2+q^2 without CaseI: the generated
//                  quadruple has a zero first component, the degenerate
//                  route the c = 0 substitution and the equal-sums argument
//                  dispose of.
//   NotCovered     hypotheses met, the product condition holds, yet none of
//                  the cases apply. A first-class outcome: it measures the
//                  exhaustiveness of the case analysis.
enum class LemmaCase { CaseI, CaseII, CaseIIIDegenerate, NotCovered, NotApplicable };

std::string to_string(LemmaCase lemma_case);

struct LemmaCaseRecord {
    QuadrupleParams params;
    SquareDecomposition decomp_mn; // m^2+n^2 = k^2 r
    SquareDecomposition decomp_pq; // p^2+q^2 = k^2 r
    bool shared_r;
    bool a_integral;               // 4(m^2+n^2)(p^2+q^2) is a perfect square
    std::optional<u64> a_root;
    LemmaCase lemma_case;
    bool case_i_consequent_held;   // mq-np == 0; meaningful when CaseI
};

// The specializations r = 1, k1 = 1, k2 = 1 are all instances of the same
// analysis, so one classifier covers every lemma.
LemmaCaseRecord classify_lemma_case(const QuadrupleParams& params);

struct CoverageReport {
    u64 bound;
    std::map<LemmaCase, u64> counts;
    std::vector<QuadrupleParams> not_covered; // lexicographic order
};

// Enumerates all quadruples in [1, bound]^4 in lexicographic order.
CoverageReport scan_case_coverage(u64 bound);

// Degeneracy report for a shared-leg substitution: which of a^2, b, c, d, e
// vanish. a^2 = 0 never reaches here (shared_leg_forward rejects it).
struct SubstitutionReport {
    SharedLegParams params;
    SharedLegTriplePair result;
    std::vector<std::string> zero_components; // subset of {"c", "e"}
};

SubstitutionReport audit_substitution(const SharedLegParams& params);

// The two substitution families that make c vanish identically:
// (k1, k2, 2rk2, 2rk1) and (rk1, rk2, 2k2, 2k1). Both give
// a^2 = r^2 (k2^2 - k1^2)^2 and b = 2 r k1 k2.
SharedLegParams case_iii_family(u64 k1, u64 k2, u64 r);
SharedLegParams remark_family(u64 k1, u64 k2, u64 r);

// Audit of the equal-sums degeneracy: when m^2+n^2 = p^2+q^2 the generated
// quadruple's first component vanishes, and (m^2+n^2-p^2-q^2)^2 + 4(mp+nq)^2
// is automatically the perfect square (2(mp+nq))^2.
struct EqualSumsReport {
    QuadrupleParams params;
    PythagoreanQuadruple quadruple;   // degenerate by construction
    bool mq_np_negative;
    u64 mq_np_magnitude;              // |mq - np|
    u128 auto_square_value;           // 4(mp+nq)^2
    u64 auto_square_root;             // 2(mp+nq)
};

// Rejects inputs with m^2+n^2 != p^2+q^2.
EqualSumsReport audit_equal_sums(u64 m, u64 n, u64 p, u64 q);

} // namespace cuboidforge
