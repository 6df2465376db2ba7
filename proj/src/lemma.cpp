#include <cuboidforge/lemma.hpp>

namespace cuboidforge {

std::string to_string(LemmaCase lemma_case) {
    switch (lemma_case) {
    case LemmaCase::CaseI: return "case-i";
    case LemmaCase::CaseII: return "case-ii";
    case LemmaCase::CaseIIIDegenerate: return "case-iii-degenerate";
    case LemmaCase::NotCovered: return "not-covered";
    case LemmaCase::NotApplicable: return "not-applicable";
    }
    throw std::logic_error("unknown lemma case");
}

LemmaCaseRecord classify_lemma_case(const QuadrupleParams& pr) {
    if (pr.m == 0 || pr.n == 0 || pr.p == 0 || pr.q == 0)
        throw std::invalid_argument("classify_lemma_case: parameters must be positive");
    LemmaCaseRecord rec{};
    rec.params = pr;
    u128 mn = checked_add(sq(pr.m), sq(pr.n));
    u128 pq = checked_add(sq(pr.p), sq(pr.q));
    rec.decomp_mn = square_free_decompose(checked_narrow(mn, "m^2+n^2"));
    rec.decomp_pq = square_free_decompose(checked_narrow(pq, "p^2+q^2"));
    rec.shared_r = rec.decomp_mn.r == rec.decomp_pq.r;

    // Checked directly rather than via the shared-r shortcut.
    u128 product = checked_mul(4, checked_mul(mn, pq));
    u128 root = isqrt(product);
    rec.a_integral = root * root == product;
    if (rec.a_integral) rec.a_root = checked_narrow(root, "A");

    u128 cross1 = checked_add(checked_mul(pr.m, pr.p), checked_mul(pr.n, pr.q)); // mp+nq
    u128 mq = checked_mul(pr.m, pr.q), np = checked_mul(pr.n, pr.p);
    u128 cross2 = mq > np ? mq - np : np - mq; // |mq-np|
    rec.case_i_consequent_held = cross2 == 0;

    if (!rec.shared_r) {
        rec.lemma_case = LemmaCase::NotApplicable;
        return rec;
    }
    u128 rk1k2 =
        checked_mul(rec.decomp_mn.r, checked_mul(rec.decomp_mn.k, rec.decomp_pq.k));
    if (cross1 == rk1k2)
        rec.lemma_case = LemmaCase::CaseI;
    else if (cross2 == rk1k2)
        rec.lemma_case = LemmaCase::CaseII;
    else if (mn == pq)
        rec.lemma_case = LemmaCase::CaseIIIDegenerate;
    else
        rec.lemma_case = LemmaCase::NotCovered;
    return rec;
}

CoverageReport scan_case_coverage(u64 bound) {
    if (bound < 1) throw std::invalid_argument("scan_case_coverage: bound must be >= 1");
    CoverageReport report{bound, {}, {}};
    for (u64 m = 1; m <= bound; ++m)
        for (u64 n = 1; n <= bound; ++n)
            for (u64 p = 1; p <= bound; ++p)
                for (u64 q = 1; q <= bound; ++q) {
                    LemmaCaseRecord rec = classify_lemma_case({m, n, p, q});
                    ++report.counts[rec.lemma_case];
                    if (rec.lemma_case == LemmaCase::NotCovered)
                        report.not_covered.push_back(rec.params);
                }
    return report;
}

SubstitutionReport audit_substitution(const SharedLegParams& params) {
    SubstitutionReport rep{params, shared_leg_forward(params), {}};
    if (rep.result.c_zero) rep.zero_components.push_back("c");
    if (rep.result.e_zero) rep.zero_components.push_back("e");
    return rep;
}

SharedLegParams case_iii_family(u64 k1, u64 k2, u64 r) {
    return {k1, k2, checked_narrow(checked_mul(2, checked_mul(r, k2)), "n1"),
            checked_narrow(checked_mul(2, checked_mul(r, k1)), "n2")};
}

SharedLegParams remark_family(u64 k1, u64 k2, u64 r) {
    return {checked_narrow(checked_mul(r, k1), "m1"),
            checked_narrow(checked_mul(r, k2), "m2"), 2 * k2, 2 * k1};
}

EqualSumsReport audit_equal_sums(u64 m, u64 n, u64 p, u64 q) {
    u128 mn = checked_add(sq(m), sq(n));
    u128 pq = checked_add(sq(p), sq(q));
    if (mn != pq)
        throw std::invalid_argument("audit_equal_sums: m^2+n^2 != p^2+q^2");
    EqualSumsReport rep{};
    rep.params = {m, n, p, q};
    rep.quadruple = quadruple_from_params(rep.params);
    u128 mq = checked_mul(m, q), np = checked_mul(n, p);
    rep.mq_np_negative = mq < np;
    rep.mq_np_magnitude = checked_narrow(mq > np ? mq - np : np - mq, "mq-np");
    u128 cross1 = checked_add(checked_mul(m, p), checked_mul(n, q));
    rep.auto_square_root = checked_narrow(checked_mul(2, cross1), "2(mp+nq)");
    rep.auto_square_value = checked_mul(4, checked_mul(cross1, cross1));
    return rep;
}

} // namespace cuboidforge
