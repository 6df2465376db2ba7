#include <cuboidforge/cli.hpp>

#include <cuboidforge/checkpoint.hpp>
#include <cuboidforge/lemma.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cuboidforge {

namespace {

unsigned default_threads() {
    const char* env = std::getenv("CUBOID_FORGE_THREADS");
    if (!env || !*env) return 1;
    std::string value(env);
    if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 9)
        throw std::invalid_argument("CUBOID_FORGE_THREADS is not a number: '" + value + "'");
    unsigned long parsed = std::stoul(value);
    return parsed == 0 ? 1 : static_cast<unsigned>(parsed);
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file " + out_path);
    file << text;
    if (!file) throw std::runtime_error("write failed for " + out_path);
}

std::string opt_text(const std::optional<u64>& v, u128 square) {
    if (v) return std::to_string(*v);
    return "non-integer (" + to_string(square) + " is not a perfect square)";
}

void print_verify(std::ostream& os, const Cuboid& k, const DiagonalReport& rep,
                  CuboidClass cls) {
    os << "cuboid " << k.a << " " << k.b << " " << k.c << " (canonical"
       << (is_primitive(k) ? ", primitive" : ", not primitive") << ")\n";
    os << "  d_ab = " << opt_text(rep.d_ab, rep.sq_ab) << "\n";
    os << "  d_ac = " << opt_text(rep.d_ac, rep.sq_ac) << "\n";
    os << "  d_bc = " << opt_text(rep.d_bc, rep.sq_bc) << "\n";
    os << "  g    = " << opt_text(rep.g, rep.sq_g) << "\n";
    os << "  class: " << to_string(cls) << "\n";
}

std::string edge_set(unsigned mask) {
    std::string s;
    const char* names[3] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i)
        if (mask & (1u << i)) {
            if (!s.empty()) s += ';';
            s += names[i];
        }
    return s;
}

std::string divisibility_csv(const DivisibilityProfile& profile) {
    std::ostringstream os;
    os << "a,b,c,by4,by16,by3,by9,by5,by11,has16,has4_distinct,has9,has3_distinct,"
          "has5,has11,satisfies_all\n";
    for (const auto& row : profile.rows) {
        os << row.cuboid.a << ',' << row.cuboid.b << ',' << row.cuboid.c;
        for (u64 mod : {u64(4), u64(16), u64(3), u64(9), u64(5), u64(11)})
            os << ',' << edge_set(row.edge_masks.at(mod));
        for (bool flag : {row.has16, row.has4_distinct, row.has9, row.has3_distinct,
                          row.has5, row.has11, row.satisfies_all})
            os << ',' << (flag ? "true" : "false");
        os << "\n";
    }
    return os.str();
}

std::string divisibility_jsonl(const DivisibilityProfile& profile) {
    std::ostringstream os;
    for (const auto& row : profile.rows) {
        nlohmann::ordered_json j;
        j["a"] = row.cuboid.a;
        j["b"] = row.cuboid.b;
        j["c"] = row.cuboid.c;
        for (u64 mod : {u64(4), u64(16), u64(3), u64(9), u64(5), u64(11)})
            j["by" + std::to_string(mod)] = edge_set(row.edge_masks.at(mod));
        j["has16"] = row.has16;
        j["has4_distinct"] = row.has4_distinct;
        j["has9"] = row.has9;
        j["has3_distinct"] = row.has3_distinct;
        j["has5"] = row.has5;
        j["has11"] = row.has11;
        j["satisfies_all"] = row.satisfies_all;
        os << j.dump() << "\n";
    }
    return os.str();
}

std::string divisibility_human(const DivisibilityProfile& profile) {
    std::ostringstream os;
    for (const auto& row : profile.rows) {
        os << row.cuboid.a << " " << row.cuboid.b << " " << row.cuboid.c << ":";
        for (u64 mod : {u64(16), u64(4), u64(9), u64(3), u64(5), u64(11)})
            os << " " << mod << "|{" << edge_set(row.edge_masks.at(mod)) << "}";
        os << (row.satisfies_all ? " -> all constraints present"
                                 : " -> DISCREPANCY, see flags");
        os << "\n";
    }
    if (profile.rows.empty())
        os << "no primitive body cuboids in input; empty profile\n";
    else if (profile.all_satisfy)
        os << "aggregate: every primitive body cuboid satisfies the divisibility "
              "profile ("
           << profile.rows.size() << " rows)\n";
    else {
        os << "aggregate: " << profile.discrepancies.size()
           << " cuboid(s) violate the divisibility profile:\n";
        for (const auto& k : profile.discrepancies)
            os << "  " << k.a << " " << k.b << " " << k.c << "\n";
    }
    return os.str();
}

std::string coverage_csv(const CoverageReport& report, bool all) {
    std::ostringstream os;
    os << "m,n,p,q,k1,r1,k2,r2,a_root,case\n";
    auto row = [&](const LemmaCaseRecord& rec) {
        os << rec.params.m << ',' << rec.params.n << ',' << rec.params.p << ','
           << rec.params.q << ',' << rec.decomp_mn.k << ',' << rec.decomp_mn.r << ','
           << rec.decomp_pq.k << ',' << rec.decomp_pq.r << ','
           << (rec.a_root ? std::to_string(*rec.a_root) : std::string{}) << ','
           << to_string(rec.lemma_case) << "\n";
    };
    if (all) {
        for (u64 m = 1; m <= report.bound; ++m)
            for (u64 n = 1; n <= report.bound; ++n)
                for (u64 p = 1; p <= report.bound; ++p)
                    for (u64 q = 1; q <= report.bound; ++q)
                        row(classify_lemma_case({m, n, p, q}));
    } else {
        for (const auto& params : report.not_covered) row(classify_lemma_case(params));
    }
    return os.str();
}

std::string coverage_jsonl(const CoverageReport& report, bool all) {
    std::ostringstream os;
    auto row = [&](const LemmaCaseRecord& rec) {
        nlohmann::ordered_json j;
        j["m"] = rec.params.m;
        j["n"] = rec.params.n;
        j["p"] = rec.params.p;
        j["q"] = rec.params.q;
        j["k1"] = rec.decomp_mn.k;
        j["r1"] = rec.decomp_mn.r;
        j["k2"] = rec.decomp_pq.k;
        j["r2"] = rec.decomp_pq.r;
        if (rec.a_root)
            j["a_root"] = *rec.a_root;
        else
            j["a_root"] = nullptr;
        j["case"] = to_string(rec.lemma_case);
        os << j.dump() << "\n";
    };
    if (all) {
        for (u64 m = 1; m <= report.bound; ++m)
            for (u64 n = 1; n <= report.bound; ++n)
                for (u64 p = 1; p <= report.bound; ++p)
                    for (u64 q = 1; q <= report.bound; ++q)
                        row(classify_lemma_case({m, n, p, q}));
    } else {
        for (const auto& params : report.not_covered) row(classify_lemma_case(params));
    }
    return os.str();
}

std::string coverage_human(const CoverageReport& report) {
    std::ostringstream os;
    u64 total = 0;
    for (const auto& [lemma_case, count] : report.counts) total += count;
    os << "bound " << report.bound << ": " << total << " quadruples\n";
    for (const auto& [lemma_case, count] : report.counts)
        os << "  " << to_string(lemma_case) << ": " << count << "\n";
    if (report.not_covered.empty()) {
        os << "every quadruple satisfying the hypotheses falls into a case\n";
    } else {
        os << report.not_covered.size()
           << " quadruple(s) meet the hypotheses but match no case:\n";
        for (const auto& pr : report.not_covered)
            os << "  " << pr.m << "," << pr.n << "," << pr.p << "," << pr.q << "\n";
    }
    return os.str();
}

void print_lemma_record(std::ostream& os, const LemmaCaseRecord& rec) {
    os << "params (m, n, p, q) = (" << rec.params.m << ", " << rec.params.n << ", "
       << rec.params.p << ", " << rec.params.q << ")\n";
    os << "m^2+n^2 = " << to_string(checked_mul(sq(rec.decomp_mn.k), rec.decomp_mn.r))
       << " = " << rec.decomp_mn.k << "^2 * " << rec.decomp_mn.r << "\n";
    os << "p^2+q^2 = " << to_string(checked_mul(sq(rec.decomp_pq.k), rec.decomp_pq.r))
       << " = " << rec.decomp_pq.k << "^2 * " << rec.decomp_pq.r << "\n";
    os << "shared square-free part: " << (rec.shared_r ? "yes" : "no") << "\n";
    os << "A-condition 4(m^2+n^2)(p^2+q^2) square: ";
    if (rec.a_integral)
        os << "holds, A = " << *rec.a_root << "\n";
    else
        os << "fails\n";
    os << "case: " << to_string(rec.lemma_case);
    if (rec.lemma_case == LemmaCase::CaseI)
        os << " (consequent mq - np = 0 "
           << (rec.case_i_consequent_held ? "confirmed" : "VIOLATED") << ")";
    os << "\n";
}

void print_shared_leg(std::ostream& os, const SharedLegTriplePair& t) {
    os << "a^2 = " << to_string(t.a_squared);
    if (t.a_is_square)
        os << " (= " << *t.a << "^2)";
    else
        os << " (not a perfect square; shared leg is irrational)";
    os << "\n";
    os << "b = " << t.b << "  c = " << t.c << "  d = " << t.d << "  e = " << t.e << "\n";
    os << "identities: a^2 + b^2 = d^2 and a^2 + c^2 = e^2\n";
    if (t.c_zero || t.e_zero) {
        os << "degenerate components:";
        if (t.c_zero) os << " c=0";
        if (t.e_zero) os << " e=0";
        os << "\n";
    }
}

std::string search_summary(const SearchReport& report) {
    std::ostringstream os;
    os << "task: " << task_descriptor(report.task) << "\n";
    os << "outer range covered through " << report.watermark << "\n";
    u64 total = report.found.size();
    os << "found " << total << " primitive cuboid(s)";
    if (total) {
        os << ":";
        for (const auto& [cls, count] : report.counts)
            os << " " << to_string(cls) << "=" << count;
    }
    os << "\n";
    return os.str();
}

int finish_search(const SearchReport& report, RecordFormat format,
                  const std::string& out_path, std::ostream& out, std::ostream& err) {
    std::string payload = write_records(records_from_report(report), format);
    write_output(payload, out_path, out);
    if (!out_path.empty()) out << search_summary(report);
    else err << search_summary(report);
    if (has_perfect(report)) {
        for (const auto& fnd : report.found)
            if (fnd.cls == CuboidClass::Perfect)
                err << "!!! PERFECT CUBOID FOUND: " << fnd.cuboid.a << " "
                    << fnd.cuboid.b << " " << fnd.cuboid.c << " (" << fnd.params
                    << ")\n";
        return 3;
    }
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-integer Euler brick and perfect cuboid toolkit"};
    app.name("cuboid-forge");
    app.require_subcommand(1);

    // verify / classify
    u64 va = 0, vb = 0, vc = 0;
    std::string v_format = "human", v_out;
    CLI::App* verify = app.add_subcommand("verify", "check the diagonals of a cuboid");
    verify->add_option("a", va, "first edge")->required();
    verify->add_option("b", vb, "second edge")->required();
    verify->add_option("c", vc, "third edge")->required();
    verify->add_option("--format", v_format, "human, csv or jsonl")
        ->check(CLI::IsMember({"human", "csv", "jsonl"}));
    verify->add_option("--out", v_out, "write output to a file");

    u64 ca = 0, cb = 0, cc = 0;
    CLI::App* classify_cmd = app.add_subcommand("classify", "print the class label only");
    classify_cmd->add_option("a", ca, "first edge")->required();
    classify_cmd->add_option("b", cb, "second edge")->required();
    classify_cmd->add_option("c", cc, "third edge")->required();

    // search
    std::string s_strategy, s_format = "jsonl", s_out, s_checkpoint;
    u64 s_max_edge = 0, s_x = 0, s_max_param = 0, s_max_hyp = 0, s_max_z = 0;
    u64 s_shard_index = 0, s_shard_count = 0;
    unsigned s_threads = 0;
    bool s_perfect_only = false, s_kraitchik = false;
    CLI::App* search = app.add_subcommand("search", "run a search strategy");
    search->add_option("--strategy", s_strategy,
                       "triple-join, korec, lal-blundon, saunderson or quadruple-gen")
        ->required()
        ->check(CLI::IsMember(
            {"triple-join", "korec", "lal-blundon", "saunderson", "quadruple-gen"}));
    search->add_option("--max-edge", s_max_edge, "edge bound (triple-join)");
    search->add_option("--x", s_x, "fixed edge (korec)");
    search->add_option("--max-param", s_max_param,
                       "parameter bound (lal-blundon, quadruple-gen)");
    search->add_option("--max-hypotenuse", s_max_hyp, "triple bound (saunderson)");
    search->add_option("--max-z", s_max_z, "quadruple bound (quadruple-gen)");
    search->add_flag("--perfect-only", s_perfect_only,
                     "report only perfect cuboids (the perfect scan)");
    search->add_flag("--kraitchik-prune", s_kraitchik,
                     "HEURISTIC: prune candidates by the divisibility profile; "
                     "results may be incomplete");
    search->add_option("--threads", s_threads,
                       "worker count (default: CUBOID_FORGE_THREADS or 1)");
    auto* shard_index_opt =
        search->add_option("--shard-index", s_shard_index, "0-based shard index");
    auto* shard_count_opt =
        search->add_option("--shard-count", s_shard_count, "number of shards");
    shard_index_opt->needs(shard_count_opt);
    shard_count_opt->needs(shard_index_opt);
    auto* s_format_opt = search->add_option("--format", s_format, "csv or jsonl")
                             ->check(CLI::IsMember({"csv", "jsonl"}));
    search->add_option("--out", s_out, "write records to a file");
    search->add_option("--checkpoint", s_checkpoint,
                       "checkpoint file for resumable runs (partial results go to "
                       "<checkpoint>.partial.jsonl)");

    // audit-lemma
    std::vector<u64> al_values;
    bool al_substitution = false, al_equal_sums = false;
    std::string al_family;
    u64 al_k1 = 0, al_k2 = 0, al_r = 0;
    CLI::App* audit_lemma =
        app.add_subcommand("audit-lemma", "classify a quadruple into the lemma cases, "
                                          "or audit a degenerate substitution");
    audit_lemma->add_option("values", al_values,
                            "m n p q (or m1 m2 n1 n2 with --substitution)")
        ->expected(0, 4);
    audit_lemma->add_flag("--substitution", al_substitution,
                          "treat the values as shared-leg parameters and report "
                          "vanishing components");
    audit_lemma->add_flag("--equal-sums", al_equal_sums,
                          "audit the equal-sums degeneracy (requires m^2+n^2 = p^2+q^2)");
    audit_lemma->add_option("--family", al_family, "case-iii or remark")
        ->check(CLI::IsMember({"case-iii", "remark"}));
    audit_lemma->add_option("--k1", al_k1, "family parameter k1");
    audit_lemma->add_option("--k2", al_k2, "family parameter k2");
    audit_lemma->add_option("--r", al_r, "family parameter r");

    // audit-coverage
    u64 cov_bound = 0;
    bool cov_all = false;
    std::string cov_format = "human", cov_out;
    CLI::App* audit_coverage = app.add_subcommand(
        "audit-coverage", "enumerate quadruples and tally the lemma cases");
    audit_coverage->add_option("--bound", cov_bound, "enumerate [1, bound]^4")->required();
    audit_coverage->add_flag("--all", cov_all, "emit every quadruple, not just uncovered");
    audit_coverage->add_option("--format", cov_format, "human, csv or jsonl")
        ->check(CLI::IsMember({"human", "csv", "jsonl"}));
    audit_coverage->add_option("--out", cov_out, "write output to a file");

    // param
    CLI::App* param = app.add_subcommand("param", "evaluate a parametrization");
    param->require_subcommand(1);

    u64 pq_m = 0, pq_n = 0, pq_p = 0, pq_q = 0;
    CLI::App* p_quad = param->add_subcommand("quadruple", "quadruple from parameters");
    p_quad->add_option("m", pq_m)->required();
    p_quad->add_option("n", pq_n)->required();
    p_quad->add_option("p", pq_p)->required();
    p_quad->add_option("q", pq_q)->required();

    u64 pc_m = 0, pc_n = 0, pc_p = 0, pc_q = 0;
    CLI::App* p_cond = param->add_subcommand(
        "perfect-conditions", "the three square conditions a perfect cuboid needs");
    p_cond->add_option("m", pc_m)->required();
    p_cond->add_option("n", pc_n)->required();
    p_cond->add_option("p", pc_p)->required();
    p_cond->add_option("q", pc_q)->required();

    u64 sl_m1 = 0, sl_m2 = 0, sl_n1 = 0, sl_n2 = 0;
    CLI::App* p_shared = param->add_subcommand(
        "shared-leg", "two triples with a shared leg from (m1, m2, n1, n2)");
    p_shared->add_option("m1", sl_m1)->required();
    p_shared->add_option("m2", sl_m2)->required();
    p_shared->add_option("n1", sl_n1)->required();
    p_shared->add_option("n2", sl_n2)->required();

    u64 si_b = 0, si_c = 0, si_d = 0, si_e = 0;
    CLI::App* p_inverse = param->add_subcommand(
        "shared-leg-inverse", "recover (m1, m2, n1, n2) from (b, c, d, e)");
    p_inverse->add_option("b", si_b)->required();
    p_inverse->add_option("c", si_c)->required();
    p_inverse->add_option("d", si_d)->required();
    p_inverse->add_option("e", si_e)->required();

    u64 sa_x = 0, sa_y = 0, sa_z = 0;
    std::string sa_variant = "classical";
    bool sa_audit = false;
    CLI::App* p_saunderson =
        param->add_subcommand("saunderson", "cuboid from a Pythagorean triple");
    p_saunderson->add_option("x", sa_x)->required();
    p_saunderson->add_option("y", sa_y)->required();
    p_saunderson->add_option("z", sa_z)->required();
    p_saunderson->add_option("--variant", sa_variant, "classical or as-printed")
        ->check(CLI::IsMember({"classical", "as-printed"}));
    p_saunderson->add_flag("--audit", sa_audit,
                           "run both variants and name non-integer face diagonals");

    u64 lb_m = 0, lb_n = 0, lb_p = 0, lb_q = 0;
    CLI::App* p_lal =
        param->add_subcommand("lal-blundon", "two-diagonal cuboid from (m, n, p, q)");
    p_lal->add_option("m", lb_m)->required();
    p_lal->add_option("n", lb_n)->required();
    p_lal->add_option("p", lb_p)->required();
    p_lal->add_option("q", lb_q)->required();

    // report-divisibility
    std::string rd_in, rd_in_format = "jsonl", rd_format = "human", rd_out;
    CLI::App* report_div = app.add_subcommand(
        "report-divisibility", "divisibility profile of the bricks in a results file");
    report_div->add_option("--in", rd_in, "records file produced by search")->required();
    report_div->add_option("--in-format", rd_in_format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    report_div->add_option("--format", rd_format, "human, csv or jsonl")
        ->check(CLI::IsMember({"human", "csv", "jsonl"}));
    report_div->add_option("--out", rd_out, "write output to a file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*verify || *classify_cmd) {
            bool just_class = bool(*classify_cmd);
            Cuboid k = just_class ? Cuboid(ca, cb, cc) : Cuboid(va, vb, vc);
            DiagonalReport rep = diagonal_report(k);
            CuboidClass cls = classify(rep);
            if (just_class) {
                out << to_string(cls) << "\n";
            } else if (v_format == "human") {
                std::ostringstream os;
                print_verify(os, k, rep, cls);
                write_output(os.str(), v_out, out);
            } else {
                std::ostringstream params;
                params << "input=" << va << "," << vb << "," << vc;
                ResultRecord rec = record_from_cuboid(k, "verify", params.str());
                write_output(write_records({rec}, record_format_from_string(v_format)),
                             v_out, out);
            }
            return cls == CuboidClass::Perfect ? 3 : 0;
        }

        if (*search) {
            unsigned threads = s_threads ? s_threads : default_threads();
            SearchTask task;
            task.strategy = strategy_from_string(s_strategy);
            task.max_edge = s_max_edge;
            task.x = s_x;
            task.max_param = s_max_param;
            task.max_hypotenuse = s_max_hyp;
            task.max_z = s_max_z;
            task.perfect_only = s_perfect_only;
            task.kraitchik_prune = s_kraitchik;
            if (shard_count_opt->count()) task.shard = ShardSpec{s_shard_index, s_shard_count};

            if (task.strategy == SearchStrategy::QuadrupleGen) {
                if (!s_checkpoint.empty())
                    throw std::invalid_argument(
                        "the quadruple-gen audit does not support checkpoints");
                if (task.max_z < 3)
                    throw std::invalid_argument("quadruple-gen requires --max-z >= 3");
                u64 max_param =
                    task.max_param ? task.max_param : static_cast<u64>(isqrt(task.max_z));
                SurjectivityAudit audit = quadruple_surjectivity_audit(task.max_z, max_param);
                std::ostringstream os;
                if (s_format_opt->count() && s_format == "csv") {
                    os << "w,x,y,z\n";
                    for (const auto& quad : audit.unhit)
                        os << quad.w << ',' << quad.x << ',' << quad.y << ',' << quad.z
                           << "\n";
                } else if (s_format_opt->count() && s_format == "jsonl") {
                    nlohmann::ordered_json j;
                    j["max_z"] = audit.max_z;
                    j["max_param"] = audit.max_param;
                    j["primitive_count"] = audit.primitives.size();
                    j["generated_distinct"] = audit.generated_distinct;
                    j["unhit"] = nlohmann::json::array();
                    for (const auto& quad : audit.unhit)
                        j["unhit"].push_back({quad.w, quad.x, quad.y, quad.z});
                    os << j.dump() << "\n";
                } else {
                    os << "primitive quadruples with z <= " << audit.max_z << ": "
                       << audit.primitives.size() << "\n";
                    os << "distinct quadruples generated with parameters <= "
                       << audit.max_param << ": " << audit.generated_distinct << "\n";
                    if (audit.unhit.empty()) {
                        os << "every primitive quadruple is generated\n";
                    } else {
                        os << audit.unhit.size() << " primitive quadruple(s) not hit:\n";
                        for (const auto& quad : audit.unhit)
                            os << "  (" << quad.w << ", " << quad.x << ", " << quad.y
                               << ", " << quad.z << ")\n";
                    }
                }
                write_output(os.str(), s_out, out);
                return 0;
            }

            if (task.kraitchik_prune)
                err << "warning: heuristic Kraitchik pruning enabled, results may be "
                       "incomplete\n";
            RecordFormat format = record_format_from_string(s_format);
            if (!s_checkpoint.empty()) {
                CheckpointedRun cp_run;
                cp_run.task = task;
                cp_run.threads = threads;
                cp_run.checkpoint_path = s_checkpoint;
                cp_run.partial_path = s_checkpoint + ".partial.jsonl";
                auto report = run_search_checkpointed(cp_run);
                // no stop hook installed, so the run always completes
                std::error_code ignored;
                std::filesystem::remove(cp_run.checkpoint_path, ignored);
                std::filesystem::remove(cp_run.partial_path, ignored);
                return finish_search(*report, format, s_out, out, err);
            }
            return finish_search(run_search(task, threads), format, s_out, out, err);
        }

        if (*audit_lemma) {
            if (!al_family.empty()) {
                if (al_k1 == 0 || al_k2 == 0 || al_r == 0)
                    throw std::invalid_argument("--family requires --k1, --k2 and --r");
                SharedLegParams params = al_family == "case-iii"
                                             ? case_iii_family(al_k1, al_k2, al_r)
                                             : remark_family(al_k1, al_k2, al_r);
                out << "family " << al_family << " (k1=" << al_k1 << ", k2=" << al_k2
                    << ", r=" << al_r << ") -> params (" << params.m1 << ", " << params.m2
                    << ", " << params.n1 << ", " << params.n2 << ")\n";
                SubstitutionReport rep = audit_substitution(params);
                print_shared_leg(out, rep.result);
                return 0;
            }
            if (al_values.size() != 4)
                throw std::invalid_argument("audit-lemma expects exactly four values");
            if (al_substitution && al_equal_sums)
                throw std::invalid_argument(
                    "--substitution and --equal-sums are mutually exclusive");
            if (al_substitution) {
                SubstitutionReport rep = audit_substitution(
                    {al_values[0], al_values[1], al_values[2], al_values[3]});
                print_shared_leg(out, rep.result);
                if (rep.zero_components.empty())
                    out << "no zero components\n";
                return 0;
            }
            if (al_equal_sums) {
                EqualSumsReport rep = audit_equal_sums(al_values[0], al_values[1],
                                                       al_values[2], al_values[3]);
                out << "m^2+n^2 - p^2-q^2 = 0: first quadruple component vanishes\n";
                out << "generated quadruple (w, x, y, z) = (" << rep.quadruple.w << ", "
                    << rep.quadruple.x << ", " << rep.quadruple.y << ", "
                    << rep.quadruple.z << ") [degenerate]\n";
                out << "mq - np = " << (rep.mq_np_negative ? "-" : "")
                    << rep.mq_np_magnitude << "\n";
                out << "second condition automatically square: "
                    << to_string(rep.auto_square_value) << " = " << rep.auto_square_root
                    << "^2\n";
                return 0;
            }
            LemmaCaseRecord rec = classify_lemma_case(
                {al_values[0], al_values[1], al_values[2], al_values[3]});
            print_lemma_record(out, rec);
            return 0;
        }

        if (*audit_coverage) {
            CoverageReport report = scan_case_coverage(cov_bound);
            std::string payload;
            if (cov_format == "csv")
                payload = coverage_csv(report, cov_all);
            else if (cov_format == "jsonl")
                payload = coverage_jsonl(report, cov_all);
            else
                payload = coverage_human(report);
            write_output(payload, cov_out, out);
            return 0;
        }

        if (*param) {
            if (*p_quad) {
                PythagoreanQuadruple quad = quadruple_from_params({pq_m, pq_n, pq_p, pq_q});
                out << "quadruple (w, x, y, z) = (" << quad.w << ", " << quad.x << ", "
                    << quad.y << ", " << quad.z << ")\n";
                out << "primitive: " << (quad.primitive ? "true" : "false") << "\n";
                out << "degenerate: " << (quad.degenerate ? "true" : "false") << "\n";
                return 0;
            }
            if (*p_cond) {
                PerfectConditions pc = perfect_conditions({pc_m, pc_n, pc_p, pc_q});
                out << "quadruple (w, x, y, z) = (" << pc.quadruple.w << ", "
                    << pc.quadruple.x << ", " << pc.quadruple.y << ", " << pc.quadruple.z
                    << ")" << (pc.degenerate ? " [degenerate]" : "") << "\n";
                auto line = [&](const char* name, u128 value, bool flag,
                                const std::optional<u64>& root) {
                    out << name << " = " << to_string(value);
                    if (flag)
                        out << " = " << *root << "^2: square\n";
                    else
                        out << ": not a square\n";
                };
                line("x^2+y^2", pc.sum_xy, pc.xy_square, pc.root_xy);
                line("w^2+x^2", pc.sum_wx, pc.wx_square, pc.root_wx);
                line("w^2+y^2", pc.sum_wy, pc.wy_square, pc.root_wy);
                out << "all three hold: "
                    << (pc.xy_square && pc.wx_square && pc.wy_square ? "true" : "false")
                    << "\n";
                return 0;
            }
            if (*p_shared) {
                SharedLegTriplePair t = shared_leg_forward({sl_m1, sl_m2, sl_n1, sl_n2});
                print_shared_leg(out, t);
                return 0;
            }
            if (*p_inverse) {
                SharedLegParams params = shared_leg_inverse(si_b, si_c, si_d, si_e);
                out << "params (m1, m2, n1, n2) = (" << params.m1 << ", " << params.m2
                    << ", " << params.n1 << ", " << params.n2 << ")\n";
                return 0;
            }
            if (*p_saunderson) {
                if (sa_audit) {
                    SaundersonAudit audit = saunderson_audit(sa_x, sa_y, sa_z);
                    out << "classical: cuboid " << audit.classical.cuboid.a << " "
                        << audit.classical.cuboid.b << " " << audit.classical.cuboid.c
                        << ", class " << to_string(audit.classical.cls) << "\n";
                    out << "as-printed: cuboid " << audit.as_printed.cuboid.a << " "
                        << audit.as_printed.cuboid.b << " " << audit.as_printed.cuboid.c
                        << ", class " << to_string(audit.as_printed.cls) << "\n";
                    auto list = [&](const char* name, const std::vector<std::string>& v) {
                        out << name << " non-integer face diagonals:";
                        if (v.empty()) out << " none";
                        for (const auto& d : v) out << " " << d;
                        out << "\n";
                    };
                    list("classical", audit.classical_failing_diagonals);
                    list("as-printed", audit.as_printed_failing_diagonals);
                    return 0;
                }
                SaundersonResult r = saunderson(sa_x, sa_y, sa_z,
                                                sa_variant == "classical"
                                                    ? SaundersonVariant::Classical
                                                    : SaundersonVariant::AsPrinted);
                out << "cuboid " << r.cuboid.a << " " << r.cuboid.b << " " << r.cuboid.c
                    << ", class " << to_string(r.cls) << "\n";
                return r.cls == CuboidClass::Perfect ? 3 : 0;
            }
            if (*p_lal) {
                LalBlundonResult r = lal_blundon(lb_m, lb_n, lb_p, lb_q);
                out << "edges (x, y, z) = (" << r.x << ", " << r.y << ", " << r.z
                    << "); canonical cuboid " << r.cuboid.a << " " << r.cuboid.b << " "
                    << r.cuboid.c << "\n";
                out << "certified diagonals: d(x,y) = " << r.diag_xy
                    << ", d(x,z) = " << r.diag_xz << "\n";
                out << "y^2+z^2 = " << to_string(checked_add(sq(r.y), sq(r.z)));
                if (r.yz_square)
                    out << " = " << *r.diag_yz << "^2: square (Euler brick)\n";
                else
                    out << ": not a perfect square\n";
                out << "class: " << to_string(r.cls) << "\n";
                return r.cls == CuboidClass::Perfect ? 3 : 0;
            }
        }

        if (*report_div) {
            std::ifstream in(rd_in, std::ios::binary);
            if (!in) throw std::runtime_error("cannot read input file " + rd_in);
            std::ostringstream buf;
            buf << in.rdbuf();
            std::vector<Finding> findings;
            for (const ResultRecord& rec :
                 parse_records(buf.str(), record_format_from_string(rd_in_format)))
                findings.push_back(finding_from_record(rec)); // re-verifies each record
            SearchTask task; // container task; counts/dedup only
            task.strategy = SearchStrategy::TripleJoin;
            task.max_edge = 3;
            DivisibilityProfile profile =
                divisibility_report(finalize_report(task, std::move(findings), 0));
            std::string payload;
            if (rd_format == "csv")
                payload = divisibility_csv(profile);
            else if (rd_format == "jsonl")
                payload = divisibility_jsonl(profile);
            else
                payload = divisibility_human(profile);
            write_output(payload, rd_out, out);
            return 0;
        }
    } catch (const std::overflow_error& e) {
        err << "overflow: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace cuboidforge
