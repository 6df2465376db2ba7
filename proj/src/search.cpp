#include <cuboidforge/search.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>
#include <thread>

namespace cuboidforge {

std::string to_string(SearchStrategy strategy) {
    switch (strategy) {
    case SearchStrategy::TripleJoin: return "triple-join";
    case SearchStrategy::Korec: return "korec";
    case SearchStrategy::LalBlundon: return "lal-blundon";
    case SearchStrategy::Saunderson: return "saunderson";
    case SearchStrategy::QuadrupleGen: return "quadruple-gen";
    }
    throw std::logic_error("unknown strategy");
}

SearchStrategy strategy_from_string(const std::string& label) {
    for (auto s : {SearchStrategy::TripleJoin, SearchStrategy::Korec,
                   SearchStrategy::LalBlundon, SearchStrategy::Saunderson,
                   SearchStrategy::QuadrupleGen})
        if (to_string(s) == label) return s;
    throw std::invalid_argument("unknown search strategy: " + label);
}

std::string task_descriptor(const SearchTask& task) {
    std::ostringstream os;
    os << "strategy=" << to_string(task.strategy);
    switch (task.strategy) {
    case SearchStrategy::TripleJoin:
        os << ";max-edge=" << task.max_edge << ";perfect-only=" << task.perfect_only
           << ";kraitchik=" << task.kraitchik_prune;
        break;
    case SearchStrategy::Korec: os << ";x=" << task.x; break;
    case SearchStrategy::LalBlundon: os << ";max-param=" << task.max_param; break;
    case SearchStrategy::Saunderson: os << ";max-hypotenuse=" << task.max_hypotenuse; break;
    case SearchStrategy::QuadrupleGen:
        os << ";max-z=" << task.max_z << ";max-param=" << task.max_param;
        break;
    }
    if (task.shard) os << ";shard=" << task.shard->index << "/" << task.shard->count;
    return os.str();
}

std::vector<u64> provenance_key_from_params(const std::string& params) {
    std::vector<u64> key;
    size_t i = 0;
    while (i < params.size()) {
        if (std::isdigit(static_cast<unsigned char>(params[i]))) {
            u64 v = 0;
            while (i < params.size() && std::isdigit(static_cast<unsigned char>(params[i])))
                v = v * 10 + u64(params[i++] - '0');
            key.push_back(v);
        } else {
            ++i;
        }
    }
    return key;
}

namespace {

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// All divisors of a^2, ascending. Requires a^2 to fit in 64 bits.
std::vector<u64> divisors_of_square(u64 a) {
    checked_narrow(sq(a), "a^2");
    std::vector<u64> divs{1};
    for (auto [p, e] : factorize(a)) {
        size_t base = divs.size();
        u64 pk = 1;
        for (int i = 0; i < 2 * e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

struct DivisibilityFlags {
    std::map<u64, unsigned> masks;
    bool has16, has4_distinct, has9, has3_distinct, has5, has11;
    bool all;
};

DivisibilityFlags divisibility_flags(const Cuboid& k) {
    std::array<u64, 3> e{k.a, k.b, k.c};
    DivisibilityFlags f{};
    for (u64 mod : {u64(4), u64(16), u64(3), u64(9), u64(5), u64(11)}) {
        unsigned mask = 0;
        for (int i = 0; i < 3; ++i)
            if (e[i] % mod == 0) mask |= 1u << i;
        f.masks[mod] = mask;
    }
    auto distinct_pair = [&](u64 strong, u64 weak) {
        for (int i = 0; i < 3; ++i)
            if (f.masks[strong] & (1u << i))
                for (int j = 0; j < 3; ++j)
                    if (j != i && (f.masks[weak] & (1u << j))) return true;
        return false;
    };
    f.has16 = f.masks[16] != 0;
    f.has4_distinct = distinct_pair(16, 4);
    f.has9 = f.masks[9] != 0;
    f.has3_distinct = distinct_pair(9, 3);
    f.has5 = f.masks[5] != 0;
    f.has11 = f.masks[11] != 0;
    f.all = f.has16 && f.has4_distinct && f.has9 && f.has3_distinct && f.has5 && f.has11;
    return f;
}

Finding make_finding(const SearchTask& task, const Cuboid& raw, std::string params) {
    Cuboid prim = primitive_reduce(raw);
    Finding fnd{prim, classify(prim), to_string(task.strategy), std::move(params), {}};
    fnd.provenance_key = provenance_key_from_params(fnd.params);
    return fnd;
}

void triple_join_outer(const SearchTask& task, u64 a, std::vector<Finding>& sink) {
    std::vector<u64> partners = square_sum_partners(a, task.max_edge);
    for (size_t i = 0; i < partners.size(); ++i)
        for (size_t j = i + 1; j < partners.size(); ++j) {
            u64 b = partners[i], c = partners[j];
            if (task.kraitchik_prune && !divisibility_flags(Cuboid(a, b, c)).all) continue;
            if (!is_perfect_square(checked_add(sq(b), sq(c)))) continue;
            Finding fnd = make_finding(task, Cuboid(a, b, c), "a=" + std::to_string(a));
            if (task.perfect_only && fnd.cls != CuboidClass::Perfect) continue;
            sink.push_back(std::move(fnd));
        }
}

void korec_outer(const SearchTask& task, u64 x, std::vector<Finding>& sink) {
    u64 x2 = checked_narrow(sq(x), "x^2");
    std::vector<std::pair<u64, u64>> partners; // (y, generating divisor)
    for (u64 u : divisors_of_square(x)) {
        if (u >= x) break;
        u64 v = x2 / u;
        if ((v - u) % 2) continue;
        partners.emplace_back((v - u) / 2, u);
    }
    std::sort(partners.begin(), partners.end());
    for (size_t i = 0; i < partners.size(); ++i)
        for (size_t j = i + 1; j < partners.size(); ++j) {
            auto [y, dy] = partners[i];
            auto [z, dz] = partners[j];
            std::ostringstream ps;
            ps << "x=" << x << ";dy=" << dy << ";dz=" << dz;
            Finding fnd = make_finding(task, Cuboid(x, y, z), ps.str());
            if (task.perfect_only && fnd.cls != CuboidClass::Perfect) continue;
            sink.push_back(std::move(fnd));
        }
}

// TODO: hoist the pair enumeration out of the per-outer call; it is
// rebuilt for every outer index, which starts to matter past max-param ~200.
std::vector<std::pair<u64, u64>> ordered_pairs(u64 max_param) {
    std::vector<std::pair<u64, u64>> pairs;
    for (u64 m = 1; m <= max_param; ++m)
        for (u64 n = m + 1; n <= max_param; ++n) pairs.emplace_back(m, n);
    return pairs;
}

void lal_blundon_outer(const SearchTask& task, u64 outer, std::vector<Finding>& sink) {
    std::vector<std::pair<u64, u64>> pairs = ordered_pairs(task.max_param);
    auto [m, n] = pairs[outer];
    // Unordered pair of pairs: (m,n,p,q) and (p,q,m,n) give the same cuboid.
    for (size_t j = outer; j < pairs.size(); ++j) {
        auto [p, q] = pairs[j];
        LalBlundonResult r = lal_blundon(m, n, p, q);
        std::ostringstream ps;
        ps << "m=" << m << ";n=" << n << ";p=" << p << ";q=" << q;
        Finding fnd = make_finding(task, r.cuboid, ps.str());
        if (task.perfect_only && fnd.cls != CuboidClass::Perfect) continue;
        sink.push_back(std::move(fnd));
    }
}

void saunderson_outer(const SearchTask& task, u64 u, std::vector<Finding>& sink) {
    for (u64 v = 1; v < u; ++v) {
        if ((u + v) % 2 == 0 || std::gcd(u, v) != 1) continue;
        u64 z = u * u + v * v;
        if (z > task.max_hypotenuse) break;
        u64 x = u * u - v * v, y = 2 * u * v;
        SaundersonResult r = saunderson(x, y, z, SaundersonVariant::Classical);
        std::ostringstream ps;
        ps << "x=" << x << ";y=" << y << ";z=" << z;
        Finding fnd = make_finding(task, r.cuboid, ps.str());
        if (task.perfect_only && fnd.cls != CuboidClass::Perfect) continue;
        sink.push_back(std::move(fnd));
    }
}

void process_outer(const SearchTask& task, u64 outer, std::vector<Finding>& sink) {
    switch (task.strategy) {
    case SearchStrategy::TripleJoin: triple_join_outer(task, outer, sink); break;
    case SearchStrategy::Korec: korec_outer(task, outer, sink); break;
    case SearchStrategy::LalBlundon: lal_blundon_outer(task, outer, sink); break;
    case SearchStrategy::Saunderson: saunderson_outer(task, outer, sink); break;
    case SearchStrategy::QuadrupleGen:
        throw std::logic_error("quadruple-gen has no cuboid findings; "
                               "use quadruple_surjectivity_audit");
    }
}

void validate_task(const SearchTask& task) {
    switch (task.strategy) {
    case SearchStrategy::TripleJoin:
        if (task.max_edge < 3)
            throw std::invalid_argument("triple-join search requires max-edge >= 3");
        break;
    case SearchStrategy::Korec:
        if (task.x <= 2) throw std::invalid_argument("korec search requires x >= 3");
        break;
    case SearchStrategy::LalBlundon:
        if (task.max_param < 2)
            throw std::invalid_argument("lal-blundon scan requires max-param >= 2");
        break;
    case SearchStrategy::Saunderson:
        if (task.max_hypotenuse < 5)
            throw std::invalid_argument(
                "saunderson scan requires max-hypotenuse >= 5 (the smallest triple)");
        break;
    case SearchStrategy::QuadrupleGen:
        if (task.max_z < 3)
            throw std::invalid_argument("quadruple-gen audit requires max-z >= 3");
        break;
    }
    if (task.shard && (task.shard->count == 0 || task.shard->index >= task.shard->count))
        throw std::invalid_argument("shard index must be smaller than shard count");
}

} // namespace

std::vector<u64> square_sum_partners(u64 a, u64 max_partner) {
    std::vector<u64> out;
    u64 a2 = checked_narrow(sq(a), "a^2");
    for (u64 u : divisors_of_square(a)) {
        if (u >= a) break;
        u64 v = a2 / u;
        if ((v - u) % 2) continue;
        u64 x = (v - u) / 2;
        if (x > a && x <= max_partner) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<u64, u64> outer_range(const SearchTask& task) {
    validate_task(task);
    switch (task.strategy) {
    case SearchStrategy::TripleJoin: return {1, task.max_edge};
    case SearchStrategy::Korec: return {task.x, task.x};
    case SearchStrategy::LalBlundon: {
        u64 n = task.max_param * (task.max_param - 1) / 2;
        return {0, n - 1};
    }
    case SearchStrategy::Saunderson:
        return {2, static_cast<u64>(isqrt(task.max_hypotenuse - 1))};
    case SearchStrategy::QuadrupleGen: break;
    }
    throw std::invalid_argument("quadruple-gen audit has no search range");
}

std::vector<Finding> collect_findings(const SearchTask& task, u64 from, u64 to,
                                      unsigned threads) {
    if (threads == 0) threads = 1;
    auto [first, last] = outer_range(task);
    from = std::max(from, first);
    to = std::min(to, last);
    if (from > to) return {};

    auto in_shard = [&](u64 outer) {
        return !task.shard || (outer - first) % task.shard->count == task.shard->index;
    };

    std::vector<std::vector<Finding>> buckets(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned w) {
        try {
            for (u64 outer = from + w; outer <= to && outer >= from; outer += threads)
                if (in_shard(outer)) process_outer(task, outer, buckets[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    std::vector<Finding> all;
    for (auto& b : buckets)
        all.insert(all.end(), std::make_move_iterator(b.begin()),
                   std::make_move_iterator(b.end()));
    return all;
}

SearchReport finalize_report(const SearchTask& task, std::vector<Finding> findings,
                             u64 watermark) {
    std::map<Cuboid, Finding> merged;
    for (auto& fnd : findings) {
        auto [it, inserted] = merged.try_emplace(fnd.cuboid, fnd);
        if (!inserted) {
            // Smallest provenance wins, so merge order never matters.
            auto& held = it->second;
            if (std::tie(fnd.provenance_key, fnd.params) <
                std::tie(held.provenance_key, held.params))
                held = fnd;
        }
    }
    SearchReport report{task, {}, {}, watermark};
    report.found.reserve(merged.size());
    for (auto& [key, fnd] : merged) {
        ++report.counts[fnd.cls];
        report.found.push_back(std::move(fnd));
    }
    return report;
}

SearchReport run_search(const SearchTask& task, unsigned threads) {
    auto [first, last] = outer_range(task);
    return finalize_report(task, collect_findings(task, first, last, threads), last);
}

SearchReport merge_reports(const std::vector<SearchReport>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge_reports: nothing to merge");
    SearchTask base = parts.front().task;
    base.shard.reset();
    std::vector<Finding> all;
    u64 watermark = 0;
    for (const auto& part : parts) {
        SearchTask t = part.task;
        t.shard.reset();
        if (task_descriptor(t) != task_descriptor(base))
            throw std::invalid_argument("merge_reports: reports come from different tasks");
        all.insert(all.end(), part.found.begin(), part.found.end());
        watermark = std::max(watermark, part.watermark);
    }
    return finalize_report(base, std::move(all), watermark);
}

SearchReport triple_join_search(u64 max_edge, unsigned threads) {
    SearchTask task;
    task.strategy = SearchStrategy::TripleJoin;
    task.max_edge = max_edge;
    return run_search(task, threads);
}

SearchReport korec_search(u64 x) {
    SearchTask task;
    task.strategy = SearchStrategy::Korec;
    task.x = x;
    return run_search(task, 1);
}

SearchReport lal_blundon_scan(u64 max_param, unsigned threads) {
    SearchTask task;
    task.strategy = SearchStrategy::LalBlundon;
    task.max_param = max_param;
    return run_search(task, threads);
}

SearchReport saunderson_scan(u64 max_hypotenuse, unsigned threads) {
    SearchTask task;
    task.strategy = SearchStrategy::Saunderson;
    task.max_hypotenuse = max_hypotenuse;
    return run_search(task, threads);
}

SearchReport perfect_scan(u64 max_edge, unsigned threads) {
    SearchTask task;
    task.strategy = SearchStrategy::TripleJoin;
    task.max_edge = max_edge;
    task.perfect_only = true;
    return run_search(task, threads);
}

SurjectivityAudit quadruple_surjectivity_audit(u64 max_z, u64 max_param) {
    if (max_z < 3) throw std::invalid_argument("quadruple-gen audit requires max-z >= 3");
    SurjectivityAudit audit{max_z, max_param, {}, {}, 0};

    for (u64 z = 1; z <= max_z; ++z) {
        u128 zz = sq(z);
        for (u64 w = 1; w < z; ++w) {
            u128 ww = sq(w);
            for (u64 x = w; x < z; ++x) {
                u128 s = checked_add(ww, sq(x));
                if (s >= zz) break;
                u128 y2 = zz - s;
                if (y2 < sq(x)) break; // canonical order requires y >= x
                u128 y = isqrt(y2);
                if (y * y != y2) continue;
                u64 yy = static_cast<u64>(y);
                if (std::gcd(std::gcd(w, x), std::gcd(yy, z)) != 1) continue;
                audit.primitives.push_back({w, x, yy, z, true, false});
            }
        }
    }
    std::sort(audit.primitives.begin(), audit.primitives.end(),
              [](const PythagoreanQuadruple& l, const PythagoreanQuadruple& r) {
                  return std::tie(l.z, l.w, l.x, l.y) < std::tie(r.z, r.w, r.x, r.y);
              });

    std::set<std::array<u64, 4>> generated;
    u64 cap = std::min(max_param, static_cast<u64>(isqrt(max_z)));
    for (u64 m = 0; m <= cap; ++m) {
        u64 nm = m * m;
        if (nm > max_z) break;
        for (u64 n = 0; n <= cap && nm + n * n <= max_z; ++n) {
            u64 nn = nm + n * n;
            for (u64 p = 0; p <= cap && nn + p * p <= max_z; ++p) {
                u64 np = nn + p * p;
                for (u64 q = 0; q <= cap && np + q * q <= max_z; ++q) {
                    if (m == 0 && n == 0 && p == 0 && q == 0) continue;
                    PythagoreanQuadruple quad = quadruple_from_params({m, n, p, q});
                    if (quad.degenerate) continue;
                    std::array<u64, 3> comp{quad.w, quad.x, quad.y};
                    std::sort(comp.begin(), comp.end());
                    generated.insert({comp[0], comp[1], comp[2], quad.z});
                }
            }
        }
    }
    audit.generated_distinct = generated.size();
    for (const auto& prim : audit.primitives)
        if (!generated.count({prim.w, prim.x, prim.y, prim.z})) audit.unhit.push_back(prim);
    return audit;
}

DivisibilityProfile divisibility_report(const SearchReport& report) {
    DivisibilityProfile profile;
    for (const Finding& fnd : report.found) {
        if (fnd.cls != CuboidClass::Body || !is_primitive(fnd.cuboid)) continue;
        DivisibilityFlags f = divisibility_flags(fnd.cuboid);
        profile.rows.push_back({fnd.cuboid, f.masks, f.has16, f.has4_distinct, f.has9,
                                f.has3_distinct, f.has5, f.has11, f.all});
        if (!f.all) {
            profile.all_satisfy = false;
            profile.discrepancies.push_back(fnd.cuboid);
        }
    }
    return profile;
}

} // namespace cuboidforge
