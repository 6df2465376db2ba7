// Desk-scale searches: triple-join Euler brick search, Korec divisor search,
// Lal-Blundon and Saunderson scans, the quadruple-generator surjectivity
// audit, the perfect-cuboid scan, and divisibility reporting.
//
// Every search decomposes into an "outer" index range (the unit of sharding,
// checkpointing and parallelism); results from any partition of the range
// merge into the same deterministic report.
#pragma once

#include <cuboidforge/params.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cuboidforge {

enum class SearchStrategy { TripleJoin, Korec, LalBlundon, Saunderson, QuadrupleGen };

std::string to_string(SearchStrategy strategy);
SearchStrategy strategy_from_string(const std::string& label);

struct ShardSpec {
    u64 index = 0;
    u64 count = 1;
};

struct SearchTask {
    SearchStrategy strategy = SearchStrategy::TripleJoin;
    u64 max_edge = 0;       // triple-join / perfect scan
    u64 x = 0;              // korec
    u64 max_param = 0;      // lal-blundon, quadruple-gen
    u64 max_hypotenuse = 0; // saunderson
    u64 max_z = 0;          // quadruple-gen
    bool perfect_only = false;
    bool kraitchik_prune = false; // heuristic pruner; results may be incomplete
    std::optional<ShardSpec> shard;
};

// Canonical descriptor, also the checkpoint hash preimage.
std::string task_descriptor(const SearchTask& task);

struct Finding {
    Cuboid cuboid; // primitive canonical form
    CuboidClass cls;
    std::string strategy;
    std::string params;             // provenance, "key=value;..." with plain integers
    std::vector<u64> provenance_key; // the integers of params, for deterministic dedup

    bool operator==(const Finding& o) const {
        return cuboid == o.cuboid && cls == o.cls && strategy == o.strategy &&
               params == o.params;
    }
};

// Dedup key rule: scanning params left to right for integers reproduces
// provenance_key, so findings can round-trip through serialized records.
std::vector<u64> provenance_key_from_params(const std::string& params);

struct SearchReport {
    SearchTask task;
    std::vector<Finding> found; // sorted by cuboid, no duplicate primitives
    std::map<CuboidClass, u64> counts;
    u64 watermark = 0; // last outer index covered
};

// Outer index range [first, last] for a task (shard filter applied later).
std::pair<u64, u64> outer_range(const SearchTask& task);

// Process outer indices in [from, to] that belong to the task's shard,
// using the given number of workers. Purely additive; no dedup.
std::vector<Finding> collect_findings(const SearchTask& task, u64 from, u64 to,
                                      unsigned threads);

// Dedup to primitive canonical cuboids (smallest provenance key wins),
// sort, tally counts.
SearchReport finalize_report(const SearchTask& task, std::vector<Finding> findings,
                             u64 watermark);

SearchReport run_search(const SearchTask& task, unsigned threads = 1);
SearchReport merge_reports(const std::vector<SearchReport>& parts);

SearchReport triple_join_search(u64 max_edge, unsigned threads = 1);
SearchReport korec_search(u64 x);
SearchReport lal_blundon_scan(u64 max_param, unsigned threads = 1);
SearchReport saunderson_scan(u64 max_hypotenuse, unsigned threads = 1);
SearchReport perfect_scan(u64 max_edge, unsigned threads = 1);

inline bool has_perfect(const SearchReport& report) {
    return report.counts.count(CuboidClass::Perfect) &&
           report.counts.at(CuboidClass::Perfect) > 0;
}

// All x > a with a^2 + x^2 a perfect square and x <= max_partner, found by
// splitting a^2 into divisor pairs (d-x)(d+x); sorted ascending.
std::vector<u64> square_sum_partners(u64 a, u64 max_partner);

// Surjectivity audit of the quadruple generator: brute-force enumeration of
// primitive quadruples with z <= max_z versus everything the parameter
// identity produces with parameters <= max_param. A nonempty unhit list is
// a finding, not an error.
struct SurjectivityAudit {
    u64 max_z = 0, max_param = 0;
    std::vector<PythagoreanQuadruple> primitives; // canonical w <= x <= y, sorted
    std::vector<PythagoreanQuadruple> unhit;
    u64 generated_distinct = 0;
};

SurjectivityAudit quadruple_surjectivity_audit(u64 max_z, u64 max_param);

// Divisibility profile over the primitive Euler bricks of a report: which
// edges the moduli 4, 16, 3, 9, 5, 11 divide, and whether each brick has an
// edge divisible by 16 plus a different one by 4, an edge by 9 plus another
// by 3, and edges by 5 and by 11. Discrepancies are reported, not asserted.
struct DivisibilityRow {
    Cuboid cuboid;
    std::map<u64, unsigned> edge_masks; // modulus -> bit i set iff edge i divisible
    bool has16, has4_distinct, has9, has3_distinct, has5, has11;
    bool satisfies_all;
};

struct DivisibilityProfile {
    std::vector<DivisibilityRow> rows; // primitive Body cuboids only
    bool all_satisfy = true;
    std::vector<Cuboid> discrepancies;
};

DivisibilityProfile divisibility_report(const SearchReport& report);

} // namespace cuboidforge
