// Result persistence. Two formats with identical field names:
//   CSV   columns a,b,c,class,d_ab,d_ac,d_bc,g,strategy,params,primitive
//         (empty string for a non-integer diagonal)
//   JSONL one object per line, null for a non-integer diagonal
// Integers are plain decimal, newlines are LF, records round-trip losslessly
// and are self-verifying: the stored class must reproduce from the edges.
#pragma once

#include <cuboidforge/search.hpp>

namespace cuboidforge {

enum class RecordFormat { Csv, Jsonl };

RecordFormat record_format_from_string(const std::string& label);

struct ResultRecord {
    u64 a, b, c;
    CuboidClass cls;
    std::optional<u64> d_ab, d_ac, d_bc, g;
    std::string strategy;
    std::string params;
    bool primitive;

    bool operator==(const ResultRecord&) const = default;
};

// Recomputes the diagonal report (so every written record re-verifies).
ResultRecord record_from_finding(const Finding& finding);
std::vector<ResultRecord> records_from_report(const SearchReport& report);
ResultRecord record_from_cuboid(const Cuboid& cuboid, const std::string& strategy,
                                const std::string& params);

Finding finding_from_record(const ResultRecord& record);

std::string write_records(const std::vector<ResultRecord>& records, RecordFormat format);
std::vector<ResultRecord> parse_records(const std::string& text, RecordFormat format);

// Recomputes diagonals, class and the primitive flag from the edges and
// throws std::runtime_error if the stored values disagree.
void verify_record(const ResultRecord& record);

} // namespace cuboidforge
