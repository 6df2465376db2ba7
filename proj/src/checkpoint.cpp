#include <cuboidforge/checkpoint.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cuboidforge {

namespace {

std::string fnv1a_hex(const std::string& data) {
    u64 h = 1469598103934665603ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
    return os.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << data;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void append_file(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot append to " + path.string());
    out << data;
    if (!out) throw std::runtime_error("append failed for " + path.string());
}

} // namespace

std::string task_hash(const SearchTask& task) { return fnv1a_hex(task_descriptor(task)); }

std::string write_checkpoint(const Checkpoint& cp) {
    nlohmann::json j;
    j["task_hash"] = cp.task_hash;
    j["watermark"] = cp.watermark;
    j["counts"] = nlohmann::json::object();
    for (const auto& [label, count] : cp.counts) j["counts"][label] = count;
    return j.dump() + "\n";
}

Checkpoint parse_checkpoint(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Checkpoint cp;
    cp.task_hash = j.at("task_hash").get<std::string>();
    cp.watermark = j.at("watermark").get<u64>();
    for (const auto& [label, count] : j.at("counts").items())
        cp.counts[label] = count.get<u64>();
    return cp;
}

std::map<std::string, u64> count_labels(const SearchReport& report) {
    std::map<std::string, u64> labels;
    for (const auto& [cls, count] : report.counts) labels[to_string(cls)] = count;
    return labels;
}

SearchReport resume_search(const SearchTask& task, const Checkpoint& cp,
                           std::vector<Finding> partial, unsigned threads) {
    if (cp.task_hash != task_hash(task))
        throw std::invalid_argument("checkpoint task hash " + cp.task_hash +
                                    " does not match task " + task_hash(task) +
                                    "; refusing to resume");
    SearchReport at_mark = finalize_report(task, partial, cp.watermark);
    if (count_labels(at_mark) != cp.counts)
        throw std::runtime_error("checkpoint counts do not match the partial results; "
                                 "refusing to resume");
    auto [first, last] = outer_range(task);
    if (cp.watermark >= last) return at_mark; // nothing left to do
    std::vector<Finding> rest = collect_findings(task, cp.watermark + 1, last, threads);
    partial = std::move(at_mark.found);
    partial.insert(partial.end(), std::make_move_iterator(rest.begin()),
                   std::make_move_iterator(rest.end()));
    return finalize_report(task, std::move(partial), last);
}

std::optional<SearchReport> run_search_checkpointed(const CheckpointedRun& run) {
    auto [first, last] = outer_range(run.task);
    std::string hash = task_hash(run.task);
    u64 block = run.block_size ? run.block_size : 1;

    std::vector<Finding> findings;
    u64 next = first;
    if (std::filesystem::exists(run.checkpoint_path)) {
        Checkpoint cp = parse_checkpoint(read_file(run.checkpoint_path));
        if (cp.task_hash != hash)
            throw std::invalid_argument("checkpoint task hash " + cp.task_hash +
                                        " does not match task " + hash +
                                        "; refusing to resume");
        if (std::filesystem::exists(run.partial_path))
            for (const ResultRecord& rec :
                 parse_records(read_file(run.partial_path), RecordFormat::Jsonl))
                findings.push_back(finding_from_record(rec));
        SearchReport at_mark = finalize_report(run.task, findings, cp.watermark);
        if (count_labels(at_mark) != cp.counts)
            throw std::runtime_error("checkpoint counts do not match the partial "
                                     "results; refusing to resume");
        next = cp.watermark + 1;
        if (cp.watermark >= last) return at_mark;
    } else {
        write_file(run.partial_path, "");
    }

    while (next <= last) {
        u64 hi = std::min(last, next + block - 1);
        std::vector<Finding> chunk = collect_findings(run.task, next, hi, run.threads);
        std::vector<ResultRecord> records;
        records.reserve(chunk.size());
        for (const Finding& fnd : chunk) records.push_back(record_from_finding(fnd));
        append_file(run.partial_path, write_records(records, RecordFormat::Jsonl));
        findings.insert(findings.end(), std::make_move_iterator(chunk.begin()),
                        std::make_move_iterator(chunk.end()));

        SearchReport so_far = finalize_report(run.task, findings, hi);
        write_file(run.checkpoint_path,
                   write_checkpoint({hash, hi, count_labels(so_far)}));
        next = hi + 1;
        if (run.stop_after && run.stop_after(hi) && next <= last) return std::nullopt;
    }
    return finalize_report(run.task, std::move(findings), last);
}

} // namespace cuboidforge
