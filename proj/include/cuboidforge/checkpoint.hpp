// Checkpointing for resumable scans. A checkpoint is a single JSON object
//   { "task_hash": <hex>, "watermark": <int>, "counts": {<class>: <int>} }
// accompanied by a partial-results JSONL stream. Resuming a matching task
// and running to completion yields a report identical to an uninterrupted
// run; a hash mismatch refuses to resume.
#pragma once

#include <cuboidforge/records.hpp>

#include <filesystem>
#include <functional>

namespace cuboidforge {

struct Checkpoint {
    std::string task_hash;
    u64 watermark = 0;
    std::map<std::string, u64> counts; // class label -> count, over deduped findings

    bool operator==(const Checkpoint&) const = default;
};

// FNV-1a over the canonical task descriptor, as 16 hex digits.
std::string task_hash(const SearchTask& task);

std::string write_checkpoint(const Checkpoint& checkpoint);
Checkpoint parse_checkpoint(const std::string& text);

std::map<std::string, u64> count_labels(const SearchReport& report);

// Continue a checkpointed task: verifies the hash and the partial counts,
// processes outer indices above the watermark, and merges. A watermark at
// the end of the range is a no-op that just finalizes the stored findings.
SearchReport resume_search(const SearchTask& task, const Checkpoint& checkpoint,
                           std::vector<Finding> partial, unsigned threads = 1);

// Block-by-block runner with on-disk state: appends each block's findings
// to partial_path (JSONL) and rewrites checkpoint_path after the block.
// Picks up existing state when the files are present. stop_after, when set,
// is polled between blocks; returning true abandons the run (state stays on
// disk) and the runner returns nullopt.
struct CheckpointedRun {
    SearchTask task;
    unsigned threads = 1;
    std::filesystem::path checkpoint_path;
    std::filesystem::path partial_path;
    u64 block_size = 64;
    std::function<bool(u64 watermark)> stop_after;
};

std::optional<SearchReport> run_search_checkpointed(const CheckpointedRun& run);

} // namespace cuboidforge
