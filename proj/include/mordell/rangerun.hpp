#pragma once

#include <string>

#include "mordell/report.hpp"
#include "mordell/thue_types.hpp"

namespace mordell {

// A range run partitions the discriminant magnitudes (0, 108 * max|k|] into
// consecutive windows of `chunk` units. Every k in [k_lo, k_hi] \ {0} has all
// of its classes inside the single window containing 108|k|, so each chunk
// yields the records for one band of |k|; within a chunk records are ordered
// by (|k|, k), making the whole file sorted that way (-m precedes +m).
struct RangeRunConfig {
  Int k_lo;
  Int k_hi;
  long chunk = 1000000;
  int workers = 1;
  // At most this many chunks per invocation (< 0 means no cap); lets a long
  // run be sliced into sessions, each resumed from the manifest.
  long stop_after_chunks = -1;
  OutputFormat format = OutputFormat::json_lines;
  SolverConfig solver;
};

// Hash of every parameter that affects the output bytes. workers and
// stop_after_chunks are deliberately excluded: the sequencer writes chunks
// in order, so the finished file is byte-identical for any worker count and
// any session slicing.
std::string param_hash(const RangeRunConfig& cfg);

// Streams records to out_path, appending chunk by chunk. After each chunk the
// manifest {"param_hash":"..","next_chunk":N,"byte_offset":B} is rewritten
// (via a temp file + rename). The manifest always describes a fully flushed
// prefix, so an interrupted run is resumed by truncating out_path to
// byte_offset and continuing from next_chunk; the finished file is identical
// to an uninterrupted run. A manifest whose param_hash does not match starts
// the run afresh. Returns the number of records written by this invocation.
long run_range(const RangeRunConfig& cfg, const std::string& out_path,
               const std::string& manifest_path);

}  // namespace mordell
