#include "mordell/rangerun.hpp"

#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mordell/pipeline.hpp"

namespace mordell {

namespace {

struct ChunkOutput {
  std::string bytes;
  long records = 0;
};

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string canonical_params(const RangeRunConfig& cfg) {
  std::string policy = cfg.solver.bound_policy == BoundPolicy::explicit_bound
                           ? "explicit:" + to_string(cfg.solver.y_bound)
                           : "hall-derived";
  return "from=" + to_string(cfg.k_lo) + ";to=" + to_string(cfg.k_hi) +
         ";chunk=" + std::to_string(cfg.chunk) + ";format=" +
         (cfg.format == OutputFormat::json_lines ? "json-lines" : "csv") +
         ";bound=" + policy + ";hall=" + std::to_string(cfg.solver.hall_coeff.num) +
         "/" + std::to_string(cfg.solver.hall_coeff.den);
}

struct Manifest {
  std::string hash;
  long next_chunk = 0;
  std::uintmax_t byte_offset = 0;
};

bool read_manifest(const std::string& path, Manifest* m) {
  std::ifstream in(path);
  if (!in) return false;
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  auto grab = [&](const std::string& key) -> std::string {
    auto pos = text.find("\"" + key + "\":");
    if (pos == std::string::npos) return "";
    pos += key.size() + 3;
    if (pos < text.size() && text[pos] == '"') {
      auto end = text.find('"', pos + 1);
      if (end == std::string::npos) return "";
      return text.substr(pos + 1, end - pos - 1);
    }
    auto end = text.find_first_not_of("0123456789", pos);
    return text.substr(pos, end == std::string::npos ? end : end - pos);
  };
  m->hash = grab("param_hash");
  std::string nc = grab("next_chunk");
  std::string bo = grab("byte_offset");
  if (m->hash.empty() || nc.empty() || bo.empty()) return false;
  m->next_chunk = std::stol(nc);
  m->byte_offset = std::stoull(bo);
  return true;
}

void write_manifest(const std::string& path, const Manifest& m) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << "{\"param_hash\":\"" << m.hash << "\",\"next_chunk\":"
        << m.next_chunk << ",\"byte_offset\":" << m.byte_offset << "}\n";
    if (!out) throw std::runtime_error("cannot write manifest " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// Records for the k band whose discriminant magnitude lies in (w0, w1].
ChunkOutput compute_chunk(const RangeRunConfig& cfg, const Int& w0,
                          const Int& w1) {
  ChunkOutput out;
  auto classes = classes_in_window(cfg.k_lo, cfg.k_hi, SearchWindow{w0, w1});
  Int m_lo = w0 / 108 + 1;
  Int m_hi = w1 / 108;
  static const std::vector<FormClass> kNoClasses;
  for (Int m = m_lo; m <= m_hi; ++m) {
    for (int sign : {-1, 1}) {
      Int k = sign * m;
      if (k < cfg.k_lo || k > cfg.k_hi) continue;
      auto it = classes.find(k);
      const auto& cls = it == classes.end() ? kNoClasses : it->second;
      SolutionSet rec = solve_classes(k, cls, cfg.solver);
      if (cfg.format == OutputFormat::json_lines) {
        out.bytes += serialize_record(rec);
        out.bytes += '\n';
      } else {
        for (const auto& p : rec.points) {
          out.bytes += to_string(k) + ',' + to_string(p.X) + ',' +
                       to_string(p.Y) + ',' +
                       (rec.complete_flag ? "true" : "false") + '\n';
        }
      }
      ++out.records;
    }
  }
  return out;
}

}  // namespace

std::string param_hash(const RangeRunConfig& cfg) {
  return fnv1a_hex(canonical_params(cfg));
}

long run_range(const RangeRunConfig& cfg, const std::string& out_path,
               const std::string& manifest_path) {
  if (cfg.k_lo > cfg.k_hi) throw std::invalid_argument("empty range");
  if (cfg.chunk < 108) throw std::invalid_argument("chunk too small");
  Int abs_lo = cfg.k_lo < 0 ? Int(-cfg.k_lo) : cfg.k_lo;
  Int abs_hi = cfg.k_hi < 0 ? Int(-cfg.k_hi) : cfg.k_hi;
  Int k_max = abs_lo > abs_hi ? abs_lo : abs_hi;
  Int d_max = 108 * k_max;
  long n_chunks = to_i64(ceil_div(d_max, Int(cfg.chunk)));
  std::string hash = param_hash(cfg);
  long session_cap = cfg.stop_after_chunks;

  Manifest m;
  long start_chunk = 0;
  bool resumed = false;
  if (read_manifest(manifest_path, &m) && m.hash == hash &&
      std::filesystem::exists(out_path) &&
      std::filesystem::file_size(out_path) >= m.byte_offset) {
    std::filesystem::resize_file(out_path, m.byte_offset);
    start_chunk = m.next_chunk;
    resumed = true;
  }
  if (!resumed) {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    if (cfg.format == OutputFormat::csv) out << "k,X,Y,complete\n";
    out.flush();
    m = Manifest{hash, 0, static_cast<std::uintmax_t>(out.tellp())};
  }

  long end_chunk = n_chunks;
  if (session_cap >= 0 && start_chunk + session_cap < n_chunks) {
    end_chunk = start_chunk + session_cap;
  }

  std::ofstream out(out_path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + out_path);

  long written = 0;
  auto window = [&](long i) {
    Int w0 = Int(cfg.chunk) * i;
    Int w1 = Int(cfg.chunk) * (i + 1);
    if (w1 > d_max) w1 = d_max;
    return std::pair<Int, Int>(w0, w1);
  };
  auto commit = [&](long i, const ChunkOutput& c) {
    out << c.bytes;
    out.flush();
    if (!out) throw std::runtime_error("write failed on " + out_path);
    m.next_chunk = i + 1;
    m.byte_offset += c.bytes.size();
    write_manifest(manifest_path, m);
    written += c.records;
  };

  int workers = cfg.workers < 1 ? 1 : cfg.workers;
  if (workers == 1 || start_chunk >= end_chunk) {
    for (long i = start_chunk; i < end_chunk; ++i) {
      auto [w0, w1] = window(i);
      commit(i, compute_chunk(cfg, w0, w1));
    }
    if (start_chunk >= end_chunk && !resumed) write_manifest(manifest_path, m);
    return written;
  }

  // Workers claim chunk indices in order; the sequencer appends chunk i only
  // after i-1, so the byte stream never depends on scheduling.
  std::mutex mu;
  std::condition_variable cv;
  long next_claim = start_chunk;
  long next_write = start_chunk;
  std::map<long, ChunkOutput> done;
  std::exception_ptr err;
  auto work = [&] {
    while (true) {
      long i;
      {
        std::unique_lock<std::mutex> lk(mu);
        cv.wait(lk, [&] {
          return err || next_claim >= end_chunk ||
                 next_claim - next_write < workers + 2;
        });
        if (err || next_claim >= end_chunk) return;
        i = next_claim++;
      }
      try {
        auto [w0, w1] = window(i);
        ChunkOutput c = compute_chunk(cfg, w0, w1);
        std::lock_guard<std::mutex> lk(mu);
        done.emplace(i, std::move(c));
        cv.notify_all();
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!err) err = std::current_exception();
        cv.notify_all();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  {
    std::unique_lock<std::mutex> lk(mu);
    while (next_write < end_chunk) {
      cv.wait(lk, [&] { return err || done.count(next_write) > 0; });
      if (err) break;
      ChunkOutput c = std::move(done[next_write]);
      done.erase(next_write);
      lk.unlock();
      try {
        commit(next_write, c);
      } catch (...) {
        lk.lock();
        if (!err) err = std::current_exception();
        cv.notify_all();
        break;
      }
      lk.lock();
      ++next_write;
      cv.notify_all();
    }
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return written;
}

}  // namespace mordell
