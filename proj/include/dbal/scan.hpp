// scan.hpp - parallel sweeps over (n, k, ell) comparing BFS verdicts with the
// closed-form predictions.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "dbal/balance.hpp"
#include "dbal/gp.hpp"
#include "dbal/oracle.hpp"

namespace dbal {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive
  bool operator==(const IntRange&) const = default;
};

enum class NBase { KTimesKPlus2, ConjecturedNk };

struct ExplicitN {
  IntRange range;
};
struct OffsetN {
  NBase base = NBase::KTimesKPlus2;
  IntRange offset;
};
using NRule = std::variant<ExplicitN, OffsetN>;

// Empty `explicit_ells` means every ell from 1 to the diameter.
struct EllSet {
  std::vector<int> explicit_ells;
  bool all_up_to_diameter() const { return explicit_ells.empty(); }
};

struct ScanRequest {
  IntRange k_range{1, 1};
  NRule n_rule = ExplicitN{{3, 3}};
  EllSet ells{{1}};
  bool symmetry = true;
  unsigned workers = 0;  // 0 = hardware concurrency
  std::optional<std::chrono::milliseconds> time_budget;
  bool with_bounds = true;
  bool record_timing = false;  // elapsed stays 0 otherwise, keeping reports reproducible
};

enum class BfsStatus { Balanced, Unbalanced, Timeout, Error };
enum class Agreement { Match, Mismatch, NotPredicted };

inline std::string_view to_string(BfsStatus s) {
  switch (s) {
    case BfsStatus::Balanced: return "Balanced";
    case BfsStatus::Unbalanced: return "Unbalanced";
    case BfsStatus::Timeout: return "Timeout";
    case BfsStatus::Error: return "Error";
  }
  return "?";
}

inline std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::Match: return "Match";
    case Agreement::Mismatch: return "Mismatch";
    case Agreement::NotPredicted: return "NotPredicted";
  }
  return "?";
}

struct ScanRecord {
  std::int64_t n = 0;
  std::int64_t k = 0;
  int ell = 1;
  BfsStatus bfs_status = BfsStatus::Error;
  std::optional<Witness> witness;
  std::size_t pairs_checked = 0;
  Prediction prediction;
  Agreement agreement = Agreement::NotPredicted;
  std::vector<BoundReport> bound_reports;
  // Balanced at some ell below the diameter although n exceeds the
  // conjectured n_k.
  bool conjecture_signal = false;
  std::string error;
  std::chrono::milliseconds elapsed{0};
};

inline Agreement agreement_of(const Prediction& p, BfsStatus s) {
  if (p.status == Status::Unknown || (s != BfsStatus::Balanced && s != BfsStatus::Unbalanced)) {
    return Agreement::NotPredicted;
  }
  const bool predicted_balanced = p.status == Status::Balanced;
  return predicted_balanced == (s == BfsStatus::Balanced) ? Agreement::Match : Agreement::Mismatch;
}

// (n, k) pairs of the request in (k, n) order; invalid GP parameters are
// dropped.
inline std::vector<GpParams> enumerate_graphs(const ScanRequest& req) {
  std::vector<GpParams> out;
  for (std::int64_t k = std::max<std::int64_t>(req.k_range.lo, 1); k <= req.k_range.hi; ++k) {
    IntRange ns;
    if (const auto* e = std::get_if<ExplicitN>(&req.n_rule)) {
      ns = e->range;
    } else {
      const auto& off = std::get<OffsetN>(req.n_rule);
      std::int64_t base = 0;
      if (off.base == NBase::KTimesKPlus2) {
        base = k * (k + 2);
      } else {
        if (k < 2) continue;
        base = conjectured_nk(k);
      }
      ns = {base + off.offset.lo, base + off.offset.hi};
    }
    for (std::int64_t n = std::max<std::int64_t>(ns.lo, 3); n <= ns.hi; ++n) {
      if (valid_gp_params(n, k)) {
        out.push_back({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)});
      }
    }
  }
  return out;
}

// All records of one (n, k) work unit, in ell order.
inline std::vector<ScanRecord> scan_graph(GpParams params, const ScanRequest& req) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::int64_t n = params.n, k = params.k;
  auto make = [&](int ell) {
    ScanRecord r;
    r.n = n;
    r.k = k;
    r.ell = ell;
    r.prediction = Prediction{n, k, ell};
    return r;
  };

  std::vector<ScanRecord> out;
  std::optional<Graph> graph;
  std::optional<RotationalDistances> rd;
  try {
    graph.emplace(gp_construct(n, k));
    rd.emplace(*graph);
  } catch (const std::exception& e) {
    for (int ell : req.ells.explicit_ells.empty() ? std::vector<int>{1} : req.ells.explicit_ells) {
      auto r = make(ell);
      r.error = e.what();
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<int> ells = req.ells.explicit_ells;
  if (req.ells.all_up_to_diameter()) {
    for (int ell = 1; ell <= rd->diameter(); ++ell) ells.push_back(ell);
  }
  std::sort(ells.begin(), ells.end());
  ells.erase(std::unique(ells.begin(), ells.end()), ells.end());

  const std::int64_t nk = k >= 2 ? conjectured_nk(k) : 0;
  for (int ell : ells) {
    auto r = make(ell);
    const auto ell_start = Clock::now();
    if (req.time_budget && ell_start - start >= *req.time_budget) {
      r.bfs_status = BfsStatus::Timeout;
      r.error = "time budget exceeded";
      out.push_back(std::move(r));
      continue;
    }
    try {
      const Verdict v = req.symmetry ? l_distance_verdict(*rd, ell) : is_l_distance_balanced(*graph, ell, false);
      r.bfs_status = v.balanced ? BfsStatus::Balanced : BfsStatus::Unbalanced;
      r.witness = v.witness;
      r.pairs_checked = v.pairs_checked;
      if (ell == 1 || ell == 2) r.prediction = predict(n, k, ell);
      r.agreement = agreement_of(r.prediction, r.bfs_status);
      if (req.with_bounds) r.bound_reports = check_bounds(*rd, ell);
      r.conjecture_signal = v.balanced && nk > 0 && n > nk && ell < rd->diameter();
    } catch (const std::exception& e) {
      r.bfs_status = BfsStatus::Error;
      r.error = e.what();
    }
    if (req.record_timing) {
      r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - ell_start);
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct ScanSummary {
  std::size_t graphs = 0;
  std::size_t records = 0;
  std::size_t mismatches = 0;
  std::size_t bound_failures = 0;
  std::size_t errors = 0;
  std::size_t timeouts = 0;
  std::size_t conjecture_signals = 0;
};

using RecordSink = std::function<void(const ScanRecord&)>;

// Runs every work unit on a pool of workers. `sink` sees records in (k, n, ell)
// order: completed units wait in a reorder buffer until all earlier units are
// flushed, so memory tracks the number of in-flight units, not the sweep size.
inline ScanSummary run_scan(const ScanRequest& req, const RecordSink& sink) {
  const auto units = enumerate_graphs(req);
  ScanSummary summary;
  summary.graphs = units.size();
  unsigned workers = req.workers ? req.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(units.size(), 1)));

  std::mutex mu;
  std::condition_variable flushed;
  std::map<std::size_t, std::vector<ScanRecord>> pending;
  std::size_t next_to_flush = 0;
  std::atomic<std::size_t> next_unit{0};
  // Bounds how far workers may run ahead of the flush point.
  const std::size_t window = 4 * static_cast<std::size_t>(workers) + 16;

  auto emit = [&](const std::vector<ScanRecord>& records) {
    for (const auto& r : records) {
      ++summary.records;
      if (r.agreement == Agreement::Mismatch) ++summary.mismatches;
      if (r.bfs_status == BfsStatus::Error) ++summary.errors;
      if (r.bfs_status == BfsStatus::Timeout) ++summary.timeouts;
      if (r.conjecture_signal) ++summary.conjecture_signals;
      for (const auto& b : r.bound_reports) summary.bound_failures += b.holds ? 0 : 1;
      if (sink) sink(r);
    }
  };

  auto work = [&] {
    for (;;) {
      const std::size_t i = next_unit.fetch_add(1);
      if (i >= units.size()) return;
      {
        std::unique_lock lock(mu);
        flushed.wait(lock, [&] { return i < next_to_flush + window; });
      }
      auto records = scan_graph(units[i], req);
      std::lock_guard lock(mu);
      pending.emplace(i, std::move(records));
      while (!pending.empty() && pending.begin()->first == next_to_flush) {
        emit(pending.begin()->second);
        pending.erase(pending.begin());
        ++next_to_flush;
      }
      flushed.notify_all();
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return summary;
}

inline std::vector<ScanRecord> run_scan(const ScanRequest& req) {
  std::vector<ScanRecord> out;
  run_scan(req, [&](const ScanRecord& r) { out.push_back(r); });
  return out;
}

struct ConjectureProbe {
  std::int64_t n = 0;
  std::int64_t k = 0;
  Distance diameter = 0;
  std::optional<std::int64_t> conjectured_nk;
  std::vector<Verdict> verdicts;       // one per ell in [1, diameter)
  std::vector<int> counter_signals;    // ells balanced although n > n_k
  bool conjecture_applies() const { return conjectured_nk && n > *conjectured_nk; }
};

inline ConjectureProbe probe_conjecture(std::int64_t k, std::int64_t n) {
  const Graph g = gp_construct(n, k);
  const RotationalDistances rd(g);
  ConjectureProbe probe;
  probe.n = n;
  probe.k = k;
  probe.diameter = rd.diameter();
  if (k >= 2) probe.conjectured_nk = conjectured_nk(k);
  for (int ell = 1; ell < rd.diameter(); ++ell) {
    probe.verdicts.push_back(l_distance_verdict(rd, ell));
    if (probe.verdicts.back().balanced && probe.conjecture_applies()) probe.counter_signals.push_back(ell);
  }
  return probe;
}

}  // namespace dbal
