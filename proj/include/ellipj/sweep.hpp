// sweep.hpp
//
// Batch verification harness behind the CLI: seeded reproducible sampling
// of (z, m) over the bound-chain domain, one BoundReport per sample as
// JSON-lines or RFC-4180 CSV, and a machine-readable summary.
//
// Reproducibility contract.  Draw j of sample i is
//
//   u64  = splitmix64(seed + (4i + j + 1) * 0x9E3779B97F4A7C15)
//   unif = (u64 >> 11) * 2^-53
//
// (SplitMix64 finalizer; Steele, Lea & Flood, OOPSLA 2014).  Each sample
// is derived from its index alone, so the stream is byte-identical for a
// given (config, seed) no matter how many workers computed it, and the
// worker pool can hand out chunks freely as long as emission is ordered
// by index.  Disks are sampled area-uniformly (radius = R sqrt(u)).

#ifndef ELLIPJ_SWEEP_HPP
#define ELLIPJ_SWEEP_HPP

#include <atomic>
#include <cmath>
#include <complex>
#include <condition_variable>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "ellipj/bounds.hpp"
#include "ellipj/errors.hpp"
#include "ellipj/monotonicity.hpp"
#include "ellipj/series_eval.hpp"

namespace ellipj {

enum class OutputFormat { json_lines, csv };

struct SweepConfig {
  double R = 1.5;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  double tol = 1e-13;
  OutputFormat format = OutputFormat::json_lines;
  std::string output_path = "-";  // "-" = stdout; resolved by the CLI

  void validate() const {
    EvalDomain domain(R);  // throws unless 0 < R < pi/2
    (void)domain;
    if (samples < 1) throw DomainError("SweepConfig: samples must be >= 1");
    if (!(tol > 0.0)) throw DomainError("SweepConfig: tol must be > 0");
  }
};

namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Draw j (0..3) of sample i, uniform on [0, 1).
inline double sample_unit(std::uint64_t seed, std::uint64_t i, unsigned j) {
  std::uint64_t x = seed + (4 * i + j) * 0x9E3779B97F4A7C15ull;
  return static_cast<double>(splitmix64(x) >> 11) * 0x1.0p-53;
}

}  // namespace rng

struct SweepSample {
  std::complex<double> z, m;
};

inline SweepSample sweep_sample(const SweepConfig& cfg, std::uint64_t i) {
  const double rm = std::sqrt(rng::sample_unit(cfg.seed, i, 0));
  const double am = 2.0 * std::numbers::pi * rng::sample_unit(cfg.seed, i, 1);
  const double rz = cfg.R * std::sqrt(rng::sample_unit(cfg.seed, i, 2));
  const double az = 2.0 * std::numbers::pi * rng::sample_unit(cfg.seed, i, 3);
  return {{rz * std::cos(az), rz * std::sin(az)},
          {rm * std::cos(am), rm * std::sin(am)}};
}

struct WorstMargin {
  double value = std::numeric_limits<double>::infinity();
  std::complex<double> z, m;

  void fold(double v, std::complex<double> zz, std::complex<double> mm) {
    if (v < value) {
      value = v;
      z = zz;
      m = mm;
    }
  }
};

struct VerifySummary {
  std::uint64_t samples = 0;
  std::uint64_t passed = 0;
  WorstMargin worst_sharp, worst_coarse;

  bool all_passed() const { return passed == samples; }
};

namespace detail {

inline std::string csv_header() {
  return "index,seed,z_re,z_im,m_re,m_im,m1,"
         "sn_lhs,sn_sharp,sn_coarse,sn_margin_sharp,sn_margin_coarse,sn_eval_error,"
         "cn_lhs,cn_sharp,cn_coarse,cn_margin_sharp,cn_margin_coarse,cn_eval_error,"
         "dn_lhs,dn_sharp,dn_coarse,dn_margin_sharp,dn_margin_coarse,dn_eval_error,"
         "equality_case\r\n";
}

inline void csv_field(std::string& out, double v) {
  json_number(out, v);
  out += ',';
}

inline std::string report_line(const SweepConfig& cfg, std::uint64_t index,
                               const BoundReport& rep) {
  std::string out;
  if (cfg.format == OutputFormat::json_lines) {
    out += R"({"index":)";
    out += std::to_string(index);
    out += R"(,"seed":)";
    out += std::to_string(cfg.seed);
    out += ',';
    std::string body = to_json(rep);
    out.append(body, 1, body.size() - 1);  // splice report fields
    out += '\n';
  } else {
    out += std::to_string(index);
    out += ',';
    out += std::to_string(cfg.seed);
    out += ',';
    for (double v : {rep.z.real(), rep.z.imag(), rep.m.real(), rep.m.imag(),
                     rep.m1})
      csv_field(out, v);
    for (const BoundRecord* r : {&rep.sn, &rep.cn, &rep.dn})
      for (double v : {r->lhs, r->sharp, r->coarse, r->margin_sharp,
                       r->margin_coarse, r->eval_error})
        csv_field(out, v);
    out += equality_case_name(rep.equality_case);
    out += "\r\n";
  }
  return out;
}

// Ordered parallel-for: workers claim fixed-size chunks, the caller's
// emit() sees chunks strictly in index order.
template <typename Produce, typename Emit>
void ordered_chunks(std::uint64_t total, Produce produce, Emit emit) {
  const unsigned workers = std::max(
      1u, std::min(8u, std::thread::hardware_concurrency()));
  constexpr std::uint64_t kChunk = 512;
  const std::uint64_t nchunks = (total + kChunk - 1) / kChunk;

  if (workers == 1 || nchunks <= 1) {
    for (std::uint64_t c = 0; c < nchunks; ++c) {
      auto r = produce(c * kChunk, std::min(total, (c + 1) * kChunk));
      emit(std::move(r));
    }
    return;
  }

  std::vector<decltype(produce(0, 0))> done(nchunks);
  std::vector<char> ready(nchunks, 0);
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  std::condition_variable cv;

  auto work = [&] {
    for (;;) {
      std::uint64_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      auto r = produce(c * kChunk, std::min(total, (c + 1) * kChunk));
      {
        std::lock_guard<std::mutex> lock(mu);
        done[c] = std::move(r);
        ready[c] = 1;
      }
      cv.notify_one();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return ready[c] == 1; });
    auto r = std::move(done[c]);
    lock.unlock();
    emit(std::move(r));
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

inline std::string summary_json(const SweepConfig& cfg,
                                const VerifySummary& sum) {
  std::string out;
  out += R"({"summary":true,"samples":)";
  out += std::to_string(sum.samples);
  out += R"(,"passed":)";
  out += std::to_string(sum.passed);
  out += R"(,"violations":)";
  out += std::to_string(sum.samples - sum.passed);
  out += R"(,"worst_margin_sharp":)";
  detail::json_number(out, sum.worst_sharp.value);
  out += R"(,"worst_margin_sharp_z":)";
  detail::json_complex(out, sum.worst_sharp.z);
  out += R"(,"worst_margin_sharp_m":)";
  detail::json_complex(out, sum.worst_sharp.m);
  out += R"(,"worst_margin_coarse":)";
  detail::json_number(out, sum.worst_coarse.value);
  out += R"(,"worst_margin_coarse_z":)";
  detail::json_complex(out, sum.worst_coarse.z);
  out += R"(,"worst_margin_coarse_m":)";
  detail::json_complex(out, sum.worst_coarse.m);
  out += R"(,"R":)";
  detail::json_number(out, cfg.R);
  out += R"(,"tol":)";
  detail::json_number(out, cfg.tol);
  out += R"(,"seed":)";
  out += std::to_string(cfg.seed);
  out += '}';
  return out;
}

/// Runs the bound-chain sweep, streaming one report per sample to `out` and
/// returning the summary.  In JSON-lines mode the summary is appended to
/// the stream as a final {"summary":true,...} line; in CSV mode the file
/// stays pure CSV and the caller prints the summary elsewhere.
inline VerifySummary run_verify(const SweepConfig& cfg, std::ostream& out) {
  cfg.validate();
  const SeriesTable& table = default_table();
  (void)table;  // force the one-time build before workers start

  struct Chunk {
    std::string text;
    std::uint64_t passed = 0;
    WorstMargin worst_sharp, worst_coarse;
  };

  VerifySummary sum;
  sum.samples = cfg.samples;

  if (cfg.format == OutputFormat::csv) out << detail::csv_header();
  detail::ordered_chunks(
      cfg.samples,
      [&cfg](std::uint64_t lo, std::uint64_t hi) {
        Chunk ch;
        ch.text.reserve((hi - lo) * 420);
        for (std::uint64_t i = lo; i < hi; ++i) {
          SweepSample s = sweep_sample(cfg, i);
          BoundReport rep = check_theorem(s.z, s.m, cfg.tol);
          ch.text += detail::report_line(cfg, i, rep);
          if (rep.passes()) ++ch.passed;
          for (const BoundRecord* r : {&rep.sn, &rep.cn, &rep.dn}) {
            ch.worst_sharp.fold(r->margin_sharp, s.z, s.m);
            ch.worst_coarse.fold(r->margin_coarse, s.z, s.m);
          }
        }
        return ch;
      },
      [&](Chunk ch) {
        out << ch.text;
        sum.passed += ch.passed;
        sum.worst_sharp.fold(ch.worst_sharp.value, ch.worst_sharp.z,
                             ch.worst_sharp.m);
        sum.worst_coarse.fold(ch.worst_coarse.value, ch.worst_coarse.z,
                              ch.worst_coarse.m);
      });

  if (cfg.format == OutputFormat::json_lines) out << summary_json(cfg, sum) << '\n';
  return sum;
}

struct MonotoneRunResult {
  std::vector<MonotonicityReport> rows;
  bool all_rows_negative = true;  // over rows with u > 0
};

/// Grid run for the CLI: u on (0, 1.5] (u_count points), m1 on [0, 1]
/// (m1_count points), JSON row per u plus a summary line.
inline MonotoneRunResult run_monotone(unsigned u_count, unsigned m1_count,
                                      std::ostream& out, double h = 1e-5) {
  if (u_count < 1 || m1_count < 1)
    throw DomainError("monotone grid counts must be >= 1");
  std::vector<double> u_grid, m1_grid;
  for (unsigned i = 1; i <= u_count; ++i)
    u_grid.push_back(1.5 * i / u_count);
  if (m1_count == 1) {
    m1_grid.push_back(0.0);
  } else {
    for (unsigned j = 0; j < m1_count; ++j)
      m1_grid.push_back(static_cast<double>(j) / (m1_count - 1));
  }

  MonotoneRunResult res;
  res.rows = verify_monotone(u_grid, m1_grid, h);
  double min_abs = std::numeric_limits<double>::infinity();
  for (const auto& rep : res.rows) {
    out << to_json(rep) << '\n';
    if (rep.u > 0.0 && !rep.all_negative) res.all_rows_negative = false;
    min_abs = std::min(min_abs, rep.min_abs_derivative);
  }
  out << R"({"summary":true,"rows":)" << res.rows.size()
      << R"(,"all_negative":)" << (res.all_rows_negative ? "true" : "false")
      << R"(,"min_abs_derivative":)";
  std::string tail;
  detail::json_number(tail, min_abs);
  out << tail << "}\n";
  return res;
}

}  // namespace ellipj

#endif  // ELLIPJ_SWEEP_HPP
