#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tscast {

// All numerics are double precision; gradient checks against central
// finite differences need the headroom.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXd;

enum class Err {
  // data
  MissingColumn,
  NonMonotoneTimestamps,
  GapInSeries,
  ParseError,
  InvalidSpec,
  WindowTooLong,
  IndexOutOfRange,
  // model
  ShapeMismatch,
  AllMaskedRow,
  NonFiniteInput,
  // decomposition
  EvenKernel,
  KernelTooLarge,
  // objectives
  NonPositiveSigma,
  NonPositiveCoefficient,
  // training
  NonFiniteLoss,
  EmptyValidationSplit,
  Checkpoint,
  // evaluation
  ZeroDenominator,
  MissingGroundTruth,
  HistoryTooShort,
  // misc
  Config,
  Io,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

  // Optional context, filled where the error concerns a specific series/row.
  std::optional<int64_t> series_id;
  std::string timestamp;
  std::optional<int64_t> batch_index;

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

// Deterministic random source. Box-Muller is hand-rolled so that streams do
// not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // splitmix64 warm-up so nearby seeds decorrelate
    next_u64();
  }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive bounds
  int64_t uniform_int(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Independent derived stream; `stream` disambiguates parallel consumers.
  Rng fork(uint64_t stream) const {
    Rng r(state_ ^ (0xA0761D6478BD642FULL * (stream + 1)));
    return r;
  }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tscast
