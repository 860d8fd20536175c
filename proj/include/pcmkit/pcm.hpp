#pragma once

// Pairwise comparison matrices: the positive reciprocal data model shared by
// every other part of the library.
//
// Indices are 0-based throughout the C++ API. Text formats and user-facing
// messages use 1-based indices.

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace pcmkit {

/// Position (i, j) of an upper-triangle entry, i < j, 0-based.
struct Position {
  std::size_t i = 0;
  std::size_t j = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

struct UpperEntry {
  Position pos;
  double value = 1.0;
};

/// Positive reciprocal n x n matrix. Only the strict upper triangle is free:
/// the diagonal is 1 and a(j, i) is stored as exactly 1 / a(i, j).
class Pcm {
 public:
  /// Builds the matrix from its strict upper triangle. Every (i, j) with
  /// i < j must appear exactly once; n is inferred from the entries.
  static Pcm from_upper(std::span<const UpperEntry> upper);

  /// Builds from a full row-major grid, keeping the upper triangle and
  /// rebuilding the lower one. Used by parsers and generators that have
  /// already validated reciprocity.
  static Pcm from_upper_of(std::size_t n, std::span<const double> row_major);

  /// n x n matrix of ones.
  static Pcm uniform(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return a_[i * n_ + j];
  }
  std::span<const double> row_major() const noexcept { return a_; }

  /// Copy with a(i, j) = value and a(j, i) = 1 / value; i != j.
  Pcm with_entry(std::size_t i, std::size_t j, double value) const;
  Pcm transposed() const;
  /// Relabels alternatives: result(p[i], p[j]) = this(i, j).
  Pcm permuted(std::span<const std::size_t> p) const;

  friend bool operator==(const Pcm&, const Pcm&) = default;

 private:
  Pcm(std::size_t n, std::vector<double> a) : n_(n), a_(std::move(a)) {}

  std::size_t n_ = 0;
  std::vector<double> a_;
};

Pcm make_pcm(std::span<const UpperEntry> upper);

/// Matrix with some strict-upper-triangle entries unknown.
class IncompletePcm {
 public:
  /// `known` and `missing` must partition the strict upper triangle of an
  /// order-n matrix. Connectivity is not required here; see is_connected().
  IncompletePcm(std::size_t n, std::map<Position, double> known,
                std::vector<Position> missing);

  std::size_t order() const noexcept { return n_; }
  const std::map<Position, double>& known() const noexcept { return known_; }
  /// Sorted lexicographically.
  const std::vector<Position>& missing() const noexcept { return missing_; }

  /// True when the graph on 1..n with the known positions as edges is
  /// connected.
  bool is_connected() const;

  /// Complete matrix with missing()[t] set to values[t].
  Pcm fill(std::span<const double> values) const;

  /// Relabels alternatives as Pcm::permuted does.
  IncompletePcm permuted(std::span<const std::size_t> p) const;

 private:
  std::size_t n_;
  std::map<Position, double> known_;
  std::vector<Position> missing_;
};

/// phi(a_ij, a_jk, a_ik) = min(|1 - a_ik/(a_ij a_jk)|, |1 - a_ij a_jk/a_ik|).
double local_inconsistency(double a_ij, double a_jk, double a_ik) noexcept;

struct Triad {
  std::size_t i = 0, j = 0, k = 0;
  double ij = 1.0, jk = 1.0, ik = 1.0;
  double phi = 0.0;
};

inline constexpr double kDefaultConsistencyTol = 1e-9;

/// All C(n,3) triads, lexicographic in (i, j, k). Requires n >= 3.
std::vector<Triad> triads(const Pcm& m);

/// Largest phi over all triads without materializing them; 0 when n < 3.
double max_triad_phi(const Pcm& m) noexcept;

bool is_consistent(const Pcm& m, double tol = kDefaultConsistencyTol);

/// Fraction of triads whose phi exceeds tol. Requires n >= 3.
double inconsistent_triad_ratio(const Pcm& m,
                                double tol = kDefaultConsistencyTol);

/// C(n, 3).
std::size_t triad_count(std::size_t n) noexcept;

}  // namespace pcmkit
