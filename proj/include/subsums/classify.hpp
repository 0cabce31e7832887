#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subsums/enclosure.hpp"
#include "subsums/series.hpp"
#include "subsums/sumset.hpp"

namespace subsums {

/// Label vocabulary for the topological type of the set of subsums.
/// Interval/FiniteUnionOfIntervals/CantorSet/Cantorval are full
/// characterizations; ContainsInterval and NotFiniteUnion are one-sided.
enum class Label {
  Interval,
  FiniteUnionOfIntervals,
  CantorSet,
  Cantorval,
  ContainsInterval,
  NotFiniteUnion,
  Unknown,
};

const char* label_name(Label label);

/// One certified inequality backing a label: lhs <op> rhs held with
/// disjoint brackets.
struct Certificate {
  std::string theorem;     // stable identifier of the criterion
  std::string inequality;  // the inequality in symbols, e.g. "x >= d/(K+d)"
  Enclosure lhs;
  Enclosure rhs;
};

struct Classification {
  Label label = Label::Unknown;
  std::vector<Certificate> certificates;
  std::string notes;
};

/// Threshold values for a sine-kind series with sorted weights:
///   d_j = (pi/2) k_j - k_{j+1} - ... - k_m      d = max_j d_j
///   l_j = (2/pi) k_j - k_{j+1} - ... - k_m      l = min_j l_j
///   t_interval          = d / (K + d)           (x >= ... : interval)
///   t_not_finite_union  = 2 k_m / (K pi + 2 k_m)
///   t_contains_interval = pi / (2 n* + pi)      (needs the sumset run)
///   t_cantor            = l / (K + l)
struct ThresholdReport {
  std::vector<Enclosure> d_list;
  std::vector<Enclosure> l_list;
  Enclosure d;
  Enclosure l;
  Enclosure t_interval;
  Enclosure t_not_finite_union;
  std::optional<Enclosure> t_contains_interval;  // absent when m > 24
  Enclosure t_cantor;
  std::optional<SumsetInfo> sums;
};

ThresholdReport thresholds_sine(const SeriesSpec& spec);

/// Outcome of the certified term-vs-tail comparison at index n.
enum class KakeyaOutcome { TermLeqTail, TermGtTail, Indeterminate };

KakeyaOutcome kakeya_compare(const SeriesSpec& spec, long long n);

enum class KakeyaPattern {
  AllLeq,
  AllGt,
  EventuallyAllLeq,
  EventuallyAllGt,
  PeriodicMixed,
  Inconclusive,
};

const char* pattern_name(KakeyaPattern p);

/// Heuristic scan summary — evidence, never a certificate.
struct KakeyaScanSummary {
  long long requested_horizon = 0;
  long long horizon = 0;  // capped at max_safe_index
  long long leq_count = 0;
  long long gt_count = 0;
  long long indeterminate_count = 0;
  KakeyaPattern pattern = KakeyaPattern::Inconclusive;
  std::vector<int> gt_residues;  // indices mod m where TermGtTail stabilizes
  std::vector<KakeyaOutcome> outcomes;
};

KakeyaScanSummary kakeya_scan(const SeriesSpec& spec, long long horizon);

/// Classification of a sine-kind series; weights must be sorted
/// nonincreasing. Only certified inequalities produce labels; any
/// indeterminate comparison demotes to the weaker conclusion and is
/// recorded in the notes.
Classification classify_sine(const SeriesSpec& spec);

/// Classification of a multigeometric series; weights sorted nonincreasing.
Classification classify_multigeometric(const SeriesSpec& spec);

/// Specialized family check for weights (a+2nd, a+(2n-2)d, ..., a+2d, a, d)
/// with 2nd < a < (2n+2)d and n >= 4: Cantorval when q lies in
/// [1/(2n+2), min{d/a, (a-d)/((n+2)a + (n^2+n)d)}). The rational overload
/// compares q against the exact window endpoints, so boundary hits like
/// q = 1/(2n+2) certify; the enclosure overload certifies only off the
/// endpoints.
Classification classify_ferdinands_family(long long a, long long d, long long n,
                                          const Rational& q);
Classification classify_ferdinands_family(long long a, long long d, long long n, Enclosure q);

}  // namespace subsums
