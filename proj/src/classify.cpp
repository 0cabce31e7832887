#include "subsums/classify.hpp"

#include <algorithm>
#include <sstream>

#include "subsums/errors.hpp"

namespace subsums {

namespace {

constexpr long long kSumsetGuard = 24;

void require_sorted(const SeriesSpec& spec) {
  if (!spec.weights_sorted_nonincreasing()) {
    throw DomainError("classification requires weights sorted nonincreasing: " + spec.str());
  }
}

Enclosure enclosure_max(const std::vector<Enclosure>& v) {
  Enclosure r = v.front();
  for (const auto& e : v) {
    r.lo = std::max(r.lo, e.lo);
    r.hi = std::max(r.hi, e.hi);
  }
  return r;
}

Enclosure enclosure_min(const std::vector<Enclosure>& v) {
  Enclosure r = v.front();
  for (const auto& e : v) {
    r.lo = std::min(r.lo, e.lo);
    r.hi = std::min(r.hi, e.hi);
  }
  return r;
}

// t(y) = y / (K + y); denominator is always positive for our y.
Enclosure threshold_of(Enclosure y, long long K) {
  Enclosure den = Enclosure::point(static_cast<double>(K)) + y;
  return div_pos(y, den);
}

std::string note_indeterminate(const std::string& what) {
  return "comparison with " + what + " is indeterminate at this precision; demoted; ";
}

struct CheckedBound {
  bool certified = false;
  bool indeterminate = false;
};

struct ChainedBool {
  bool value = false;
  bool indeterminate = false;
};

enum class Rel { Ge, Le, Lt };

// Certified three-way check of x <rel> t. Exact boundary hits are decided,
// not indeterminate: e.g. point brackets with x == t refute a strict <.
CheckedBound check_bound(Enclosure x, Enclosure t, Rel rel) {
  CheckedBound r;
  switch (rel) {
    case Rel::Ge:
      r.certified = certainly_ge(x, t);
      r.indeterminate = !r.certified && !certainly_lt(x, t);
      break;
    case Rel::Le:
      r.certified = certainly_le(x, t);
      r.indeterminate = !r.certified && !certainly_gt(x, t);
      break;
    case Rel::Lt:
      r.certified = certainly_lt(x, t);
      r.indeterminate = !r.certified && !certainly_ge(x, t);
      break;
  }
  return r;
}

}  // namespace

const char* label_name(Label label) {
  switch (label) {
    case Label::Interval: return "Interval";
    case Label::FiniteUnionOfIntervals: return "FiniteUnionOfIntervals";
    case Label::CantorSet: return "CantorSet";
    case Label::Cantorval: return "Cantorval";
    case Label::ContainsInterval: return "ContainsInterval";
    case Label::NotFiniteUnion: return "NotFiniteUnion";
    case Label::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* pattern_name(KakeyaPattern p) {
  switch (p) {
    case KakeyaPattern::AllLeq: return "all-term-leq-tail";
    case KakeyaPattern::AllGt: return "all-term-gt-tail";
    case KakeyaPattern::EventuallyAllLeq: return "eventually-all-term-leq-tail";
    case KakeyaPattern::EventuallyAllGt: return "eventually-all-term-gt-tail";
    case KakeyaPattern::PeriodicMixed: return "periodic-mixed";
    case KakeyaPattern::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ThresholdReport thresholds_sine(const SeriesSpec& spec) {
  if (spec.kind() != SeriesKind::Sine) throw DomainError("thresholds_sine expects a sine series");
  require_sorted(spec);
  const auto& k = spec.weights();
  const long long K = spec.weight_sum();
  const std::size_t m = k.size();
  const Enclosure pi = pi_enclosure();
  const Enclosure half_pi = pi * Enclosure::point(0.5);
  const Enclosure two_over_pi = div_pos(Enclosure::point(2.0), pi);

  ThresholdReport rep;
  long long suffix = 0;  // k_{j+1} + ... + k_m
  for (std::size_t j = m; j-- > 0;) {
    Enclosure tailsum = Enclosure::point(static_cast<double>(suffix));
    rep.d_list.insert(rep.d_list.begin(), half_pi * Enclosure::point(static_cast<double>(k[j])) - tailsum);
    rep.l_list.insert(rep.l_list.begin(), two_over_pi * Enclosure::point(static_cast<double>(k[j])) - tailsum);
    suffix += k[j];
  }
  rep.d = enclosure_max(rep.d_list);
  rep.l = enclosure_min(rep.l_list);
  rep.t_interval = threshold_of(rep.d, K);
  rep.t_cantor = threshold_of(rep.l, K);
  // 2 k_m / (K pi + 2 k_m)
  Enclosure two_km = Enclosure::point(static_cast<double>(2 * k.back()));
  rep.t_not_finite_union = div_pos(two_km, scale(pi, K) + two_km);
  if (m <= kSumsetGuard) {
    rep.sums = sumset(k);
    Enclosure two_nstar = Enclosure::point(static_cast<double>(2 * rep.sums->n_star));
    rep.t_contains_interval = div_pos(pi, two_nstar + pi);
  }
  return rep;
}

KakeyaOutcome kakeya_compare(const SeriesSpec& spec, long long n) {
  if (n < 1) throw DomainError("kakeya_compare index must be >= 1");
  Enclosure a = term(spec, n);
  Enclosure r = tail(spec, n);
  if (a.hi <= r.lo) return KakeyaOutcome::TermLeqTail;
  if (a.lo > r.hi) return KakeyaOutcome::TermGtTail;
  return KakeyaOutcome::Indeterminate;
}

KakeyaScanSummary kakeya_scan(const SeriesSpec& spec, long long horizon) {
  if (horizon < 1) throw DomainError("scan horizon must be >= 1");
  KakeyaScanSummary s;
  s.requested_horizon = horizon;
  s.horizon = std::min(horizon, max_safe_index(spec));
  if (s.horizon < 1) {
    s.pattern = KakeyaPattern::Inconclusive;
    return s;
  }
  // Walk n downward reusing tail(n) = term(n+1) + tail(n+1), which is the
  // exact fold the standalone tail() performs while the cut block stays
  // put; recompute from scratch once per block.
  const long long mm = spec.kind() == SeriesKind::ExplicitPrefix
                           ? 1
                           : static_cast<long long>(spec.block_size());
  s.outcomes.assign(static_cast<std::size_t>(s.horizon), KakeyaOutcome::Indeterminate);
  Enclosure tl{};
  long long tl_block = -1;
  bool have_tl = false;
  for (long long n = s.horizon; n >= 1; --n) {
    Enclosure a = term(spec, n);
    if (spec.kind() != SeriesKind::ExplicitPrefix && have_tl && n / mm == tl_block) {
      tl = term(spec, n + 1) + tl;
    } else {
      tl = tail(spec, n);
      tl_block = n / mm;
      have_tl = true;
    }
    KakeyaOutcome o = KakeyaOutcome::Indeterminate;
    if (a.hi <= tl.lo) o = KakeyaOutcome::TermLeqTail;
    if (a.lo > tl.hi) o = KakeyaOutcome::TermGtTail;
    s.outcomes[static_cast<std::size_t>(n - 1)] = o;
    switch (o) {
      case KakeyaOutcome::TermLeqTail: ++s.leq_count; break;
      case KakeyaOutcome::TermGtTail: ++s.gt_count; break;
      case KakeyaOutcome::Indeterminate: ++s.indeterminate_count; break;
    }
  }
  const long long total = s.horizon;
  if (s.leq_count == total) {
    s.pattern = KakeyaPattern::AllLeq;
    return s;
  }
  if (s.gt_count == total) {
    s.pattern = KakeyaPattern::AllGt;
    return s;
  }
  // look at a trailing window of full blocks for a stabilized pattern
  const long long m = spec.kind() == SeriesKind::ExplicitPrefix
                          ? 1
                          : static_cast<long long>(spec.block_size());
  const long long window = std::min(total, std::max<long long>(8 * m, 16));
  bool residue_const = true;
  std::vector<int> residue_outcome(static_cast<std::size_t>(m), -1);
  for (long long n = total - window + 1; n <= total; ++n) {
    KakeyaOutcome o = s.outcomes[static_cast<std::size_t>(n - 1)];
    if (o == KakeyaOutcome::Indeterminate) {
      residue_const = false;
      break;
    }
    auto r = static_cast<std::size_t>(n % m);
    int v = o == KakeyaOutcome::TermGtTail ? 1 : 0;
    if (residue_outcome[r] == -1) {
      residue_outcome[r] = v;
    } else if (residue_outcome[r] != v) {
      residue_const = false;
      break;
    }
  }
  if (!residue_const || window < 2 * m) {
    s.pattern = KakeyaPattern::Inconclusive;
    return s;
  }
  bool any_gt = false, any_leq = false;
  for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
    if (residue_outcome[r] == 1) {
      any_gt = true;
      s.gt_residues.push_back(static_cast<int>(r));
    } else if (residue_outcome[r] == 0) {
      any_leq = true;
    }
  }
  if (any_gt && any_leq) {
    s.pattern = KakeyaPattern::PeriodicMixed;
  } else if (any_gt) {
    s.pattern = KakeyaPattern::EventuallyAllGt;
    s.gt_residues.clear();
  } else {
    s.pattern = KakeyaPattern::EventuallyAllLeq;
  }
  return s;
}

Classification classify_sine(const SeriesSpec& spec) {
  if (spec.kind() != SeriesKind::Sine) throw DomainError("classify_sine expects a sine series");
  require_sorted(spec);
  ThresholdReport t = thresholds_sine(spec);
  const Enclosure x = spec.ratio();

  Classification c;
  std::ostringstream notes;

  CheckedBound interval = check_bound(x, t.t_interval, Rel::Ge);
  CheckedBound nfu = check_bound(x, t.t_not_finite_union, Rel::Le);
  CheckedBound cantor = check_bound(x, t.t_cantor, Rel::Le);
  CheckedBound ci;
  if (t.t_contains_interval) {
    ci = check_bound(x, *t.t_contains_interval, Rel::Ge);
  } else {
    notes << "m > " << kSumsetGuard
          << ": sumset run skipped, contains-interval window not evaluated; ";
  }

  if (interval.indeterminate) notes << note_indeterminate("the interval threshold d/(K+d)");
  if (nfu.indeterminate) notes << note_indeterminate("the threshold 2*k_m/(K*pi+2*k_m)");
  if (cantor.indeterminate) notes << note_indeterminate("the Cantor threshold l/(K+l)");
  if (ci.indeterminate) notes << note_indeterminate("the threshold pi/(2*n*+pi)");

  auto cert = [&](const char* id, const char* ineq, Enclosure lhs, Enclosure rhs) {
    c.certificates.push_back({id, ineq, lhs, rhs});
  };

  // The interval threshold sits strictly above the other cutoffs, so these
  // cannot certify together; refuse to label if they ever do.
  if (interval.certified && (cantor.certified || (ci.certified && nfu.certified))) {
    c.label = Label::Unknown;
    c.notes = notes.str() + "conflicting certifications; refusing to label; ";
    return c;
  }

  if (interval.certified) {
    c.label = Label::Interval;
    cert("sine-interval-threshold", "x >= d/(K+d)", x, t.t_interval);
  } else if (ci.certified && nfu.certified) {
    c.label = Label::Cantorval;
    cert("sine-cantorval-window", "pi/(2*n*+pi) <= x", x, *t.t_contains_interval);
    cert("sine-cantorval-window", "x <= 2*k_m/(K*pi+2*k_m)", x, t.t_not_finite_union);
    notes << "(n0,n*) = (" << t.sums->n0 << "," << t.sums->n_star << "), maximal run; ";
  } else if (cantor.certified) {
    c.label = Label::CantorSet;
    cert("sine-cantor-threshold", "x <= l/(K+l)", x, t.t_cantor);
    if (nfu.certified) {
      cert("sine-not-finite-union-threshold", "x <= 2*k_m/(K*pi+2*k_m)", x, t.t_not_finite_union);
    }
  } else if (nfu.certified) {
    c.label = Label::NotFiniteUnion;
    cert("sine-not-finite-union-threshold", "x <= 2*k_m/(K*pi+2*k_m)", x, t.t_not_finite_union);
  } else if (ci.certified) {
    c.label = Label::ContainsInterval;
    cert("sine-contains-interval-threshold", "x >= pi/(2*n*+pi)", x, *t.t_contains_interval);
    notes << "(n0,n*) = (" << t.sums->n0 << "," << t.sums->n_star << "), maximal run; ";
  } else {
    c.label = Label::Unknown;
    notes << "no criterion certifies this x; ";
    long long h = std::min<long long>(64, max_safe_index(spec));
    if (h >= 1) {
      KakeyaScanSummary scan = kakeya_scan(spec, h);
      notes << "term-vs-tail scan to " << scan.horizon << ": " << scan.leq_count << " leq, "
            << scan.gt_count << " gt, " << scan.indeterminate_count << " indeterminate ("
            << pattern_name(scan.pattern) << "); ";
    }
  }
  c.notes = notes.str();
  return c;
}

Classification classify_multigeometric(const SeriesSpec& spec) {
  if (spec.kind() != SeriesKind::Multigeometric) {
    throw DomainError("classify_multigeometric expects a multigeometric series");
  }
  require_sorted(spec);
  if (spec.block_size() > static_cast<std::size_t>(kSumsetGuard)) {
    throw GuardError("classify_multigeometric: m > 24; use the meet-in-the-middle sumset");
  }
  const Enclosure q = spec.ratio();
  const long long K = spec.weight_sum();
  const long long km = spec.weights().back();
  SumsetInfo sums = sumset(spec.weights());

  const Enclosure t_ci = from_rational(Rational(1, sums.n_star + 1));
  const Enclosure t_nfu = from_rational(Rational(km, K + km));
  const Enclosure t_cantor = from_rational(Rational(1, sums.card_sigma));

  CheckedBound ci = check_bound(q, t_ci, Rel::Ge);
  CheckedBound nfu = check_bound(q, t_nfu, Rel::Lt);
  CheckedBound cantor = check_bound(q, t_cantor, Rel::Lt);

  Classification c;
  std::ostringstream notes;
  notes << "Sigma card " << sums.card_sigma << ", (n0,n*) = (" << sums.n0 << "," << sums.n_star
        << "), maximal run; ";
  if (ci.indeterminate) notes << note_indeterminate("1/(n*+1)");
  if (nfu.indeterminate) notes << note_indeterminate("k_m/(K+k_m)");
  if (cantor.indeterminate) notes << note_indeterminate("1/card(Sigma)");

  auto cert = [&](const char* id, const char* ineq, Enclosure lhs, Enclosure rhs) {
    c.certificates.push_back({id, ineq, lhs, rhs});
  };

  if (ci.certified && nfu.certified) {
    c.label = Label::Cantorval;
    cert("multigeometric-cantorval-window", "1/(n*+1) <= q", q, t_ci);
    cert("multigeometric-cantorval-window", "q < k_m/(K+k_m)", q, t_nfu);
  } else if (cantor.certified) {
    c.label = Label::CantorSet;
    cert("multigeometric-cantor-threshold", "q < 1/card(Sigma)", q, t_cantor);
    if (nfu.certified) {
      cert("multigeometric-not-finite-union", "q < k_m/(K+k_m)", q, t_nfu);
    }
  } else if (nfu.certified) {
    c.label = Label::NotFiniteUnion;
    cert("multigeometric-not-finite-union", "q < k_m/(K+k_m)", q, t_nfu);
  } else if (ci.certified) {
    c.label = Label::ContainsInterval;
    cert("multigeometric-contains-interval", "q >= 1/(n*+1)", q, t_ci);
  } else {
    c.label = Label::Unknown;
    notes << "no criterion certifies this q; ";
    long long h = std::min<long long>(64, max_safe_index(spec));
    if (h >= 1) {
      KakeyaScanSummary scan = kakeya_scan(spec, h);
      notes << "term-vs-tail scan to " << scan.horizon << ": " << scan.leq_count << " leq, "
            << scan.gt_count << " gt, " << scan.indeterminate_count << " indeterminate ("
            << pattern_name(scan.pattern) << "); ";
    }
  }
  c.notes = notes.str();
  return c;
}

namespace {

struct FamilyWindow {
  std::vector<long long> weights;
  Rational lower;
  Rational upper;
};

FamilyWindow family_window(long long a, long long d, long long n) {
  if (n < 4) throw DomainError("family requires n >= 4");
  if (a < 1 || d < 1) throw DomainError("family requires positive integers a and d");
  if (n > 10'000 || a > 1'000'000'000 || d > 1'000'000'000) {
    throw GuardError("family parameters out of supported range");
  }
  if (!(2 * n * d < a)) {
    throw DomainError("family hypothesis 2*n*d < a fails: 2*" + std::to_string(n) + "*" +
                      std::to_string(d) + " >= " + std::to_string(a));
  }
  if (!(a < (2 * n + 2) * d)) {
    throw DomainError("family hypothesis a < (2n+2)*d fails: " + std::to_string(a) +
                      " >= " + std::to_string((2 * n + 2) * d));
  }
  FamilyWindow w;
  for (long long i = n; i >= 1; --i) w.weights.push_back(a + 2 * i * d);
  w.weights.push_back(a);
  w.weights.push_back(d);
  w.lower = Rational(1, 2 * n + 2);
  w.upper = std::min(Rational(d, a), Rational(a - d, (n + 2) * a + (n * n + n) * d));
  return w;
}

Classification family_result(const FamilyWindow& w, Enclosure q, ChainedBool above,
                             ChainedBool below) {
  Classification c;
  std::ostringstream notes;
  notes << "weights (";
  for (std::size_t i = 0; i < w.weights.size(); ++i) notes << (i ? "," : "") << w.weights[i];
  notes << "); window [" << w.lower.str() << ", " << w.upper.str() << "); ";

  if (above.value && below.value) {
    c.label = Label::Cantorval;
    c.certificates.push_back({"family-cantorval-window", "1/(2n+2) <= q", q,
                              from_rational(w.lower)});
    c.certificates.push_back({"family-cantorval-window",
                              "q < min{d/a, (a-d)/((n+2)a+(n^2+n)d)}", q,
                              from_rational(w.upper)});
  } else {
    c.label = Label::Unknown;
    if (above.indeterminate) notes << note_indeterminate("the window lower endpoint");
    if (below.indeterminate) notes << note_indeterminate("the window upper endpoint");
    if (!above.value && !above.indeterminate) notes << "q below the window; ";
    if (!below.value && !below.indeterminate) notes << "q at or above the window; ";
  }
  c.notes = notes.str();
  return c;
}

}  // namespace

Classification classify_ferdinands_family(long long a, long long d, long long n,
                                          const Rational& q) {
  FamilyWindow w = family_window(a, d, n);
  if (!(Rational(0, 1) < q && q < Rational(1, 1))) throw DomainError("q must lie in (0,1)");
  ChainedBool above{w.lower <= q, false};
  ChainedBool below{q < w.upper, false};
  return family_result(w, from_rational(q), above, below);
}

Classification classify_ferdinands_family(long long a, long long d, long long n, Enclosure q) {
  FamilyWindow w = family_window(a, d, n);
  if (!(q.lo > 0.0 && q.hi < 1.0)) throw DomainError("q must lie in (0,1)");
  const Enclosure lo_enc = from_rational(w.lower);
  const Enclosure hi_enc = from_rational(w.upper);
  ChainedBool above{certainly_ge(q, lo_enc), !certainly_ge(q, lo_enc) && overlaps(q, lo_enc)};
  ChainedBool below{certainly_lt(q, hi_enc), !certainly_lt(q, hi_enc) && overlaps(q, hi_enc)};
  return family_result(w, q, above, below);
}

}  // namespace subsums
