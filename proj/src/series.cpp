#include "subsums/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "subsums/errors.hpp"

namespace subsums {

namespace {

constexpr int kMaxHorizonBlocks = 512;
constexpr double kHorizonRelTol = 1e-18;

void check_weights(const std::vector<long long>& w) {
  if (w.empty()) throw DomainError("weight vector must not be empty");
  for (long long k : w) {
    if (k < 1) throw DomainError("weights must be positive integers");
  }
  long long sum = 0;
  for (long long k : w) {
    sum += k;
    if (sum > (1LL << 52)) throw DomainError("weight sum too large");
  }
}

void check_ratio(Enclosure r) {
  // the 1e-12 headroom below 1 keeps the tail cut dominant over one more
  // evaluated block under rounding, which the telescoping guarantee needs
  if (!(r.lo > 0.0 && r.hi <= 1.0 - 1e-12 && r.lo <= r.hi)) {
    throw DomainError("ratio must lie strictly inside (0,1)");
  }
}

long long sum_of(const std::vector<long long>& w) {
  long long s = 0;
  for (long long k : w) s += k;
  return s;
}

// Per-block factor: sin(x^{i+1}) for Sine, q^{i+1} for Multigeometric.
// Canonical — every term/tail evaluation of block i goes through here, so
// identical blocks always yield bit-identical enclosures.
Enclosure block_factor(const SeriesSpec& s, long long i) {
  Enclosure p = pow_int(s.ratio(), i + 1);
  if (s.kind() == SeriesKind::Sine) return sin_enclosure(p);
  return p;
}

// Remainder bound for all blocks >= c, deliberately slack: the upper bound
// is doubled, the lower halved. The slack makes the cut dominate
// "terms of block c plus the cut at c+1" under any rounding, which is what
// keeps tails telescoping when the horizon shifts by one block.
Enclosure tail_cut(const SeriesSpec& s, long long c) {
  Enclosure r = s.ratio();
  double lg = static_cast<double>(c + 1) * std::log2(r.hi);
  if (lg < -1000.0) {
    // true remainder is below 2^-1000; this constant still bounds it
    return {0.0, 9.332636185032189e-302};
  }
  Enclosure p = pow_int(r, c + 1);
  Enclosure one_minus{step_down(1.0 - r.hi), step_up(1.0 - r.lo)};
  Enclosure geom = div_pos(scale(p, s.weight_sum()), one_minus);  // K r^{c+1} / (1-r)
  double hi = step_up(geom.hi * 2.0);
  double lo;
  if (s.kind() == SeriesKind::Sine) {
    lo = step_down(step_down(geom.lo * (2.0 / pi_enclosure().hi)) * 0.5);
  } else {
    lo = step_down(geom.lo * 0.5);
  }
  return {std::max(lo, 0.0), hi};
}

Enclosure prefix_term(const SeriesSpec& s, long long n) {
  const auto& pre = s.prefix();
  if (n < 1 || n > static_cast<long long>(pre.size())) {
    throw DomainError("explicit-prefix series is undefined at index " + std::to_string(n));
  }
  return from_rational(pre[static_cast<std::size_t>(n - 1)]);
}

Enclosure prefix_tail(const SeriesSpec& s, long long n) {
  const auto len = static_cast<long long>(s.prefix().size());
  if (n > len) throw DomainError("explicit-prefix tail undefined beyond the prefix");
  // geometric envelope past the prefix: within [0, last * rho/(1-rho)]
  Enclosure last = from_rational(s.prefix().back());
  Enclosure rho = from_rational(s.prefix_ratio());
  Enclosure one_minus{step_down(1.0 - rho.hi), step_up(1.0 - rho.lo)};
  Enclosure env = div_pos(last * rho, one_minus);
  Enclosure acc{0.0, env.hi};
  for (long long p = len; p > n; --p) acc = prefix_term(s, p) + acc;
  return acc;
}

}  // namespace

SeriesSpec SeriesSpec::sine(std::vector<long long> weights, const Rational& x) {
  SeriesSpec s = sine(std::move(weights), from_rational(x));
  s.ratio_exact_ = x;
  return s;
}

SeriesSpec SeriesSpec::sine(std::vector<long long> weights, Enclosure x) {
  check_weights(weights);
  check_ratio(x);
  SeriesSpec s;
  s.kind_ = SeriesKind::Sine;
  s.weights_ = std::move(weights);
  s.weight_sum_ = sum_of(s.weights_);
  s.ratio_ = x;
  return s;
}

SeriesSpec SeriesSpec::multigeometric(std::vector<long long> weights, const Rational& q) {
  SeriesSpec s = multigeometric(std::move(weights), from_rational(q));
  s.ratio_exact_ = q;
  return s;
}

SeriesSpec SeriesSpec::multigeometric(std::vector<long long> weights, Enclosure q) {
  check_weights(weights);
  check_ratio(q);
  SeriesSpec s;
  s.kind_ = SeriesKind::Multigeometric;
  s.weights_ = std::move(weights);
  s.weight_sum_ = sum_of(s.weights_);
  s.ratio_ = q;
  return s;
}

SeriesSpec SeriesSpec::explicit_prefix(std::vector<Rational> terms, const Rational& rho) {
  if (terms.empty()) throw DomainError("explicit prefix must contain at least one term");
  for (const auto& t : terms) {
    if (!t.positive()) throw DomainError("prefix terms must be positive");
  }
  if (!(Rational(0, 1) < rho && rho < Rational(1, 1))) {
    throw DomainError("prefix tail ratio must lie in (0,1)");
  }
  SeriesSpec s;
  s.kind_ = SeriesKind::ExplicitPrefix;
  s.prefix_ = std::move(terms);
  s.prefix_rho_ = rho;
  s.ratio_ = from_rational(rho);
  return s;
}

SeriesSpec SeriesSpec::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  if (kind != "sine" && kind != "mgs") {
    throw DomainError("unknown series kind '" + kind + "' (expected 'sine' or 'mgs')");
  }
  std::vector<long long> k;
  std::optional<Rational> ratio;
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw DomainError("expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "k") {
      std::istringstream list(val);
      std::string item;
      while (std::getline(list, item, ',')) {
        try {
          std::size_t pos = 0;
          long long v = std::stoll(item, &pos);
          if (pos != item.size()) throw std::invalid_argument(item);
          k.push_back(v);
        } catch (const std::exception&) {
          throw DomainError("bad weight '" + item + "'");
        }
      }
    } else if ((key == "x" && kind == "sine") || (key == "q" && kind == "mgs")) {
      ratio = Rational::parse(val);
    } else {
      throw DomainError("unexpected key '" + key + "' in series spec");
    }
  }
  if (k.empty()) throw DomainError("series spec is missing k=...");
  if (!ratio) {
    throw DomainError(std::string("series spec is missing ") + (kind == "sine" ? "x=..." : "q=..."));
  }
  if (!(Rational(0, 1) < *ratio && *ratio < Rational(1, 1))) {
    throw DomainError((kind == "sine" ? std::string("x") : std::string("q")) +
                      " must lie in (0,1), got " + ratio->str());
  }
  return kind == "sine" ? sine(std::move(k), *ratio) : multigeometric(std::move(k), *ratio);
}

bool SeriesSpec::weights_sorted_nonincreasing() const {
  for (std::size_t i = 1; i < weights_.size(); ++i) {
    if (weights_[i] > weights_[i - 1]) return false;
  }
  return true;
}

std::string SeriesSpec::str() const {
  std::ostringstream out;
  if (kind_ == SeriesKind::ExplicitPrefix) {
    out << "prefix n=" << prefix_.size() << " rho=" << prefix_rho_.str();
    return out.str();
  }
  out << (kind_ == SeriesKind::Sine ? "sine k=" : "mgs k=");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out << ',';
    out << weights_[i];
  }
  out << (kind_ == SeriesKind::Sine ? " x=" : " q=");
  if (ratio_exact_) {
    out << ratio_exact_->str();
  } else {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", ratio_.mid());
    out << buf;
  }
  return out.str();
}

bool SeriesSpec::operator==(const SeriesSpec& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == SeriesKind::ExplicitPrefix) {
    return prefix_ == o.prefix_ && prefix_rho_ == o.prefix_rho_;
  }
  return weights_ == o.weights_ && ratio_ == o.ratio_;
}

Enclosure term(const SeriesSpec& spec, long long n) {
  if (n < 1) throw DomainError("term index must be >= 1");
  if (spec.kind() == SeriesKind::ExplicitPrefix) return prefix_term(spec, n);
  const long long m = static_cast<long long>(spec.block_size());
  const long long i = (n - 1) / m;
  const long long j = n - i * m;  // 1..m
  return scale(block_factor(spec, i), spec.weights()[static_cast<std::size_t>(j - 1)]);
}

int tail_horizon_blocks(const SeriesSpec& spec) {
  double r = spec.ratio().hi;
  double t = r;
  int h = 0;
  while (2.0 * t > kHorizonRelTol && h < kMaxHorizonBlocks) {
    t *= r;
    ++h;
  }
  return h;
}

Enclosure tail(const SeriesSpec& spec, long long n) {
  if (n < 0) throw DomainError("tail index must be >= 0");
  if (spec.kind() == SeriesKind::ExplicitPrefix) return prefix_tail(spec, n);
  const long long m = static_cast<long long>(spec.block_size());
  const long long i0 = n / m;  // block of term n+1
  const long long cut = i0 + tail_horizon_blocks(spec) + 1;
  Enclosure acc = tail_cut(spec, cut);
  for (long long b = cut - 1; b >= i0; --b) {
    Enclosure f = block_factor(spec, b);
    const long long first = b * m + 1;
    const long long last = (b + 1) * m;
    for (long long p = last; p >= std::max(first, n + 1); --p) {
      const long long j = p - b * m;
      acc = scale(f, spec.weights()[static_cast<std::size_t>(j - 1)]) + acc;
    }
  }
  return acc;
}

long long max_safe_index(const SeriesSpec& spec) {
  if (spec.kind() == SeriesKind::ExplicitPrefix) {
    return static_cast<long long>(spec.prefix().size());
  }
  const double lg = std::log2(spec.ratio().hi);  // negative
  const long long m = static_cast<long long>(spec.block_size());
  // deepest exponent used by tail(n) is n/m + H + 2; keep it under the
  // pow_int guard at 2^-1000
  const long long max_exponent = static_cast<long long>(std::floor(-1000.0 / lg));
  const long long b = max_exponent - tail_horizon_blocks(spec) - 2;
  return std::max<long long>(0, b * m);
}

}  // namespace subsums
