// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "icgr/cgr.hpp"
#include "icgr/codec.hpp"
#include "icgr/icgr.hpp"

using namespace icgr;

namespace {

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail << what;
    }
  }
};

Sequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> base(0, 3);
  Sequence s(n);
  for (auto& b : s) b = static_cast<Nucleotide>(base(rng));
  return s;
}

TriInteger tri(std::uint64_t n, long x, long y) { return {n, BigInt(x), BigInt(y)}; }

// ---------------------------------------------------------------------------

void encoding_walk(Check& c) {
  const Sequence s = parse_sequence("CGTAACTAGT");
  c.expect(encode(s) == tri(10, -203, 441), "encode != (10, -203, 441)");
  const long xs[] = {-1, 1, -3, 5, 21, -11, -75, 53, 309, -203};
  const long ys[] = {-1, -3, 1, 9, 25, -7, 57, 185, -71, 441};
  const IntTrajectory t = encode_trajectory(s);
  c.expect(t.size() == 10, "trajectory length");
  for (std::size_t i = 0; i < t.size() && i < 10; ++i) {
    c.expect(t[i].x == xs[i] && t[i].y == ys[i], "row p_" + std::to_string(i + 1));
  }
  c.detail << (c.ok ? "(10, -203, 441), 10/10 rows" : "");
}

void decoding_walk(Check& c) {
  const TriInteger input = tri(10, 659, 783);
  c.expect(to_string(decode(input)) == "ATTGCCGTAA", "decode != ATTGCCGTAA");
  const DecodeTrace trace = decode_stepwise(input);
  c.expect(to_string(trace.sequence) == "ATTGCCGTAA", "stepwise decode mismatch");
  // Columns i = 10 .. 1.
  const long xs[] = {659, 147, -109, 19, -45, -13, 3, -5, -1, 1};
  const long ys[] = {783, 271, 15, -113, -49, -17, -1, 7, 3, 1};
  for (std::size_t r = 0; r < 10; ++r) {
    const std::size_t i = 10 - r;
    c.expect(trace.residuals[i - 1].x == xs[r] && trace.residuals[i - 1].y == ys[r],
             "residual p_" + std::to_string(i));
  }
  c.detail << (c.ok ? "ATTGCCGTAA, 10/10 residuals" : "");
}

void integer_trajectory(Check& c) {
  const IntTrajectory t = encode_trajectory(parse_sequence("TAGCA"));
  const long expected[5][2] = {{-1, 1}, {1, 3}, {5, -1}, {-3, -9}, {13, 7}};
  c.expect(t.size() == 5, "trajectory length");
  for (std::size_t i = 0; i < 5 && i < t.size(); ++i) {
    c.expect(t[i].x == expected[i][0] && t[i].y == expected[i][1],
             "point " + std::to_string(i + 1));
  }
  c.detail << (c.ok ? "5/5 points" : "");
}

void classical_points(Check& c) {
  constexpr double kTolerance = 1e-12;
  const FloatTrajectory t = classical_cgr(parse_sequence("TAGCA"));
  const double expected[5][2] = {
      {-0.5, 0.5}, {0.25, 0.75}, {0.625, -0.125}, {-0.1875, -0.5625}, {0.40625, 0.21875}};
  double worst = 0;
  for (std::size_t i = 0; i < 5 && i < t.size(); ++i) {
    worst = std::max({worst, std::abs(t[i].x - expected[i][0]), std::abs(t[i].y - expected[i][1])});
  }
  c.expect(t.size() == 5, "trajectory length");
  c.expect(worst <= kTolerance, "max error above 1e-12");
  c.detail << "max |error| = " << worst;
}

void round_trip(Check& c) {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> length(1, 2000);
  int failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Sequence s = random_sequence(rng, length(rng));
    if (decode(encode(s)) != s) ++failures;
  }
  c.expect(failures == 0, std::to_string(failures) + " failures");
  c.detail << (c.ok ? "10000 sequences, 0 failures" : "");
}

void bijection(Check& c) {
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0; n <= 8; ++n) {
    const std::uint64_t total = 1ull << (2 * n);
    std::set<std::pair<long, long>> images;
    bool inverted = true;
    for (std::uint64_t code = 0; code < total; ++code) {
      Sequence s(n);
      for (std::uint64_t i = 0; i < n; ++i) s[i] = static_cast<Nucleotide>((code >> (2 * i)) & 3);
      const TriInteger t = encode(s);
      images.insert({t.x.get_si(), t.y.get_si()});
      inverted = inverted && decode(t) == s;
      ++checked;
    }
    // Enumerate the target set independently.
    std::set<std::pair<long, long>> target;
    if (n == 0) {
      target.insert({0, 0});
    } else {
      const long bound = (1l << n) - 1;
      for (long x = -bound; x <= bound; x += 2) {
        for (long y = -bound; y <= bound; y += 2) target.insert({x, y});
      }
    }
    c.expect(images.size() == total, "collision at n=" + std::to_string(n));
    c.expect(images == target, "image set mismatch at n=" + std::to_string(n));
    c.expect(inverted, "decode failed at n=" + std::to_string(n));
  }
  c.detail << (c.ok ? std::to_string(checked) + " sequences, n = 0..8" : "");
}

void compression(Check& c) {
  constexpr double kLow = 1.95, kHigh = 2.06;
  constexpr double kReferenceMean = 2.041, kMeanTolerance = 0.01;
  std::mt19937_64 rng(171);
  double sum = 0, lo = 1e9, hi = 0;
  bool binary_exact = true;
  const double binary_expected = 2.0 * 22 * 8 / 171.0;  // 2 * ceil(171/8) * 8 / 171
  for (int trial = 0; trial < 100; ++trial) {
    const CompressionStats s = stats(chunk_encode({"r", random_sequence(rng, 171), 0}, 1024));
    const double bpn = s.bits_per_nt_text();
    sum += bpn;
    lo = std::min(lo, bpn);
    hi = std::max(hi, bpn);
    binary_exact = binary_exact && s.bits_binary == 352 && s.bits_per_nt_binary() == binary_expected;
  }
  const double mean = sum / 100;
  c.expect(lo >= kLow && hi <= kHigh, "bits/nt outside [1.95, 2.06]");
  c.expect(std::abs(mean - kReferenceMean) <= kMeanTolerance, "mean not within 0.01 of 2.041");
  c.expect(binary_exact, "binary payload != 352 bits");
  c.detail << "text bits/nt in [" << lo << ", " << hi << "], mean " << mean
           << "; binary " << binary_expected << " bits/nt";
}

void error_detection(Check& c) {
  std::mt19937_64 rng(8);
  int rejected = 0, positioned = 0, accepted = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t n = 1 + rng() % 300;
    Sequence s = random_sequence(rng, n);
    TriInteger t = encode(s);
    BigInt& coord = (rng() & 1) ? t.x : t.y;
    if (trial % 2 == 0) {
      coord += (rng() & 1) ? 1 : -1;  // even
    } else {
      // Odd magnitude in (2^n - 1, 2^(n+2)).
      const BigInt top = BigInt(1) << static_cast<mp_bitcnt_t>(n);
      const BigInt extra = BigInt(static_cast<unsigned long>(rng() % 1000)) % top;
      const BigInt mag = top + 1 + 2 * extra;
      coord = (rng() & 1) ? mag : BigInt(-mag);
    }
    if (!validate(t)) ++rejected;
    try {
      decode(t);
    } catch (const InvalidTriInteger& e) {
      if (e.position() >= 1 && e.position() <= n) ++positioned;
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    // Valid triple from a random sign vector: X = sum of +-2^(i-1).
    TriInteger t;
    t.n = 1 + rng() % 300;
    BigInt power = 1;
    for (std::uint64_t i = 0; i < t.n; ++i, power *= 2) {
      t.x += (rng() & 1) ? power : BigInt(-power);
      t.y += (rng() & 1) ? power : BigInt(-power);
    }
    bool ok = static_cast<bool>(validate(t));
    try {
      ok = ok && encode(decode(t)) == t;
    } catch (const Error&) {
      ok = false;
    }
    if (ok) ++accepted;
  }
  c.expect(rejected == 1000, "validate accepted an invalid triple");
  c.expect(positioned == 1000, "decode missed an invalid triple or gave no position");
  c.expect(accepted == 1000, "a valid triple was rejected");
  c.detail << "invalid: " << rejected << "/1000 rejected, " << positioned
           << "/1000 positioned; valid: " << accepted << "/1000 accepted";
}

void mutation_diff(Check& c) {
  std::mt19937_64 rng(9);
  int exact = 0, deltas = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Sequence s = random_sequence(rng, 1 + rng() % 1000);
    const std::size_t pos = rng() % s.size();
    Sequence m = s;
    m[pos] = static_cast<Nucleotide>((static_cast<unsigned>(s[pos]) + 1 + rng() % 3) % 4);
    const TriInteger a = encode(s), b = encode(m);
    const std::vector<MutationEvent> events = diff(a, b);
    if (events == std::vector<MutationEvent>{{pos + 1, s[pos], m[pos]}}) ++exact;
    const BigInt step = BigInt(1) << static_cast<mp_bitcnt_t>(pos + 1);
    const BigInt dx = b.x - a.x, dy = b.y - a.y;
    auto in_set = [&](const BigInt& d) { return d == 0 || d == step || d == -step; };
    if (in_set(dx) && in_set(dy) && !(dx == 0 && dy == 0)) ++deltas;
  }
  c.expect(exact == 1000, "diff missed a planted event");
  c.expect(deltas == 1000, "coordinate delta outside {0, +-2^i}");
  c.detail << exact << "/1000 events exact, " << deltas << "/1000 deltas in {0, +-2^i}";
}

void performance(Check& c) {
  constexpr double kBudgetSeconds = 5.0;
  std::mt19937_64 rng(10);
  const SequenceRecord input{"million", random_sequence(rng, 1'000'000), 0};
  const auto start = std::chrono::steady_clock::now();
  const std::vector<EncodedRecord> encoded{chunk_encode(input, 1024)};
  const std::string container = write_binary(encoded);
  const std::vector<EncodedRecord> restored = read_binary(container);
  const SequenceRecord decoded = decode_record(restored.at(0));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(decoded == input, "round trip mismatch");
  c.expect(seconds < kBudgetSeconds, "exceeded 5 s");
  c.detail << "encode+write+read+decode " << seconds << " s, " << container.size() << " bytes ("
           << 8.0 * static_cast<double>(container.size()) / 1e6 << " bits/nt)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"AC1  CGTAACTAGT encoding walk", encoding_walk},
      {"AC2  (10, 659, 783) decoding walk", decoding_walk},
      {"AC3  TAGCA integer trajectory", integer_trajectory},
      {"AC4  TAGCA classical CGR", classical_points},
      {"AC5  round trip, 10000 random", round_trip},
      {"AC6  exhaustive bijection n<=8", bijection},
      {"AC7  bits per nucleotide", compression},
      {"AC8  error detection", error_detection},
      {"AC9  single-mutation diff", mutation_diff},
      {"AC10 1M-nt chunked pipeline", performance},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check check;
    try {
      run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail << "exception: " << e.what();
    }
    if (!check.ok) ++failed;
    std::cout << (check.ok ? "[PASS] " : "[FAIL] ") << name << " - " << check.detail.str()
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
