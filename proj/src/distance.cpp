/*
 * Copyright 2026 The sympair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sympair/distance.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <limits>
#include <thread>

namespace sympair {

std::string to_string(DistanceKind kind) { return kind == DistanceKind::kHamming ? "hamming" : "pair"; }

std::string to_string(Method method) {
  switch (method) {
    case Method::kAuto:
      return "auto";
    case Method::kFullEnumeration:
      return "full_enumeration";
    case Method::kSupportRank:
      return "support_rank";
  }
  return "unknown";
}

void Fnv1a::add(std::uint64_t v) {
  for (int i = 0; i < 4; ++i) {
    h_ ^= (v >> (8 * i)) & 0xffu;
    h_ *= 0x100000001b3ull;
  }
}

std::string hex_digest(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

ParityEvaluator::ParityEvaluator(const ConstacyclicCode& code) : tower_(code.tower_ptr()) {
  if (!code.root_base() || !code.defining_set()) {
    throw Error("support-rank engine needs a root base in GF(q^2) (n·ord(lambda) must divide q^2 - 1)");
  }
  const Field& big = tower_->big();
  const DefiningSet& T = *code.defining_set();
  exponents_ = T.residues;
  rn_ = T.modulus();
  powers_.resize(static_cast<std::size_t>(rn_));
  Elem x = Field::one();
  for (std::int64_t e = 0; e < rn_; ++e) {
    powers_[static_cast<std::size_t>(e)] = x;
    x = big.mul(x, *code.root_base());
  }
}

std::vector<Word> ParityEvaluator::evaluations(std::span<const std::uint32_t> positions) const {
  std::vector<Word> m(exponents_.size(), Word(positions.size()));
  for (std::size_t r = 0; r < exponents_.size(); ++r) {
    for (std::size_t c = 0; c < positions.size(); ++c) {
      m[r][c] = powers_[static_cast<std::size_t>(exponents_[r] * positions[c] % rn_)];
    }
  }
  return m;
}

std::size_t ParityEvaluator::nullity(std::span<const std::uint32_t> positions) const {
  return positions.size() - rank(tower_->big(), evaluations(positions));
}

std::vector<Word> ParityEvaluator::null_space(std::span<const std::uint32_t> positions) const {
  const Echelon e = row_reduce(tower_->big(), evaluations(positions));
  std::vector<Word> basis = kernel_basis(tower_->big(), e, positions.size());
  for (auto& v : basis) {
    for (auto& x : v) {
      if (!tower_->in_subfield(x)) {
        throw InvariantError("null-space basis leaves GF(q); defining set is not Galois-closed");
      }
      x = tower_->to_subfield(x);
    }
  }
  return basis;
}

namespace {

using Clock = std::chrono::steady_clock;

struct ScanHit {
  std::vector<std::uint32_t> positions;
  Word local;  // first null-space vector, indexed like positions
};

struct ScanResult {
  std::optional<ScanHit> hit;
  std::uint64_t scanned = 0;
  std::uint64_t digest = 0;
};

// Visits canonical supports level by level in a fixed order and stops at the
// first admissible one. Supports are buffered in chunks so that several
// workers can test a chunk; the reported hit is always the earliest in scan
// order, independent of the worker count.
class SupportScan {
 public:
  SupportScan(const ParityEvaluator& eval, const EngineOptions& options)
      : eval_(eval), options_(options), deadline_(Clock::now() + options.time_limit) {}

  bool run_level(const std::function<bool(const SupportVisitor&)>& level) {
    const bool completed = level([this](std::span<const std::uint32_t> s) {
      chunk_.emplace_back(s.begin(), s.end());
      if (chunk_.size() >= kChunk) return flush();
      return true;
    });
    if (!completed) return false;
    return flush();
  }

  ScanResult result() {
    result_.digest = digest_.value();
    return std::move(result_);
  }

 private:
  static constexpr std::size_t kChunk = 4096;

  bool flush() {
    if (chunk_.empty()) return true;
    if (Clock::now() > deadline_) throw BudgetExceeded("support scan exceeded the wall-clock cap");
    const std::size_t first = first_admissible();
    const std::size_t upto = first == kNone ? chunk_.size() : first + 1;
    for (std::size_t i = 0; i < upto; ++i) {
      digest_.add(chunk_[i].size());
      for (auto p : chunk_[i]) digest_.add(p);
    }
    result_.scanned += upto;
    if (result_.scanned > options_.max_patterns) {
      throw BudgetExceeded("support scan exceeded the pattern budget of " + std::to_string(options_.max_patterns));
    }
    if (first != kNone) {
      ScanHit hit;
      hit.positions = chunk_[first];
      hit.local = eval_.null_space(hit.positions).front();
      result_.hit = std::move(hit);
      chunk_.clear();
      return false;
    }
    chunk_.clear();
    return true;
  }

  std::size_t first_admissible() const {
    const unsigned workers = std::max(1u, options_.workers);
    if (workers == 1 || chunk_.size() < 64) {
      for (std::size_t i = 0; i < chunk_.size(); ++i) {
        if (eval_.nullity(chunk_[i]) > 0) return i;
      }
      return kNone;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{kNone};
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= chunk_.size() || i > best.load()) return;
        if (eval_.nullity(chunk_[i]) > 0) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return best.load();
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  const ParityEvaluator& eval_;
  const EngineOptions& options_;
  Clock::time_point deadline_;
  std::vector<std::vector<std::uint32_t>> chunk_;
  Fnv1a digest_;
  ScanResult result_;
};

void require_nonzero_dimension(const ConstacyclicCode& code) {
  if (code.dimension() == 0) throw Error("zero-dimensional code has no nonzero codewords");
}

std::uint64_t code_size(const ConstacyclicCode& code, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    size *= code.q();
    if (size > cap) return cap + 1;
  }
  return size;
}

DistanceCertificate full_enumeration(const ConstacyclicCode& code, DistanceKind kind,
                                     const EngineOptions& options) {
  require_nonzero_dimension(code);
  const std::uint64_t total = code_size(code, options.full_enumeration_limit);
  if (total > options.full_enumeration_limit) {
    throw BudgetExceeded("q^k exceeds the full-enumeration limit");
  }
  const auto start = Clock::now();
  const Field& f = code.field();
  const std::uint32_t p = f.characteristic();
  const std::size_t n = code.length();

  // GF(p)-basis of the code: beta_j * row_i with beta_j = x^j in GF(q).
  std::vector<Word> basis;
  for (const auto& row : code.generator_matrix()) {
    std::uint32_t beta = 1;
    for (std::uint32_t j = 0; j < f.degree(); ++j) {
      Word b(n);
      for (std::size_t c = 0; c < n; ++c) b[c] = f.mul(row[c], Elem{beta});
      basis.push_back(std::move(b));
      beta *= p;
    }
  }

  Word word(n, Field::zero());
  std::vector<std::uint32_t> digits(basis.size(), 0);
  Fnv1a digest;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Word witness;
  for (std::uint64_t step = 1; step < total; ++step) {
    for (std::size_t j = 0; j < digits.size(); ++j) {
      for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], basis[j][c]);
      if (++digits[j] < p) break;
      digits[j] = 0;
    }
    const std::size_t w = kind == DistanceKind::kHamming ? hamming_weight(word) : pair_weight(word);
    digest.add(w);
    if (w < best) {
      best = w;
      witness = word;
    }
    if ((step & 0xffff) == 0 && Clock::now() - start > options.time_limit) {
      throw BudgetExceeded("full enumeration exceeded the wall-clock cap");
    }
  }

  DistanceCertificate cert;
  cert.kind = kind;
  cert.value = best;
  cert.exact = true;
  cert.method = Method::kFullEnumeration;
  cert.search_bound = n;
  cert.witness = std::move(witness);
  cert.scanned_digest = digest.value();
  cert.scanned = total - 1;
  cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return cert;
}

DistanceCertificate support_rank(const ConstacyclicCode& code, DistanceKind kind, std::size_t bound,
                                 const EngineOptions& options) {
  require_nonzero_dimension(code);
  const auto start = Clock::now();
  const ParityEvaluator eval(code);
  const std::size_t n = code.length();
  SupportScan scan(eval, options);

  std::size_t level_hit = 0;
  if (kind == DistanceKind::kHamming) {
    for (std::size_t s = 1; s <= std::min(bound, n); ++s) {
      level_hit = s;
      if (!scan.run_level([&](const SupportVisitor& v) { return for_each_canonical_support(n, s, -1, v); })) break;
      level_hit = 0;
    }
  } else {
    for (std::size_t pw = 2; pw <= std::min(bound, n); ++pw) {
      level_hit = pw;
      if (!scan.run_level([&](const SupportVisitor& v) { return for_each_canonical_by_pair_weight(n, pw, v); })) {
        break;
      }
      level_hit = 0;
    }
  }
  ScanResult res = scan.result();

  DistanceCertificate cert;
  cert.kind = kind;
  cert.method = Method::kSupportRank;
  cert.search_bound = bound;
  cert.scanned = res.scanned;
  cert.scanned_digest = res.digest;
  if (res.hit) {
    Word w(n, Field::zero());
    for (std::size_t i = 0; i < res.hit->positions.size(); ++i) w[res.hit->positions[i]] = res.hit->local[i];
    const std::size_t weight = kind == DistanceKind::kHamming ? hamming_weight(w) : pair_weight(w);
    if (weight != level_hit || !code.contains(w)) {
      throw InvariantError("support-rank witness does not realize the level it was found at");
    }
    cert.value = level_hit;
    cert.exact = true;
    cert.witness = std::move(w);
  } else {
    cert.value = bound + 1;
    cert.exact = false;
  }
  cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return cert;
}

}  // namespace

DistanceCertificate min_hamming(const ConstacyclicCode& code, std::size_t w_max, const EngineOptions& options,
                                Method method) {
  if (w_max < 1) throw Error("w_max must be at least 1");
  if (method == Method::kAuto) {
    method = code.root_base() ? Method::kSupportRank : Method::kFullEnumeration;
  }
  if (method == Method::kFullEnumeration) return full_enumeration(code, DistanceKind::kHamming, options);
  return support_rank(code, DistanceKind::kHamming, w_max, options);
}

DistanceCertificate min_pair(const ConstacyclicCode& code, std::size_t pw_max, const EngineOptions& options,
                             Method method) {
  if (pw_max < 1) throw Error("pw_max must be at least 1");
  if (code.length() < 2) throw Error("pair distance needs length >= 2");
  if (method == Method::kAuto) {
    const bool small = code_size(code, options.full_enumeration_limit) <= options.full_enumeration_limit;
    method = small || !code.root_base() ? Method::kFullEnumeration : Method::kSupportRank;
  }
  if (method == Method::kFullEnumeration) return full_enumeration(code, DistanceKind::kPair, options);
  return support_rank(code, DistanceKind::kPair, pw_max, options);
}

SingletonResult singleton_check(const ConstacyclicCode& code, std::size_t d_pair) {
  const auto bound = static_cast<std::int64_t>(code.length()) - static_cast<std::int64_t>(d_pair) + 2;
  SingletonResult r;
  r.defect = bound - static_cast<std::int64_t>(code.dimension());
  r.mds = r.defect == 0;
  return r;
}

bool chen_relation(const ConstacyclicCode& code, const DistanceCertificate& hamming,
                   const DistanceCertificate& pair) {
  if (hamming.kind != DistanceKind::kHamming || pair.kind != DistanceKind::kPair) {
    throw Error("chen_relation needs a Hamming and a pair certificate");
  }
  if (!hamming.exact || !pair.exact) throw Error("chen_relation needs exact certificates");
  const std::size_t n = code.length();
  const std::size_t dh = hamming.value;
  if (dh < 2 || dh > n) throw Error("chen_relation needs 2 <= d_H <= n");
  const bool pair_gain = pair.value >= dh + 2;
  const bool not_mds = code.dimension() < n - dh + 1;
  return pair_gain == not_mds;
}

}  // namespace sympair
