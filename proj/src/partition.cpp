// Apache License, Version 2.0, refer to LICENSE.txt

#include "hicrp/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hicrp/math_util.hpp"
#include "json.hpp"

namespace hicrp {

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 0) throw std::invalid_argument("Partition: negative ground-set size");
  std::vector<int> label(n, -1);
  // Order blocks by least element, then relabel in that order.
  std::vector<std::pair<int, const std::vector<int>*>> order;
  order.reserve(blocks.size());
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("Partition: empty block");
    int least = *std::min_element(b.begin(), b.end());
    order.emplace_back(least, &b);
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int next = 0;
  for (const auto& [least, bp] : order) {
    (void)least;
    for (int e : *bp) {
      if (e < 0 || e >= n) throw std::invalid_argument("Partition: element out of range");
      if (label[e] != -1) throw std::invalid_argument("Partition: blocks are not disjoint");
      label[e] = next;
    }
    ++next;
  }
  for (int e = 0; e < n; ++e) {
    if (label[e] == -1) throw std::invalid_argument("Partition: blocks do not cover the ground set");
  }
  Partition out;
  out.label_of_ = std::move(label);
  out.num_blocks_ = next;
  return out;
}

Partition Partition::from_labels(std::span<const int> labels) {
  Partition out;
  out.label_of_.reserve(labels.size());
  std::map<int, int> seen;
  for (int x : labels) {
    auto [it, inserted] = seen.emplace(x, static_cast<int>(seen.size()));
    out.label_of_.push_back(it->second);
    (void)inserted;
  }
  out.num_blocks_ = static_cast<int>(seen.size());
  return out;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks_);
  for (int i = 0; i < n(); ++i) out[label_of_[i]].push_back(i);
  return out;
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> out(num_blocks_, 0);
  for (int l : label_of_) ++out[l];
  return out;
}

Partition Partition::restrict_to(std::span<const int> subset) const {
  if (subset.empty()) throw std::invalid_argument("restrict: empty subset");
  Partition out;
  out.label_of_.reserve(subset.size());
  std::vector<int> relabel(num_blocks_, -1);
  int next = 0;
  int prev = -1;
  for (int e : subset) {
    if (e < 0 || e >= n()) throw std::invalid_argument("restrict: index out of range");
    if (e <= prev) throw std::invalid_argument("restrict: subset must be sorted and distinct");
    prev = e;
    int& r = relabel[label_of_[e]];
    if (r == -1) r = next++;
    out.label_of_.push_back(r);
  }
  out.num_blocks_ = next;
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '{';
  auto bs = blocks();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    os << (i ? ",{" : "{");
    for (std::size_t j = 0; j < bs[i].size(); ++j) {
      os << (j ? "," : "") << bs[i][j] + 1;
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

bool CrpParams::is_valid() const {
  if (!std::isfinite(alpha) || !std::isfinite(theta)) return false;
  if (alpha == 1.0) return theta > -1.0;
  return alpha >= 0.0 && alpha < 1.0 && theta >= -alpha;
}

void CrpParams::validate() const {
  if (!is_valid()) {
    throw std::invalid_argument("CrpParams: need alpha in [0,1) with theta >= -alpha, or alpha == 1 with theta > -1");
  }
}

Partition samp(std::span<const std::string> sequence) {
  if (sequence.empty()) throw std::invalid_argument("samp: empty sequence");
  std::map<std::string, int> seen;
  std::vector<int> ids;
  ids.reserve(sequence.size());
  for (const auto& s : sequence) {
    auto [it, inserted] = seen.emplace(s, static_cast<int>(seen.size()));
    (void)inserted;
    ids.push_back(it->second);
  }
  return Partition::from_labels(ids);
}

Partition samp(std::span<const int> sequence) {
  if (sequence.empty()) throw std::invalid_argument("samp: empty sequence");
  return Partition::from_labels(sequence);
}

Partition crp_sample(const CrpParams& params, int n, Rng& rng) {
  params.validate();
  if (n < 1) throw std::invalid_argument("crp_sample: n must be >= 1");
  const double alpha = params.alpha;
  const double theta = params.theta;

  std::vector<int> label(n);
  if (alpha == 1.0) {  // deterministically all singletons
    for (int i = 0; i < n; ++i) label[i] = i;
    Partition out = Partition::from_labels(label);
    return out;
  }
  if (theta == -alpha) {  // deterministically one block
    return Partition::from_labels(std::vector<int>(n, 0));
  }

  std::vector<int> block_size;
  block_size.reserve(64);
  label[0] = 0;
  block_size.push_back(1);
  for (int i = 1; i < n; ++i) {
    const int k = static_cast<int>(block_size.size());
    int chosen;
    if (theta >= 0.0) {
      // O(1) urn step: copy the block of a uniformly chosen earlier element,
      // converting it to a new block with probability alpha/|block|; the
      // leftover theta mass opens a new block outright.
      const double total = static_cast<double>(i) + theta;
      const double u = rng.uniform01() * total;
      if (u >= static_cast<double>(i)) {
        chosen = k;
      } else {
        const int e = static_cast<int>(u);  // uniform earlier element
        const int b = label[e];
        if (alpha > 0.0 && rng.uniform01() < alpha / block_size[b]) {
          chosen = k;
        } else {
          chosen = b;
        }
      }
    } else {
      // theta in (-alpha, 0): linear scan over block weights.
      const double total = static_cast<double>(i) + theta;
      double u = rng.uniform01() * total;
      chosen = k;
      for (int b = 0; b < k; ++b) {
        u -= block_size[b] - alpha;
        if (u < 0.0) {
          chosen = b;
          break;
        }
      }
    }
    if (chosen == k) {
      block_size.push_back(1);
    } else {
      ++block_size[chosen];
    }
    label[i] = chosen;
  }
  return Partition::from_labels(label);  // urn order is first-occurrence order already
}

double log_eppf_sizes(std::span<const int> sizes, const CrpParams& params) {
  params.validate();
  const double alpha = params.alpha;
  const double theta = params.theta;
  const int k = static_cast<int>(sizes.size());
  long long n = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("log_eppf: block sizes must be positive");
    n += s;
  }
  if (k == 0) return 0.0;  // empty partition, probability one by convention

  if (alpha == 1.0) {
    return (n == k) ? 0.0 : kNegInf;
  }
  // Unified product form, valid on the whole parameter range:
  //   prod_{i=1}^{k-1} (theta + i alpha) * Gamma(theta+1)/Gamma(theta+n)
  //   * prod_j Gamma(s_j - alpha)/Gamma(1 - alpha).
  // theta == -alpha gives log(0) = -inf for k > 1 and exactly 0 for k == 1.
  double lp = 0.0;
  for (int i = 1; i < k; ++i) {
    const double term = theta + i * alpha;
    if (term <= 0.0) return kNegInf;
    lp += std::log(term);
  }
  lp += std::lgamma(theta + 1.0) - std::lgamma(theta + static_cast<double>(n));
  for (int s : sizes) {
    lp += std::lgamma(s - alpha) - std::lgamma(1.0 - alpha);
  }
  return lp;
}

double log_eppf(const Partition& pi, const CrpParams& params) {
  const auto sizes = pi.block_sizes();
  return log_eppf_sizes(sizes, params);
}

double log_eppf_hist(std::span<const std::pair<int, long long>> size_hist,
                     long long k, long long n, const CrpParams& params) {
  params.validate();
  const double alpha = params.alpha;
  const double theta = params.theta;
  if (k == 0) return 0.0;
  if (alpha == 1.0) return (n == k) ? 0.0 : kNegInf;
  double lp;
  if (alpha > 0.0) {
    if (!(theta > 0.0)) throw std::invalid_argument("log_eppf_hist: closed form needs theta > 0");
    // alpha^k Gamma(theta/alpha + k)/Gamma(theta/alpha) * Gamma(theta)/Gamma(theta+n)
    lp = k * std::log(alpha) + std::lgamma(theta / alpha + k) - std::lgamma(theta / alpha) +
         std::lgamma(theta) - std::lgamma(theta + static_cast<double>(n));
  } else {
    if (!(theta > 0.0)) throw std::invalid_argument("log_eppf_hist: needs theta > 0");
    lp = k * std::log(theta) + std::lgamma(theta) - std::lgamma(theta + static_cast<double>(n));
  }
  const double lg1ma = std::lgamma(1.0 - alpha);
  for (const auto& [size, count] : size_hist) {
    lp += count * (std::lgamma(size - alpha) - lg1ma);
  }
  return lp;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_partition: n must be >= 1");
  if (n > 12) throw std::invalid_argument("for_each_partition: n > 12 exceeds the enumeration guard");
  // Iterate restricted-growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
  std::vector<int> a(n, 0), mx(n, 0);
  for (;;) {
    Partition p = Partition::from_labels(a);
    visit(p);
    int i = n - 1;
    while (i > 0 && a[i] == mx[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    for (int j = i; j < n; ++j) {
      if (j > 0) mx[j] = std::max(mx[j - 1], a[j]);
      if (j > i) a[j] = 0;
    }
    for (int j = i + 1; j < n; ++j) mx[j] = std::max(mx[j - 1], a[j]);
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::string partition_to_json(const Partition& pi) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& b : pi.blocks()) {
    nlohmann::json jb = nlohmann::json::array();
    for (int e : b) jb.push_back(e + 1);
    j.push_back(jb);
  }
  return j.dump();
}

Partition partition_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::vector<int>> blocks;
  int n = 0;
  for (const auto& jb : j) {
    std::vector<int> b;
    for (const auto& e : jb) {
      int v = e.get<int>() - 1;
      b.push_back(v);
      n = std::max(n, v + 1);
    }
    blocks.push_back(std::move(b));
  }
  return Partition::from_blocks(n, blocks);
}

}  // namespace hicrp
