// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef HICRP_PARTITION_HPP
#define HICRP_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hicrp/rng.hpp"

namespace hicrp {

// Set partition of {0, ..., n-1} in canonical form: blocks are ordered by
// least element and each block lists its elements in increasing order.
// Internally the partition is a restricted-growth string (`label_of`):
// element i carries the index of its block, and block indices appear in
// first-occurrence order. Immutable after construction.
class Partition {
 public:
  Partition() = default;

  // Canonicalizes arbitrary block input; throws if the blocks are not a
  // partition of {0,...,n-1}.
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  // Builds the partition induced by label equality (elements with equal
  // labels share a block). Works for any comparable label type via the
  // integer overload; `samp` below is the string-token entry point.
  static Partition from_labels(std::span<const int> labels);

  int n() const { return static_cast<int>(label_of_.size()); }
  int num_blocks() const { return num_blocks_; }
  bool empty() const { return label_of_.empty(); }

  // Block index of an element, in canonical (least-element) order.
  const std::vector<int>& label_of() const { return label_of_; }

  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  bool is_all_singletons() const { return num_blocks_ == n(); }
  bool is_single_block() const { return num_blocks_ == (n() > 0 ? 1 : 0); }

  // Induced partition on a sorted list of distinct elements, re-indexed to
  // {0,...,|subset|-1}. Throws on out-of-range or unsorted input.
  Partition restrict_to(std::span<const int> subset) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.label_of_ <=> b.label_of_;
  }

  std::string to_string() const;

 private:
  std::vector<int> label_of_;
  int num_blocks_ = 0;
};

// CRP parameters (alpha, theta). Valid ranges: alpha in [0,1) with
// theta >= -alpha, or alpha == 1 with theta > -1.
struct CrpParams {
  double alpha = 0.0;
  double theta = 1.0;

  bool is_valid() const;
  void validate() const;  // throws std::invalid_argument
};

// Partition induced by a sequence of label tokens; indices sharing a token
// share a block. Throws on an empty sequence.
Partition samp(std::span<const std::string> sequence);
Partition samp(std::span<const int> sequence);

// Sequential urn sample of a CRP(alpha, theta) partition of n elements.
Partition crp_sample(const CrpParams& params, int n, Rng& rng);

// Log probability of `pi` under CRP_n(alpha, theta); the EPPF depends on the
// block sizes only. theta == -alpha yields -inf for more than one block
// rather than an error. All arithmetic is in log space via lgamma.
double log_eppf(const Partition& pi, const CrpParams& params);
double log_eppf_sizes(std::span<const int> sizes, const CrpParams& params);

// Histogram form used in inference hot loops: (block size, multiplicity)
// pairs. Requires theta > 0 when alpha > 0 (closed form via lgamma ratios).
double log_eppf_hist(std::span<const std::pair<int, long long>> size_hist,
                     long long k, long long n, const CrpParams& params);

// Visits every partition of {0,...,n-1} exactly once in canonical
// (restricted-growth) order. Guarded at n <= 12 (Bell-number blowup).
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(int n);

// JSON round trip as a list of lists of 1-based indices.
std::string partition_to_json(const Partition& pi);
Partition partition_from_json(const std::string& text);

}  // namespace hicrp

#endif
