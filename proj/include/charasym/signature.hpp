#pragma once

#include <string>
#include <vector>

namespace charasym {

// Weakly decreasing integer N-tuple.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<long> parts);  // validates monotonicity

  static Signature zero(int n) { return Signature(std::vector<long>(static_cast<size_t>(n), 0)); }
  static Signature parse(const std::string& csv);  // "3,1,0"

  const std::vector<long>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  long operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
  long weight() const;  // |lambda|
  bool nonnegative() const { return parts_.empty() || parts_.back() >= 0; }
  Signature shifted(long c) const;
  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Signature& a, const Signature& b) { return a.parts_ != b.parts_; }
  friend bool operator<(const Signature& a, const Signature& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<long> parts_;
};

// Strictly decreasing tuple mu_i = lambda_i + N - i.
class StrictSignature {
 public:
  StrictSignature() = default;
  explicit StrictSignature(std::vector<long> parts);  // validates strictness

  static StrictSignature from(const Signature& lambda);
  Signature to_signature() const;

  const std::vector<long>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  long operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

 private:
  std::vector<long> parts_;
};

// True when mu interlaces kappa from below: kappa_{i+1} <= mu_i <= kappa_i,
// with len(mu) = len(kappa) - 1.
bool interlaces(const Signature& mu, const Signature& kappa);

// All signatures of length n with parts in [lo, hi].
std::vector<Signature> all_signatures(int n, long lo, long hi);

}  // namespace charasym
