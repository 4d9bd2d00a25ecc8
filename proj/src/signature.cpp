#include "charasym/signature.hpp"

#include <sstream>

#include "charasym/errors.hpp"

namespace charasym {

Signature::Signature(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) throw ArgumentError("signature must be weakly decreasing: " + to_string());
}

Signature Signature::parse(const std::string& csv) {
  std::vector<long> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw ArgumentError("bad signature entry: '" + item + "'");
    }
    if (used != item.size()) throw ArgumentError("bad signature entry: '" + item + "'");
    parts.push_back(v);
  }
  return Signature(std::move(parts));
}

long Signature::weight() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

Signature Signature::shifted(long c) const {
  std::vector<long> p = parts_;
  for (long& v : p) v += c;
  return Signature(std::move(p));
}

std::string Signature::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

StrictSignature::StrictSignature(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] >= parts_[i - 1]) throw ArgumentError("strict signature must be strictly decreasing");
}

StrictSignature StrictSignature::from(const Signature& lambda) {
  const int n = lambda.size();
  std::vector<long> mu(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) mu[static_cast<size_t>(i)] = lambda[i] + (n - 1 - i);
  return StrictSignature(std::move(mu));
}

Signature StrictSignature::to_signature() const {
  const int n = size();
  std::vector<long> lam(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) lam[static_cast<size_t>(i)] = parts_[static_cast<size_t>(i)] - (n - 1 - i);
  return Signature(std::move(lam));
}

bool interlaces(const Signature& mu, const Signature& kappa) {
  if (mu.size() + 1 != kappa.size()) return false;
  for (int i = 0; i < mu.size(); ++i)
    if (mu[i] > kappa[i] || mu[i] < kappa[i + 1]) return false;
  return true;
}

std::vector<Signature> all_signatures(int n, long lo, long hi) {
  std::vector<Signature> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long upper) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (long v = upper; v >= lo; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, hi);
  return out;
}

}  // namespace charasym
